#pragma once

#include "wallcross/chamber.hpp"
#include "wallcross/conjugacy.hpp"
#include "wallcross/invariant_expr.hpp"
#include "wallcross/knot.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace wallcross {

/// A wall edge between two chambers. `delta` is the exact change of the
/// invariant when moving from chamber `from` to chamber `to`:
///   value(to) - value(from) = delta.
struct GraphEdge {
    std::string from;
    std::string to;
    WallDatum datum;
    InvariantExpr delta;
};

/// A boundary edge from the chamber containing a central regular value
/// omega; the invariants there are related by the flag-variety Euler number:
///   value(chamber) = flag_chi * value(omega).
struct OmegaEdge {
    std::string chamber;
    ConjugacyClass omega;
    std::int64_t flag_chi = 0;
};

struct ChamberGraph {
    int n = 0;
    int k = 0;
    int genus = 0;
    FibredKnot knot;
    std::vector<Hyperplane> arrangement;
    std::vector<Chamber> chambers;
    std::vector<GraphEdge> edges;
    std::vector<OmegaEdge> boundary;

    const Chamber& chamber(const std::string& id) const;
};

struct InvariantAssignment {
    std::map<std::string, InvariantExpr> values;  // chamber id -> expression
    std::set<std::string> base_symbols;           // symbols left free
};

struct ConsistencyReport {
    bool consistent = true;
    std::vector<std::string> violations;
};

enum class TraversalOrder { breadth_first, depth_first };

using FiberDimMap = std::map<std::pair<std::vector<int>, int>, std::pair<int, int>>;

/// The full chamber graph of one sector: chambers, wall edges with their
/// splitting data, codimension and jump expressions, and boundary edges to
/// the central regular values reachable without crossing a wall. Supplied
/// fiber dimensions are validated against a + b + 1 = codim; codimension-one
/// walls force (a, b) = (0, 0) on their own.
ChamberGraph build_graph(int n, int k, int genus, const FibredKnot& knot,
                         const FiberDimMap& fiber_dims = {});

/// The invariant attached to a lower-rank class: the integer det(I - M) at
/// rank one, and an opaque symbol "mu(rank; angles)" at rank >= 2. The
/// symbol name is a function of the class alone, so repeated calls intern.
InvariantExpr lower_rank_invariant(int rank, const ConjugacyClass& cls,
                                   const FibredKnot& knot);

/// The jump across a wall from the beta side to the alpha side:
/// (chi(CP^a) - chi(CP^b)) mu(gamma1) mu(gamma2), with the Euler bracket kept
/// as the symbol "chi(wall)" when the fiber dimensions are unknown.
InvariantExpr wall_jump(const WallDatum& datum, const FibredKnot& knot);

/// Assign an expression to every chamber by traversing wall edges from the
/// anchor. Components not containing the anchor get fresh deterministic
/// anchor symbols "mu(n; chamber-id)". Two distinct paths that disagree
/// raise an error naming the offending cycle.
InvariantAssignment propagate(const ChamberGraph& graph, const std::string& anchor,
                              const InvariantExpr& anchor_value,
                              TraversalOrder order = TraversalOrder::breadth_first);

/// mu(omega) = value(chamber) / n!, when the division is exact. A failed
/// division on valid data contradicts the flag-bundle relation and is
/// reported as such.
InvariantExpr boundary_relation(const InvariantAssignment& assignment,
                                const std::string& chamber_id, const OmegaEdge& edge);

/// Signed jump sums around a cycle basis of the chamber graph; all must
/// vanish for the invariants to be well defined.
ConsistencyReport check_loop_consistency(const ChamberGraph& graph);

}  // namespace wallcross
