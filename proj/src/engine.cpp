#include "wallcross/engine.hpp"

#include "wallcross/error.hpp"
#include "wallcross/polynomial.hpp"

#include <algorithm>
#include <deque>

namespace wallcross {

namespace {

int chamber_index(const std::vector<Chamber>& chambers, const std::string& id) {
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        if (chambers[i].id == id) return static_cast<int>(i);
    }
    throw Error(ErrorKind::invalid_input, "unknown chamber id " + id);
}

}  // namespace

const Chamber& ChamberGraph::chamber(const std::string& id) const {
    return chambers[chamber_index(chambers, id)];
}

InvariantExpr lower_rank_invariant(int rank, const ConjugacyClass& cls,
                                   const FibredKnot& knot) {
    if (rank < 1) throw Error(ErrorKind::invalid_input, "rank must be positive");
    if (rank == 1) {
        // Rank one: the representation space is the 2g-torus of characters
        // and the induced map has Lefschetz number det(I - M).
        return InvariantExpr::constant(jacobian_lefschetz_number(knot));
    }
    return InvariantExpr::symbol("mu(" + std::to_string(rank) + "; " + cls.id() + ")");
}

InvariantExpr wall_jump(const WallDatum& datum, const FibredKnot& knot) {
    InvariantExpr bracket;
    if (datum.fiber_dims) {
        const auto [a, b] = *datum.fiber_dims;
        bracket = InvariantExpr::constant(cp_euler(a) - cp_euler(b));
    } else {
        // Unknown split of a + b = codim - 1: keep chi(CP^a) - chi(CP^b)
        // symbolic rather than guess.
        bracket = InvariantExpr::symbol("chi(" + datum.wall.id() + ")");
    }
    const InvariantExpr mu1 =
        lower_rank_invariant(datum.gamma1.n, datum.gamma1, knot);
    const InvariantExpr mu2 =
        lower_rank_invariant(datum.gamma2.n, datum.gamma2, knot);
    return bracket * mu1 * mu2;
}

ChamberGraph build_graph(int n, int k, int genus, const FibredKnot& knot,
                         const FiberDimMap& fiber_dims) {
    ChamberGraph graph;
    graph.n = n;
    graph.k = k;
    graph.genus = genus;
    graph.knot = knot;
    graph.arrangement = enumerate_hyperplanes(n, k);
    graph.chambers = enumerate_chambers(n, k);

    for (std::size_t i = 0; i < graph.chambers.size(); ++i) {
        for (std::size_t j = i + 1; j < graph.chambers.size(); ++j) {
            const auto wall =
                adjacent_chambers(graph.chambers[i], graph.chambers[j], graph.arrangement);
            if (!wall) continue;

            WallDatum datum = wall_splitting(generic_wall_point(*wall), *wall);
            const auto supplied = fiber_dims.find({wall->subset, wall->level});
            if (supplied != fiber_dims.end()) {
                datum.fiber_dims = supplied->second;
            }
            wall_codimension(datum, genus);  // also validates supplied (a, b)
            if (!datum.fiber_dims && datum.codim == 1) {
                datum.fiber_dims = std::make_pair(0, 0);  // forced by a+b+1=1
            }

            GraphEdge edge;
            edge.from = graph.chambers[i].id;
            edge.to = graph.chambers[j].id;
            edge.datum = datum;
            // Jump is oriented beta -> alpha; flip if `to` is the beta side.
            const std::vector<Hyperplane> good = good_hyperplanes(graph.arrangement);
            int wall_pos = -1;
            for (std::size_t w = 0; w < good.size(); ++w) {
                if (good[w] == *wall) wall_pos = static_cast<int>(w);
            }
            const InvariantExpr jump = wall_jump(datum, knot);
            edge.delta = graph.chambers[j].signs[wall_pos] > 0 ? jump : -jump;
            graph.edges.push_back(std::move(edge));
        }
    }

    for (const ConjugacyClass& omega : central_regular_values(n)) {
        if (omega.sector() != k) continue;
        const Chamber located = locate_chamber(omega.angles, graph.arrangement);
        for (const Chamber& chamber : graph.chambers) {
            if (chamber.signs == located.signs) {
                graph.boundary.push_back(OmegaEdge{chamber.id, omega, flag_euler(n)});
                break;
            }
        }
    }
    return graph;
}

InvariantAssignment propagate(const ChamberGraph& graph, const std::string& anchor,
                              const InvariantExpr& anchor_value, TraversalOrder order) {
    chamber_index(graph.chambers, anchor);  // validate

    InvariantAssignment out;
    for (const auto& sym : anchor_value.free_symbols()) out.base_symbols.insert(sym);

    // Adjacency with signed deltas, in deterministic edge order.
    std::map<std::string, std::vector<std::pair<std::string, InvariantExpr>>> adj;
    for (const GraphEdge& edge : graph.edges) {
        adj[edge.from].push_back({edge.to, edge.delta});
        adj[edge.to].push_back({edge.from, -edge.delta});
        for (const auto& sym : edge.delta.free_symbols()) out.base_symbols.insert(sym);
    }

    auto traverse = [&](const std::string& root, const InvariantExpr& root_value) {
        std::deque<std::string> frontier = {root};
        out.values[root] = root_value;
        while (!frontier.empty()) {
            std::string current;
            if (order == TraversalOrder::breadth_first) {
                current = frontier.front();
                frontier.pop_front();
            } else {
                current = frontier.back();
                frontier.pop_back();
            }
            for (const auto& [next, delta] : adj[current]) {
                const InvariantExpr candidate = out.values[current] + delta;
                auto it = out.values.find(next);
                if (it == out.values.end()) {
                    out.values[next] = candidate;
                    frontier.push_back(next);
                } else if (!(it->second == candidate)) {
                    throw Error(ErrorKind::contradiction,
                                "inconsistent cycle through " + current + " -> " + next +
                                    ": " + it->second.str() + " vs " + candidate.str());
                }
            }
        }
    };

    traverse(anchor, anchor_value);
    // Components without the anchor are rooted at their first chamber with a
    // fresh symbol.
    for (const Chamber& chamber : graph.chambers) {
        if (out.values.count(chamber.id)) continue;
        const InvariantExpr fresh = InvariantExpr::symbol(
            "mu(" + std::to_string(graph.n) + "; " + chamber.id + ")");
        out.base_symbols.insert(*fresh.free_symbols().begin());
        traverse(chamber.id, fresh);
    }
    return out;
}

InvariantExpr boundary_relation(const InvariantAssignment& assignment,
                                const std::string& chamber_id, const OmegaEdge& edge) {
    if (edge.chamber != chamber_id) {
        throw Error(ErrorKind::invalid_input,
                    "no boundary edge from chamber " + chamber_id);
    }
    const auto it = assignment.values.find(chamber_id);
    if (it == assignment.values.end()) {
        throw Error(ErrorKind::invalid_input, "chamber " + chamber_id + " has no value");
    }
    const auto quotient = it->second.divide_exact(edge.flag_chi);
    if (!quotient) {
        throw Error(ErrorKind::contradiction,
                    "value " + it->second.str() + " of chamber " + chamber_id +
                        " is not divisible by the flag Euler number " +
                        std::to_string(edge.flag_chi));
    }
    return *quotient;
}

ConsistencyReport check_loop_consistency(const ChamberGraph& graph) {
    ConsistencyReport report;

    // Potentials on a spanning forest; every non-tree edge closes one cycle
    // of a cycle basis and must agree with the potential difference.
    std::map<std::string, InvariantExpr> potential;
    std::vector<bool> in_tree(graph.edges.size(), false);

    for (const Chamber& root : graph.chambers) {
        if (potential.count(root.id)) continue;
        potential[root.id] = InvariantExpr::constant(0);
        std::deque<std::string> frontier = {root.id};
        while (!frontier.empty()) {
            const std::string current = frontier.front();
            frontier.pop_front();
            for (std::size_t e = 0; e < graph.edges.size(); ++e) {
                const GraphEdge& edge = graph.edges[e];
                std::string next;
                InvariantExpr delta;
                if (edge.from == current) {
                    next = edge.to;
                    delta = edge.delta;
                } else if (edge.to == current) {
                    next = edge.from;
                    delta = -edge.delta;
                } else {
                    continue;
                }
                if (!potential.count(next)) {
                    in_tree[e] = true;
                    potential[next] = potential[current] + delta;
                    frontier.push_back(next);
                }
            }
        }
    }

    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        if (in_tree[e]) continue;
        const GraphEdge& edge = graph.edges[e];
        const InvariantExpr residual =
            potential[edge.from] + edge.delta - potential[edge.to];
        if (!residual.is_zero()) {
            report.consistent = false;
            report.violations.push_back(
                "cycle through edge " + edge.from + " -> " + edge.to +
                " (wall " + edge.datum.wall.id() + ") has nonzero jump sum " +
                residual.str());
        }
    }
    return report;
}

}  // namespace wallcross
