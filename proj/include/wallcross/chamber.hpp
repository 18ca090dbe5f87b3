#pragma once

#include "wallcross/conjugacy.hpp"
#include "wallcross/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wallcross {

/// One critical-value hyperplane  sum_{i in S} a_i = d  inside the sector
/// W_k of the class space. The pair (S, d) and its complement (S^c, k - d)
/// cut out the same locus; the canonical form keeps the lexicographically
/// smaller subset. Bad hyperplanes are those whose intersection with the
/// sector lies inside the faces a_1 = 0 or a_n = 1, which get identified
/// across sectors when the class space is reassembled.
struct Hyperplane {
    int n = 0;
    int sector_k = 0;
    std::vector<int> subset;  // sorted 1-based indices, proper and nonempty
    int level = 0;            // d
    bool bad = false;

    /// Stable text form "S=1,4;d=1", used for report keys and symbols.
    std::string id() const;

    /// sum_{i in S} point_i - d; zero exactly on the hyperplane.
    Rational evaluate(const std::vector<Rational>& point) const;

    bool same_locus(const Hyperplane& other) const;
    bool operator==(const Hyperplane&) const = default;
};

/// A chamber of a sector: one sign per good hyperplane (+1 on the side where
/// the subset sum exceeds the level) plus a rational interior representative
/// with pairwise distinct angles.
struct Chamber {
    int n = 0;
    int sector_k = 0;
    std::string id;           // "C0", "C1", ... in enumeration order
    std::vector<int> signs;   // +1 / -1, aligned with the good hyperplanes
    std::vector<Rational> representative;
};

/// The data attached to a generic point gamma of one wall: the forced
/// splitting into lower-rank classes, the complex codimension of the
/// reducible locus, and the projective fiber dimensions (a, b) when known.
struct WallDatum {
    Hyperplane wall;
    ConjugacyClass gamma;
    ConjugacyClass gamma1;  // rank |S|, angle sum d
    ConjugacyClass gamma2;  // rank n - |S|, angle sum k - d
    int codim = 0;          // 0 until computed
    std::optional<std::pair<int, int>> fiber_dims;  // (a, b), a + b + 1 = codim
    std::string side_convention = "alpha side: sum_S(angles) > d";
};

/// All hyperplanes (good and bad) meeting the closed sector W_k in
/// codimension one, in canonical form, deterministically ordered.
std::vector<Hyperplane> enumerate_hyperplanes(int n, int k);

/// Only the good hyperplanes of the arrangement.
std::vector<Hyperplane> good_hyperplanes(const std::vector<Hyperplane>& arrangement);

/// Sign vector of an interior point against every good hyperplane.
Chamber locate_chamber(const std::vector<Rational>& point,
                       const std::vector<Hyperplane>& arrangement);

/// One chamber per realizable sign vector, each with a deterministic
/// rational representative with pairwise distinct angles.
std::vector<Chamber> enumerate_chambers(int n, int k);

/// The unique good hyperplane separating two chambers that share a facet;
/// nullopt when the chambers are not adjacent.
std::optional<Hyperplane> adjacent_chambers(const Chamber& c1, const Chamber& c2,
                                            const std::vector<Hyperplane>& arrangement);

/// Smallest-denominator interior point of a good wall lying on no other
/// subset-sum hyperplane and having pairwise distinct angles.
ConjugacyClass generic_wall_point(const Hyperplane& wall);

/// Split a generic wall point into its two lower-rank classes.
WallDatum wall_splitting(const ConjugacyClass& gamma, const Hyperplane& wall);

/// Complex codimension of the reducible locus R_{gamma1} x R_{gamma2}:
/// (D - D1 - D2)/2 where D is the chamber-generic dimension at rank n and
/// D1, D2 the dimensions of the split representation spaces. Records the
/// value into the datum.
int wall_codimension(WallDatum& datum, int genus);

}  // namespace wallcross
