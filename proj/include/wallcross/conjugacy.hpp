#pragma once

#include "wallcross/rational.hpp"

#include <string>
#include <vector>

namespace wallcross {

/// A conjugacy class of SU_n, stored as the sorted eigenvalue angles
/// 0 <= a_1 <= ... <= a_n < 1 with integral sum k (the sector index).
struct ConjugacyClass {
    int n = 0;
    std::vector<Rational> angles;

    /// The integral angle sum.
    int sector() const;

    /// Run lengths of equal angles; these sum to n.
    std::vector<int> multiplicities() const;

    /// Canonical text form "a_1,...,a_n".
    std::string id() const;

    bool operator==(const ConjugacyClass&) const = default;
};

/// Sort and reduce arbitrary rational angles mod 1. The reduced sum must be
/// an integer; otherwise the input does not describe a class of SU_n.
ConjugacyClass normalize(const std::vector<Rational>& raw_angles);

/// Dimension of the conjugation orbit: n^2 minus the sum of squared
/// eigenvalue multiplicities (orbit = U_n modulo its block-diagonal
/// stabilizer).
int class_dimension(const ConjugacyClass& cls);

/// (2g-2) n^2 + 2 + class_dimension; the dimension of the representation
/// space over a genus-g surface. Meaningful as a manifold dimension only at
/// regular values, which is the caller's responsibility.
long long rep_space_dimension(const ConjugacyClass& cls, int genus);

/// The central classes exp(2 pi i k/n) I with gcd(k, n) = 1, i.e. the central
/// regular values, as angle vectors (k/n, ..., k/n).
std::vector<ConjugacyClass> central_regular_values(int n);

bool is_central(const ConjugacyClass& cls);

}  // namespace wallcross
