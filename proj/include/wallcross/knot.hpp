#pragma once

#include "wallcross/polynomial.hpp"
#include "wallcross/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wallcross {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// A fibred knot given by the genus of its fiber surface and the monodromy
/// action on first homology, a 2g x 2g integer matrix.
struct FibredKnot {
    std::string name;
    int genus = 0;
    IntMatrix monodromy;
};

struct KnotValidation {
    bool shape_ok = false;        // 2g x 2g
    bool unimodular = false;      // |det M| = 1
    bool homology_sphere = false; // |det(I - M)| = 1
    bool qhs = false;             // det(I - M) != 0
    bool symplectic = false;      // M^T J M = J for the standard skew form
    Integer det_monodromy;
    Integer det_id_minus_monodromy;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;

    bool ok(bool allow_qhs = false) const;
};

/// Exact determinant of an integer matrix (fraction-free elimination).
Integer integer_determinant(const IntMatrix& m);

/// The Alexander polynomial as the characteristic polynomial det(tI - M);
/// monic of degree 2g, constant term +-1 for valid knots.
IntPolynomial alexander_polynomial(const FibredKnot& knot);

/// The Lefschetz polynomial c(t) = det(I - tM) of the monodromy acting on
/// the Jacobian torus; the coefficient of t^k is (-1)^k times the trace of
/// the k-th exterior power of M.
IntPolynomial jacobian_lefschetz_polynomial(const FibredKnot& knot);

/// c(1) = det(I - M), the rank-one base invariant.
std::int64_t jacobian_lefschetz_number(const FibredKnot& knot);

/// Integrality, unimodularity and homology-sphere checks; the symplectic
/// check is reported as a warning only.
KnotValidation validate(const FibredKnot& knot);

}  // namespace wallcross
