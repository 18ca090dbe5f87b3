#pragma once

#include "wallcross/rational.hpp"

#include <optional>
#include <vector>

namespace wallcross {

/// One linear condition  a.x <= b  (or  a.x < b  when strict).
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational bound;
    bool strict = false;
};

/// Endpoint of a projection interval.
struct Bound {
    Rational value;
    bool strict = false;
};

struct Interval {
    bool empty = false;
    std::optional<Bound> lower;
    std::optional<Bound> upper;
};

/// A conjunction of linear equalities and (possibly strict) inequalities over
/// rational variables, decided exactly by Fourier-Motzkin elimination.
class ConstraintSystem {
public:
    explicit ConstraintSystem(int num_vars) : num_vars_(num_vars) {}

    void add_le(std::vector<Rational> coeffs, Rational bound);
    void add_lt(std::vector<Rational> coeffs, Rational bound);
    void add_ge(std::vector<Rational> coeffs, Rational bound);
    void add_gt(std::vector<Rational> coeffs, Rational bound);
    void add_eq(std::vector<Rational> coeffs, Rational bound);

    int num_vars() const { return num_vars_; }
    const std::vector<LinearConstraint>& constraints() const { return rows_; }

    bool feasible() const;

    /// Exact range of x[var] over the feasible set.
    Interval project(int var) const;

    /// Deterministic point of a bounded nonempty region, chosen by
    /// coordinate-wise interval midpoints.
    std::vector<Rational> interior_point() const;

private:
    int num_vars_ = 0;
    std::vector<LinearConstraint> rows_;
};

/// Rank of a rational matrix given as a list of row vectors.
int rational_rank(std::vector<std::vector<Rational>> rows);

}  // namespace wallcross
