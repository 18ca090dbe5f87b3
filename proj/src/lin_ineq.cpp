#include "wallcross/lin_ineq.hpp"

#include "wallcross/error.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace wallcross {

namespace {

using Row = LinearConstraint;

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

// Scale so the first nonzero coefficient has absolute value 1. Positive
// scaling keeps the inequality direction, so rows with equal scaled
// coefficients bound the same functional and only the tightest one matters.
void normalize_row(Row& row) {
    for (const Rational& c : row.coeffs) {
        if (c != 0) {
            const Rational scale = abs(c);
            for (Rational& x : row.coeffs) x /= scale;
            row.bound /= scale;
            return;
        }
    }
}

// Returns false on an immediately contradictory constant row.
bool sweep_constant_rows(std::vector<Row>& rows) {
    std::vector<Row> kept;
    kept.reserve(rows.size());
    for (Row& row : rows) {
        if (all_zero(row.coeffs)) {
            const bool ok = row.strict ? (row.bound > 0) : (row.bound >= 0);
            if (!ok) return false;
        } else {
            kept.push_back(std::move(row));
        }
    }
    rows = std::move(kept);
    return true;
}

void dedupe(std::vector<Row>& rows) {
    std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
    for (Row& row : rows) {
        normalize_row(row);
        auto it = best.find(row.coeffs);
        if (it == best.end()) {
            best.emplace(std::move(row.coeffs), std::make_pair(row.bound, row.strict));
        } else {
            auto& [bound, strict] = it->second;
            if (row.bound < bound || (row.bound == bound && row.strict && !strict)) {
                bound = row.bound;
                strict = row.strict;
            }
        }
    }
    rows.clear();
    for (auto& [coeffs, bs] : best) {
        rows.push_back(Row{coeffs, bs.first, bs.second});
    }
}

// Eliminate x[var]; may report infeasibility early via the return value.
bool eliminate_var(std::vector<Row>& rows, int var) {
    std::vector<Row> pos, neg, rest;
    for (Row& row : rows) {
        const Rational c = row.coeffs[var];
        if (c > 0) {
            for (Rational& x : row.coeffs) x /= c;
            row.bound /= c;
            pos.push_back(std::move(row));
        } else if (c < 0) {
            const Rational s = -c;
            for (Rational& x : row.coeffs) x /= s;
            row.bound /= s;
            neg.push_back(std::move(row));
        } else {
            rest.push_back(std::move(row));
        }
    }
    for (const Row& p : pos) {
        for (const Row& q : neg) {
            Row combined;
            combined.coeffs.resize(p.coeffs.size());
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                combined.coeffs[i] = p.coeffs[i] + q.coeffs[i];
            }
            combined.coeffs[var] = 0;
            combined.bound = p.bound + q.bound;
            combined.strict = p.strict || q.strict;
            rest.push_back(std::move(combined));
        }
    }
    rows = std::move(rest);
    if (!sweep_constant_rows(rows)) return false;
    dedupe(rows);
    return true;
}

}  // namespace

void ConstraintSystem::add_le(std::vector<Rational> coeffs, Rational bound) {
    rows_.push_back(Row{std::move(coeffs), std::move(bound), false});
}

void ConstraintSystem::add_lt(std::vector<Rational> coeffs, Rational bound) {
    rows_.push_back(Row{std::move(coeffs), std::move(bound), true});
}

void ConstraintSystem::add_ge(std::vector<Rational> coeffs, Rational bound) {
    for (Rational& c : coeffs) c = -c;
    rows_.push_back(Row{std::move(coeffs), -bound, false});
}

void ConstraintSystem::add_gt(std::vector<Rational> coeffs, Rational bound) {
    for (Rational& c : coeffs) c = -c;
    rows_.push_back(Row{std::move(coeffs), -bound, true});
}

void ConstraintSystem::add_eq(std::vector<Rational> coeffs, Rational bound) {
    add_le(coeffs, bound);
    add_ge(std::move(coeffs), std::move(bound));
}

bool ConstraintSystem::feasible() const {
    std::vector<Row> rows = rows_;
    if (!sweep_constant_rows(rows)) return false;
    dedupe(rows);
    for (int var = num_vars_ - 1; var >= 0; --var) {
        if (!eliminate_var(rows, var)) return false;
    }
    return true;
}

Interval ConstraintSystem::project(int var) const {
    std::vector<Row> rows = rows_;
    Interval out;
    if (!sweep_constant_rows(rows)) {
        out.empty = true;
        return out;
    }
    dedupe(rows);
    for (int v = num_vars_ - 1; v >= 0; --v) {
        if (v == var) continue;
        if (!eliminate_var(rows, v)) {
            out.empty = true;
            return out;
        }
    }
    for (const Row& row : rows) {
        const Rational c = row.coeffs[var];
        const Rational limit = row.bound / c;
        if (c > 0) {
            if (!out.upper || limit < out.upper->value ||
                (limit == out.upper->value && row.strict)) {
                out.upper = Bound{limit, row.strict};
            }
        } else {
            // c < 0: lower bound  x >= bound/c  (division flips the sign)
            if (!out.lower || limit > out.lower->value ||
                (limit == out.lower->value && row.strict)) {
                out.lower = Bound{limit, row.strict};
            }
        }
    }
    if (out.lower && out.upper) {
        const bool degenerate = out.lower->value > out.upper->value ||
            (out.lower->value == out.upper->value &&
             (out.lower->strict || out.upper->strict));
        if (degenerate) out.empty = true;
    }
    return out;
}

std::vector<Rational> ConstraintSystem::interior_point() const {
    ConstraintSystem sys = *this;
    std::vector<Rational> point(num_vars_);
    for (int var = 0; var < num_vars_; ++var) {
        const Interval iv = sys.project(var);
        if (iv.empty) {
            throw Error(ErrorKind::invalid_input, "interior_point: empty region");
        }
        if (!iv.lower || !iv.upper) {
            throw Error(ErrorKind::invalid_input, "interior_point: unbounded region");
        }
        Rational value;
        if (iv.lower->value == iv.upper->value) {
            value = iv.lower->value;
        } else {
            value = (iv.lower->value + iv.upper->value) / 2;
        }
        point[var] = value;
        std::vector<Rational> unit(num_vars_);
        unit[var] = 1;
        sys.add_eq(std::move(unit), value);
    }
    return point;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows.size() && pivot_col < cols; ++pivot_col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][pivot_col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][pivot_col] == 0) continue;
            const Rational factor = rows[i][pivot_col] / rows[r][pivot_col];
            for (std::size_t j = pivot_col; j < cols; ++j) {
                rows[i][j] -= factor * rows[r][j];
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace wallcross
