#include "wallcross/knot.hpp"

#include "wallcross/error.hpp"

#include <utility>

namespace wallcross {

namespace {

void check_shape(const FibredKnot& knot) {
    const std::size_t dim = 2 * static_cast<std::size_t>(knot.genus);
    if (knot.genus < 1 || knot.monodromy.size() != dim) {
        throw Error(ErrorKind::invalid_input, "monodromy is not 2g x 2g");
    }
    for (const auto& row : knot.monodromy) {
        if (row.size() != dim) {
            throw Error(ErrorKind::invalid_input, "monodromy is not 2g x 2g");
        }
    }
}

std::vector<std::vector<Integer>> to_big(const IntMatrix& m) {
    std::vector<std::vector<Integer>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].assign(m[i].begin(), m[i].end());
    }
    return out;
}

Integer bareiss(std::vector<std::vector<Integer>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t p = 0; p < n - 1; ++p) {
        if (a[p][p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < n && a[swap_row][p] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
            }
            a[i][p] = 0;
        }
        prev = a[p][p];
    }
    return sign * a[n - 1][n - 1];
}

// det(s*I + c*M) for integer s, c; used to sample both characteristic
// polynomials at integer arguments.
Integer det_affine(const IntMatrix& m, const Integer& s, const Integer& c) {
    auto a = to_big(m);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            a[i][j] = c * a[i][j] + (i == j ? s : Integer(0));
        }
    }
    return bareiss(std::move(a));
}

// Recover a degree <= deg integer polynomial from its values at 0..deg.
IntPolynomial interpolate(const std::vector<Integer>& values) {
    const int deg = static_cast<int>(values.size()) - 1;
    std::vector<Rational> coeffs(values.size(), Rational(0));
    // Lagrange basis at nodes 0..deg, accumulated in coefficient form.
    for (int i = 0; i <= deg; ++i) {
        std::vector<Rational> basis = {Rational(1)};
        Rational denom = 1;
        for (int j = 0; j <= deg; ++j) {
            if (j == i) continue;
            // Multiply by (t - j).
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= Rational(j) * basis[d];
            }
            basis = std::move(next);
            denom *= Rational(i - j);
        }
        const Rational weight = Rational(values[i]) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) {
            coeffs[d] += weight * basis[d];
        }
    }
    std::vector<std::int64_t> out;
    out.reserve(coeffs.size());
    for (const Rational& c : coeffs) {
        if (!is_integer(c)) {
            throw Error(ErrorKind::contradiction,
                        "interpolation produced a non-integer coefficient");
        }
        out.push_back(to_int64(numerator(c)));
    }
    return IntPolynomial(std::move(out));
}

}  // namespace

bool KnotValidation::ok(bool allow_qhs) const {
    return shape_ok && unimodular && (allow_qhs ? qhs : homology_sphere);
}

Integer integer_determinant(const IntMatrix& m) {
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw Error(ErrorKind::invalid_input, "matrix is not square");
        }
    }
    return bareiss(to_big(m));
}

IntPolynomial alexander_polynomial(const FibredKnot& knot) {
    check_shape(knot);
    const int deg = 2 * knot.genus;
    std::vector<Integer> values;
    values.reserve(deg + 1);
    for (int t = 0; t <= deg; ++t) {
        values.push_back(det_affine(knot.monodromy, Integer(t), Integer(-1)));
    }
    return interpolate(values);
}

IntPolynomial jacobian_lefschetz_polynomial(const FibredKnot& knot) {
    check_shape(knot);
    const int deg = 2 * knot.genus;
    std::vector<Integer> values;
    values.reserve(deg + 1);
    for (int t = 0; t <= deg; ++t) {
        values.push_back(det_affine(knot.monodromy, Integer(1), Integer(-t)));
    }
    return interpolate(values);
}

std::int64_t jacobian_lefschetz_number(const FibredKnot& knot) {
    check_shape(knot);
    return to_int64(det_affine(knot.monodromy, Integer(1), Integer(-1)));
}

KnotValidation validate(const FibredKnot& knot) {
    KnotValidation report;
    const std::size_t dim = 2 * static_cast<std::size_t>(std::max(knot.genus, 0));
    report.shape_ok = knot.genus >= 1 && knot.monodromy.size() == dim;
    for (const auto& row : knot.monodromy) {
        report.shape_ok = report.shape_ok && row.size() == dim;
    }
    if (!report.shape_ok) {
        report.failures.push_back("monodromy must be a 2g x 2g integer matrix");
        return report;
    }

    report.det_monodromy = integer_determinant(knot.monodromy);
    report.unimodular = report.det_monodromy == 1 || report.det_monodromy == -1;
    if (!report.unimodular) {
        report.failures.push_back("det(M) = " + report.det_monodromy.str() +
                                  ", expected +-1");
    }

    report.det_id_minus_monodromy =
        det_affine(knot.monodromy, Integer(1), Integer(-1));
    report.qhs = report.det_id_minus_monodromy != 0;
    report.homology_sphere = report.det_id_minus_monodromy == 1 ||
                             report.det_id_minus_monodromy == -1;
    if (!report.homology_sphere) {
        report.failures.push_back("det(I - M) = " + report.det_id_minus_monodromy.str() +
                                  ", expected +-1 for a knot in a homology sphere");
    }

    // M^T J M = J with J the intersection form, blocks [[0,1],[-1,0]] in the
    // (a_1, b_1, ..., a_g, b_g) ordering.
    const int g = knot.genus;
    auto j_form = [&](int i, int j) -> std::int64_t {
        if (i / 2 != j / 2) return 0;
        if (i + 1 == j) return 1;
        if (j + 1 == i) return -1;
        return 0;
    };
    report.symplectic = true;
    for (int i = 0; i < 2 * g && report.symplectic; ++i) {
        for (int j = 0; j < 2 * g && report.symplectic; ++j) {
            Integer acc = 0;
            for (int r = 0; r < 2 * g; ++r) {
                for (int s = 0; s < 2 * g; ++s) {
                    acc += Integer(knot.monodromy[r][i]) * j_form(r, s) *
                           knot.monodromy[s][j];
                }
            }
            if (acc != j_form(i, j)) report.symplectic = false;
        }
    }
    if (!report.symplectic) {
        report.warnings.push_back(
            "monodromy does not preserve the standard intersection form");
    }
    return report;
}

}  // namespace wallcross
