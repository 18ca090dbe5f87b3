#include "wallcross/polynomial.hpp"

#include "wallcross/error.hpp"

#include <utility>

namespace wallcross {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
    return IntPolynomial(c == 0 ? std::vector<std::int64_t>{}
                                : std::vector<std::int64_t>{c});
}

IntPolynomial IntPolynomial::monomial(std::int64_t c, int degree) {
    if (c == 0) return {};
    std::vector<std::int64_t> coeffs(degree + 1, 0);
    coeffs[degree] = c;
    return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

std::string IntPolynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (!out.empty()) out += c > 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        const std::int64_t mag = c < 0 ? -c : c;
        if (k == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<std::int64_t> coeffs = coeffs_;
    for (auto& c : coeffs) c = -c;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) coeffs[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs[i] += b.coeffs_[i];
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial operator*(std::int64_t s, const IntPolynomial& p) {
    std::vector<std::int64_t> coeffs = p.coeffs_;
    for (auto& c : coeffs) c *= s;
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial cp_poincare(int a) {
    if (a < 0) throw Error(ErrorKind::invalid_input, "negative projective dimension");
    std::vector<std::int64_t> coeffs(2 * a + 1, 0);
    for (int k = 0; k <= a; ++k) coeffs[2 * k] = 1;
    return IntPolynomial(std::move(coeffs));
}

std::int64_t cp_euler(int a) {
    if (a < 0) throw Error(ErrorKind::invalid_input, "negative projective dimension");
    return a + 1;
}

std::int64_t flag_euler(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "rank must be positive");
    if (n > 20) throw Error(ErrorKind::invalid_input, "n! exceeds 64-bit range");
    std::int64_t acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

std::int64_t evaluate_at_one(const IntPolynomial& p) {
    std::int64_t sum = 0;
    for (std::int64_t c : p.coeffs()) sum += c;
    return sum;
}

bool check_poincare_identity(const IntPolynomial& p_alpha, const IntPolynomial& p_beta,
                             const IntPolynomial& p_sigma, int a, int b) {
    const IntPolynomial bracket = cp_poincare(a) - cp_poincare(b);
    return p_alpha == p_beta + bracket * p_sigma;
}

bool check_lefschetz_identity(const IntPolynomial& m_alpha, const IntPolynomial& m_beta,
                              const IntPolynomial& m_gamma1, const IntPolynomial& m_gamma2,
                              int a, int b) {
    const IntPolynomial bracket = cp_poincare(a) - cp_poincare(b);
    if (m_alpha - m_beta != bracket * m_gamma1 * m_gamma2) return false;
    // The same relation must hold between the Lefschetz numbers.
    const std::int64_t lhs = evaluate_at_one(m_alpha) - evaluate_at_one(m_beta);
    const std::int64_t rhs = (cp_euler(a) - cp_euler(b)) *
        evaluate_at_one(m_gamma1) * evaluate_at_one(m_gamma2);
    return lhs == rhs;
}

}  // namespace wallcross
