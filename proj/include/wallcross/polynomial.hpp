#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wallcross {

/// Integer polynomial; coefficients ascending by degree, trailing zeros
/// trimmed, the zero polynomial is the empty list.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);
    static IntPolynomial constant(std::int64_t c);
    static IntPolynomial monomial(std::int64_t c, int degree);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t evaluate(std::int64_t t) const;
    std::string str() const;

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(std::int64_t s, const IntPolynomial& p);

private:
    std::vector<std::int64_t> coeffs_;
    void trim();
};

/// Poincare polynomial of CP^a:  1 + t^2 + ... + t^(2a).
IntPolynomial cp_poincare(int a);

/// Euler characteristic of CP^a:  a + 1.
std::int64_t cp_euler(int a);

/// Euler characteristic of the variety of full flags in C^n:  n!.
std::int64_t flag_euler(int n);

/// Sum of coefficients; turns a Lefschetz polynomial into the Lefschetz
/// number.
std::int64_t evaluate_at_one(const IntPolynomial& p);

/// Exact check of the Poincare polynomial relation across a wall:
///   P_alpha = P_beta + (P(CP^a) - P(CP^b)) * P_sigma.
bool check_poincare_identity(const IntPolynomial& p_alpha, const IntPolynomial& p_beta,
                             const IntPolynomial& p_sigma, int a, int b);

/// Exact check of the Lefschetz polynomial relation across a wall:
///   M_alpha - M_beta = (P(CP^a) - P(CP^b)) * M_gamma1 * M_gamma2,
/// together with the induced Euler-number relation at t = 1.
bool check_lefschetz_identity(const IntPolynomial& m_alpha, const IntPolynomial& m_beta,
                              const IntPolynomial& m_gamma1, const IntPolynomial& m_gamma2,
                              int a, int b);

}  // namespace wallcross
