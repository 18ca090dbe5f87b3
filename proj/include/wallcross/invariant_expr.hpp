#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace wallcross {

/// Multivariate polynomial with integer coefficients over named symbols.
/// Terms are kept in canonical sorted order, so equality is structural.
class InvariantExpr {
public:
    using Monomial = std::map<std::string, int>;

    InvariantExpr() = default;
    static InvariantExpr constant(std::int64_t c);
    static InvariantExpr symbol(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::optional<std::int64_t> constant_value() const;
    std::set<std::string> free_symbols() const;

    /// Replace the listed symbols by integers; unlisted symbols stay free.
    InvariantExpr substitute(const std::map<std::string, std::int64_t>& values) const;

    /// Coefficient-wise division; nullopt unless every coefficient divides.
    std::optional<InvariantExpr> divide_exact(std::int64_t divisor) const;

    /// Deterministic human-readable form, e.g. "10*mu(2; 1/5,4/5)*mu(2; 2/5,3/5)".
    std::string str() const;

    const std::map<Monomial, std::int64_t>& terms() const { return terms_; }

    bool operator==(const InvariantExpr&) const = default;

    InvariantExpr operator-() const;
    friend InvariantExpr operator+(const InvariantExpr& a, const InvariantExpr& b);
    friend InvariantExpr operator-(const InvariantExpr& a, const InvariantExpr& b);
    friend InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b);
    friend InvariantExpr operator*(std::int64_t s, const InvariantExpr& e);

private:
    std::map<Monomial, std::int64_t> terms_;
    void prune();
};

}  // namespace wallcross
