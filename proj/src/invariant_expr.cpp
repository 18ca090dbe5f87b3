#include "wallcross/invariant_expr.hpp"

namespace wallcross {

InvariantExpr InvariantExpr::constant(std::int64_t c) {
    InvariantExpr e;
    if (c != 0) e.terms_[{}] = c;
    return e;
}

InvariantExpr InvariantExpr::symbol(const std::string& name) {
    InvariantExpr e;
    e.terms_[{{name, 1}}] = 1;
    return e;
}

void InvariantExpr::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

bool InvariantExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<std::int64_t> InvariantExpr::constant_value() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1 && terms_.begin()->first.empty()) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

std::set<std::string> InvariantExpr::free_symbols() const {
    std::set<std::string> out;
    for (const auto& [mono, coeff] : terms_) {
        for (const auto& [name, exp] : mono) out.insert(name);
    }
    return out;
}

InvariantExpr InvariantExpr::substitute(
    const std::map<std::string, std::int64_t>& values) const {
    InvariantExpr out;
    for (const auto& [mono, coeff] : terms_) {
        std::int64_t scale = coeff;
        Monomial remaining;
        for (const auto& [name, exp] : mono) {
            auto it = values.find(name);
            if (it == values.end()) {
                remaining[name] = exp;
            } else {
                for (int i = 0; i < exp; ++i) scale *= it->second;
            }
        }
        out.terms_[remaining] += scale;
    }
    out.prune();
    return out;
}

std::optional<InvariantExpr> InvariantExpr::divide_exact(std::int64_t divisor) const {
    if (divisor == 0) return std::nullopt;
    InvariantExpr out;
    for (const auto& [mono, coeff] : terms_) {
        if (coeff % divisor != 0) return std::nullopt;
        out.terms_[mono] = coeff / divisor;
    }
    return out;
}

std::string InvariantExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        if (!out.empty()) out += coeff > 0 ? " + " : " - ";
        else if (coeff < 0) out += "-";
        const std::int64_t mag = coeff < 0 ? -coeff : coeff;
        std::string factors;
        for (const auto& [name, exp] : mono) {
            if (!factors.empty()) factors += "*";
            factors += name;
            if (exp > 1) factors += "^" + std::to_string(exp);
        }
        if (factors.empty()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += factors;
        }
    }
    return out;
}

InvariantExpr InvariantExpr::operator-() const {
    InvariantExpr out = *this;
    for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
    return out;
}

InvariantExpr operator+(const InvariantExpr& a, const InvariantExpr& b) {
    InvariantExpr out = a;
    for (const auto& [mono, coeff] : b.terms_) out.terms_[mono] += coeff;
    out.prune();
    return out;
}

InvariantExpr operator-(const InvariantExpr& a, const InvariantExpr& b) {
    return a + (-b);
}

InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b) {
    InvariantExpr out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            InvariantExpr::Monomial mono = ma;
            for (const auto& [name, exp] : mb) mono[name] += exp;
            out.terms_[mono] += ca * cb;
        }
    }
    out.prune();
    return out;
}

InvariantExpr operator*(std::int64_t s, const InvariantExpr& e) {
    InvariantExpr out = e;
    for (auto& [mono, coeff] : out.terms_) coeff *= s;
    out.prune();
    return out;
}

}  // namespace wallcross
