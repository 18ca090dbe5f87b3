#include "wallcross/rational.hpp"

#include "wallcross/error.hpp"

#include <limits>

namespace wallcross {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) {
            throw Error(ErrorKind::invalid_input, "zero denominator in '" + text + "'");
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw Error(ErrorKind::invalid_input, "cannot parse rational '" + text + "'");
    }
}

std::string rational_str(const Rational& value) {
    const Integer num = numerator(value);
    const Integer den = denominator(value);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational mod_one(const Rational& value) {
    Integer num = numerator(value);
    const Integer den = denominator(value);
    Integer rem = num % den;
    if (rem < 0) {
        rem += den;
    }
    return Rational(rem, den);
}

bool is_integer(const Rational& value) {
    return denominator(value) == 1;
}

std::int64_t to_int64(const Integer& value) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (value < lo || value > hi) {
        throw Error(ErrorKind::invalid_input, "integer out of 64-bit range: " + value.str());
    }
    return value.convert_to<std::int64_t>();
}

std::string join_rationals(const std::vector<Rational>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += rational_str(values[i]);
    }
    return out;
}

}  // namespace wallcross
