#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace wallcross {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p/q" or "p". The result is canonical (q > 0, reduced).
Rational parse_rational(const std::string& text);

/// Format as "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& value);

/// Reduce into [0, 1).
Rational mod_one(const Rational& value);

bool is_integer(const Rational& value);

/// Narrowing conversion with a range check.
std::int64_t to_int64(const Integer& value);

std::string join_rationals(const std::vector<Rational>& values,
                           const std::string& sep = ",");

}  // namespace wallcross
