#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperkey {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Integer text for whole numbers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Accepts "7", "-3", "3/2", "1.25"; decimals become exact fractions.
/// Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

BigInt lcm(const BigInt& a, const BigInt& b);

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

}  // namespace hyperkey
