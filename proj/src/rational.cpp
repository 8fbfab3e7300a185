#include "hyperkey/rational.hpp"

#include <cctype>


#include "hyperkey/error.hpp"

namespace hyperkey {

std::string to_string(const Rational& r) {
  if (is_integer(r)) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw Error(ErrorKind::ParseError, "malformed number '" + std::string(whole) + "'");
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(whole) + "'");
    value = Rational(num, den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
      throw Error(ErrorKind::ParseError, "malformed number '" + std::string(whole) + "'");
    BigInt num = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    BigInt scale = 1;
    if (!frac_part.empty()) {
      BigInt frac = parse_integer(frac_part, whole);
      for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
      num = num * scale + frac;
    }
    value = Rational(num, scale);
  } else {
    value = Rational(parse_integer(text, whole));
  }
  return negative ? Rational(-value) : value;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  return boost::multiprecision::abs(a / g * b);
}

}  // namespace hyperkey
