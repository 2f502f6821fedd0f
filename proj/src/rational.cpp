#include "qrmult/rational.hpp"

#include <cctype>
#include <limits>

#include "qrmult/error.hpp"

namespace qrmult {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!is_decimal(text, true)) {
    throw Error("bad_integer", "not a decimal integer: '" + std::string(text) + "'");
  }
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_decimal(text, true)) {
      throw Error("bad_rational", "not an exact rational: '" + std::string(text) + "'");
    }
    return Rational(Integer(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false)) {
    throw Error("bad_rational", "not an exact rational: '" + std::string(text) + "'");
  }
  Integer d(std::string{den});
  if (d == 0) {
    throw Error("bad_rational", "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(Integer(std::string(num)), d);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer floor(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Integer ceil(const Rational& value) { return -floor(-value); }

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw Error("overflow", "integer does not fit in 64 bits: " + value.str());
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace qrmult
