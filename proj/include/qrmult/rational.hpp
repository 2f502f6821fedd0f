#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qrmult {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q" (decimal, no whitespace, q > 0).
/// Throws Error("bad_rational") on anything else, including decimals.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer; throws Error("bad_integer").
Integer parse_integer(std::string_view text);

/// Canonical exact form: "p" for integers, "p/q" otherwise (q > 0, reduced).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Floor of an exact rational.
Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Narrowing with overflow check; throws Error("overflow").
std::int64_t to_int64(const Integer& value);

}  // namespace qrmult
