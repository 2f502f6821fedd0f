#pragma once

#include <string>
#include <vector>

#include "qrmult/rational.hpp"

namespace qrmult {

/// Univariate polynomial with exact rational coefficients, constant term
/// first. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient list and equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;

  /// x -> p(scale * x + shift)
  Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Rational& factor) const;
  bool operator==(const Polynomial& other) const = default;

  /// Human form in the variable `var`, e.g. "3/4 + 1/2*m".
  std::string to_string(const std::string& var = "m") const;
  /// Coefficients as exact strings, constant term first.
  std::vector<std::string> coefficient_strings() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace qrmult
