#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qrmult/rational.hpp"

namespace qrmult {

/// A point of the weight lattice (or its rational span) in the fixed basis
/// chosen by the dataset. Coordinates are exact; there is no floating
/// point representation.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  WeightVector(std::initializer_list<std::int64_t> coords);
  static WeightVector from_integers(std::span<const std::int64_t> coords);
  static WeightVector zero(std::size_t rank);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_integral() const;
  bool is_zero() const;
  /// Throws Error("non_integral") unless every coordinate is an integer.
  std::vector<std::int64_t> to_integers() const;

  WeightVector operator+(const WeightVector& other) const;
  WeightVector operator-(const WeightVector& other) const;
  WeightVector operator-() const;
  WeightVector operator*(const Rational& factor) const;

  bool operator==(const WeightVector& other) const = default;
  /// Lexicographic; used for every deterministic output order.
  std::strong_ordering operator<=>(const WeightVector& other) const;

  /// "(1,-2)"
  std::string to_string() const;
  /// "1,-2"; the CLI's --mu syntax
  std::string to_csv() const;

 private:
  std::vector<Rational> coords_;
};

/// Parses "a,b,..." with each entry an exact rational.
WeightVector parse_weight(std::string_view csv);

/// Standard bilinear pairing in the fixed basis. Throws Error("length_mismatch").
Rational pairing(const WeightVector& a, const WeightVector& b);

/// First η = (1, t, t², ..., t^{p-1}), t = 1, 2, ..., with ⟨α, η⟩ ≠ 0 for every
/// input weight. Throws Error("zero_weight") if a weight is zero.
WeightVector pick_generic_direction(std::span<const WeightVector> weights, std::size_t rank);

/// Square integer matrix acting on Λ = ℤ^p by x ↦ M x.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t n, std::vector<std::int64_t> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  std::int64_t at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  WeightVector apply(const WeightVector& x) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transpose() const;
  Integer determinant() const;

  bool operator==(const IntMatrix& other) const = default;
  auto operator<=>(const IntMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

struct WeylElement {
  IntMatrix matrix;
  int sign = 1;  // det(matrix)
};

/// Finite reflection group data generated from simple roots and coroots.
///
/// `simple_coroots[i]` is the linear functional α_i^∨ written in the dual
/// basis, so ⟨x, α_i^∨⟩ = pairing(x, simple_coroots[i]) and the simple
/// reflection is s_i(x) = x − ⟨x, α_i^∨⟩ α_i. `positive_coroots[k]` is the
/// coroot of `positive_roots[k]`.
struct RootSystem {
  std::size_t rank = 0;
  std::vector<WeightVector> simple_roots;
  std::vector<WeightVector> simple_coroots;
  std::vector<WeightVector> positive_roots;
  std::vector<WeightVector> positive_coroots;
  WeightVector delta;
  std::vector<WeylElement> weyl_elements;  // identity first

  bool is_root(const WeightVector& v) const;
};

/// Builds the Weyl group by closing the simple reflections under
/// composition. `cartan_pairing` holds one coroot row per simple root.
/// Throws Error("bad_root_system") on malformed input and
/// Error("not_finite_reflection_group") once `element_cap` is exceeded.
RootSystem generate_weyl_group(std::vector<WeightVector> simple_roots,
                               std::vector<WeightVector> cartan_pairing,
                               std::size_t element_cap = 100000);

/// ⟨μ, α_i^∨⟩ > 0 for every simple coroot (open positive chamber).
bool is_regular_dominant(const WeightVector& mu, const RootSystem& rs);
/// ⟨μ, α_i^∨⟩ ≥ 0 for every simple coroot (closed chamber, Λ_+).
bool is_dominant(const WeightVector& mu, const RootSystem& rs);

/// Exact Gaussian elimination. Returns one solution of A x = b (free
/// variables set to zero), or nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear_system(std::vector<std::vector<Rational>> a,
                                                         std::vector<Rational> b);

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

/// Integer vector η with ⟨β, η⟩ > 0 for every positive root: solves
/// ⟨α_i, η⟩ = 1 on the simple roots and clears denominators.
WeightVector positive_root_certificate(const RootSystem& rs);

}  // namespace qrmult
