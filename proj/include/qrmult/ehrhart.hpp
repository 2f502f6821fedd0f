#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrmult/error.hpp"
#include "qrmult/localize.hpp"
#include "qrmult/polynomial.hpp"

namespace qrmult {

/// Arithmetic polynomial f of period k stored in residue form:
/// residue_polys[j] is q_j(n) = f(k·n − j), so an argument m ≡ −j (mod k)
/// is evaluated as q_j((m + j) / k).
struct QuasiPolynomial {
  std::int64_t period = 1;
  std::vector<Polynomial> residue_polys;

  int degree() const;
  /// Residue class j with m ≡ −j (mod k).
  std::size_t residue_index(std::int64_t m) const;
  /// The class polynomial rewritten as a polynomial in m itself.
  Polynomial class_polynomial_in_m(std::size_t j) const;

  bool operator==(const QuasiPolynomial& other) const = default;
};

using Sample = std::pair<std::int64_t, Rational>;

/// Raised by fit_quasi_polynomial when a surplus sample disagrees with the fit.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::int64_t m, const std::string& message) : Error("verification_failure", message), m_(m) {}
  std::int64_t m() const { return m_; }

 private:
  std::int64_t m_;
};

Rational evaluate(const QuasiPolynomial& qp, std::int64_t m);

/// Exact per-class interpolation from the first d+1 samples of each class,
/// checked against the rest. Throws Error("insufficient_samples") when a
/// class has fewer than d+2 samples and Error("verification_failure") when a
/// surplus sample disagrees.
QuasiPolynomial fit_quasi_polynomial(const std::vector<Sample>& samples, std::int64_t period, int degree);

/// Smallest divisor k of k_max that fits. Throws Error("no_period_fits").
std::pair<std::int64_t, QuasiPolynomial> minimal_period(const std::vector<Sample>& samples, std::int64_t k_max,
                                                         int degree);

/// f(m) = Σ_l phase_l^m · p_l(m); `phase` is +1 or −1.
struct PhaseTerm {
  int phase;
  Polynomial polynomial;
};

/// Only for period 1 or 2; throws Error("phase_form_unsupported") otherwise.
std::vector<PhaseTerm> phase_decomposition(const QuasiPolynomial& qp);

/// Number of l ∈ ℤ^N with A l = m·ν + σ and l ≥ l⁰, where A, ν, σ, l⁰ and the
/// pointedness certificate are taken from `problem` (target = ν, shift = σ).
Integer count_dilated(const PartitionProblem& problem, std::int64_t m);

std::vector<Sample> to_samples(const std::vector<std::pair<std::int64_t, Integer>>& series);

}  // namespace qrmult
