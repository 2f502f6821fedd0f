#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrmult/ehrhart.hpp"
#include "qrmult/fpdata.hpp"
#include "qrmult/localize.hpp"

namespace qrmult {

/// Declared orbifold stratum of the reduced space: its m-th contribution
/// carries the phase e^{2πi m·rotation}, and its polynomial has degree at
/// most `degree_bound` (half the stratum dimension).
struct StratumPhaseDatum {
  std::string label;
  std::int64_t order = 1;  // order of the stabilizer element
  Rational rotation = 0;   // in [0, 1), rotation·order ∈ ℤ
  int degree_bound = 0;
  std::optional<Polynomial> expected_poly;
};

/// Throws Error("bad_stratum") on a violated invariant.
void check_stratum(const StratumPhaseDatum& stratum);

/// Accepts a bare array of strata or an object (e.g. a dataset file) with a
/// "strata" array.
std::vector<StratumPhaseDatum> load_strata(std::string_view document);

struct PhaseVerdict {
  int phase = 1;  // +1 or −1
  Polynomial polynomial;
  std::vector<std::string> strata;  // labels of the declared strata carrying this phase
  int degree_bound = -1;            // −1: no stratum carries it, polynomial must vanish
  bool degree_ok = false;
  std::optional<Polynomial> expected;
  std::optional<bool> matches_expected;
};

struct QRReport {
  ScalingMode mode = ScalingMode::scaled;
  std::vector<std::pair<std::int64_t, Integer>> series;
  QuasiPolynomial fitted;
  std::int64_t period_used = 1;
  int degree_used = 0;
  std::int64_t onset = 1;           // smallest m from which the fit holds
  std::int64_t minimal_period = 1;  // diagnostic: smallest divisor of period_used that fits
  std::vector<PhaseVerdict> phases; // only when period_used ≤ 2

  /// Every phase within its degree bound and equal to its expected value.
  bool ok() const;
};

/// Fits N^{(m)}(μ) (fixed) or N^{(m)}(mμ) (scaled), m = 1..m_max, with period
/// lcm(order) and degree max(degree_bound), starting from the smallest onset
/// ≤ m_max/2 for which the fit holds. Throws Error("structure_violated")
/// listing witness m values when no onset works.
QRReport verify_structure(const LocalizationDataset& ds, const WeightVector& mu,
                          const std::vector<StratumPhaseDatum>& strata, std::int64_t m_max, ScalingMode mode,
                          const std::optional<WeightVector>& eta = std::nullopt);

/// Smallest sampled m₀ such that every sample with m ≥ m₀ matches `qp`;
/// nullopt when even the last sample disagrees.
std::optional<std::int64_t> onset_threshold(const std::vector<Sample>& samples, const QuasiPolynomial& qp);

}  // namespace qrmult
