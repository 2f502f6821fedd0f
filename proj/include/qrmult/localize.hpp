#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrmult/character.hpp"
#include "qrmult/fpdata.hpp"
#include "qrmult/lattice.hpp"

namespace qrmult {

/// A fixed point whose normal weights have been flipped to pair positively
/// with the chamber direction η. Each flip of α ↦ ǎ = −α turns
/// 1/(1 − t^{−α}) into −t^{−ǎ}/(1 − t^{−ǎ}), contributing a sign and a
/// shift by ǎ.
struct PolarizedFixedPoint {
  std::string source_label;
  std::vector<WeightVector> polarized_weights;
  std::vector<bool> flip_flags;
  std::size_t sign_count = 0;  // number of flips
  WeightVector shift;          // Σ_j flag_j · ǎ_j
};

PolarizedFixedPoint polarize(const FixedPointDatum& fp, const WeightVector& eta);

/// Counts k ∈ ℤ^N with Σ_j k_j a^j = target − shift and k_j ≥ lower_bounds_j.
/// `eta` certifies pointedness: ⟨a^j, η⟩ > 0 for every column.
struct PartitionProblem {
  std::vector<WeightVector> columns;
  WeightVector target;
  std::vector<int> lower_bounds;  // l⁰ ∈ {0,1}^N; empty means all zero
  WeightVector shift;             // empty means zero
  WeightVector eta;

  /// Throws Error("not_pointed") unless every column pairs positively with eta.
  void check_pointed() const;
};

Integer count_partitions(const PartitionProblem& problem);

/// N^{(m)}(μ) = Σ_F c_F(m) (−1)^{k_F} P_F(m·J_F − μ − σ_F). Chooses η with
/// pick_generic_direction over all normal weights when `eta` is empty.
Integer multiplicity(const LocalizationDataset& ds, const WeightVector& mu, std::int64_t m,
                     const std::optional<WeightVector>& eta = std::nullopt);

/// Every normal weight of the dataset, in order; the hyperplane arrangement
/// whose chambers the direction η ranges over.
std::vector<WeightVector> all_normal_weights(const LocalizationDataset& ds);

/// Integer bounding box [lo, hi] of conv{m·J_F}.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> support_box(const LocalizationDataset& ds,
                                                                            std::int64_t m);

CharacterTable character_table(const LocalizationDataset& ds, std::int64_t m,
                               const std::optional<WeightVector>& eta = std::nullopt);

enum class ScalingMode { fixed, scaled };

ScalingMode parse_scaling_mode(std::string_view text);
std::string to_string(ScalingMode mode);

/// (m, N) for m = m_from..m_to, evaluating at μ (fixed) or m·μ (scaled).
/// Throws Error("non_lattice_weight") when the evaluation point is not
/// integral.
std::vector<std::pair<std::int64_t, Integer>> multiplicity_series(
    const LocalizationDataset& ds, const WeightVector& mu, std::int64_t m_from, std::int64_t m_to,
    ScalingMode mode, const std::optional<WeightVector>& eta = std::nullopt);

}  // namespace qrmult
