#include "qrmult/weylred.hpp"

#include <set>

#include "qrmult/error.hpp"
#include "qrmult/localize.hpp"

namespace qrmult {

namespace {

// All λ − Σ k_i α_i (k_i ≥ 0) with ⟨Σ k_i α_i, η⟩ ≤ budget.
void enumerate_below(const RootSystem& rs, const WeightVector& eta, std::size_t i, const WeightVector& current,
                     const Rational& budget, std::vector<WeightVector>& out) {
  if (i == rs.simple_roots.size()) {
    out.push_back(current);
    return;
  }
  const Rational step = pairing(rs.simple_roots[i], eta);
  WeightVector point = current;
  for (Rational spent = 0; spent <= budget; spent += step) {
    enumerate_below(rs, eta, i + 1, point, budget - spent, out);
    point = point - rs.simple_roots[i];
  }
}

}  // namespace

CharacterTable irreducible_character(const RootSystem& rs, const WeightVector& lambda) {
  if (lambda.rank() != rs.rank) throw Error("length_mismatch", "lambda must have length rank");
  if (!lambda.is_integral() || !is_dominant(lambda, rs)) {
    throw Error("non_dominant", "highest weight " + lambda.to_string() + " is not dominant integral");
  }
  const WeightVector eta = positive_root_certificate(rs);

  // Every weight lies between λ and the lowest weight of its W-orbit.
  Rational lowest = pairing(lambda, eta);
  for (const auto& w : rs.weyl_elements) lowest = std::min(lowest, pairing(w.matrix.apply(lambda), eta));
  std::vector<WeightVector> candidates;
  enumerate_below(rs, eta, 0, lambda, pairing(lambda, eta) - lowest, candidates);

  std::vector<WeightVector> shifted_images;  // w(λ+δ), indexed like weyl_elements
  for (const auto& w : rs.weyl_elements) shifted_images.push_back(w.matrix.apply(lambda + rs.delta));

  CharacterTable table;
  for (const auto& mu : candidates) {
    Integer mult = 0;
    for (std::size_t k = 0; k < rs.weyl_elements.size(); ++k) {
      PartitionProblem problem{rs.positive_roots, shifted_images[k] - (mu + rs.delta), {}, {}, eta};
      mult += rs.weyl_elements[k].sign * count_partitions(problem);
    }
    table.add(mu, mult);
  }
  return table;
}

DecompositionResult decompose_character(const CharacterTable& chi, const RootSystem& rs) {
  std::set<WeightVector> candidates;
  for (const auto& [s, n] : chi.entries()) {
    for (const auto& w : rs.weyl_elements) {
      WeightVector mu = w.matrix.apply(s + rs.delta) - rs.delta;
      if (mu.is_integral() && is_dominant(mu, rs)) candidates.insert(std::move(mu));
    }
  }

  DecompositionResult result;
  CharacterTable reconstructed;
  for (const auto& mu : candidates) {
    Integer n = 0;
    for (const auto& w : rs.weyl_elements) {
      const WeightVector probe = w.matrix.apply(mu + rs.delta) - rs.delta;
      if (probe.is_integral()) n += w.sign * chi.at(probe);
    }
    if (n == 0) continue;
    result.multiplicities.emplace(mu, n);
    reconstructed = reconstructed + irreducible_character(rs, mu) * n;
  }
  result.residual = chi - reconstructed;
  return result;
}

CharacterTable tensor(const CharacterTable& a, const CharacterTable& b) {
  CharacterTable out;
  for (const auto& [wa, na] : a.entries())
    for (const auto& [wb, nb] : b.entries()) out.add(wa + wb, na * nb);
  return out;
}

RegularImageReport regular_image_check(const LocalizationDataset& ds, const RootSystem& rs) {
  RegularImageReport report;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
    bool all_positive = true;
    bool all_negative = true;
    for (const auto& fp : ds.fixed_points) {
      const Rational v = pairing(fp.fiber_weight, rs.positive_coroots[k]);
      all_positive = all_positive && v > 0;
      all_negative = all_negative && v < 0;
    }
    const bool strictly_one_side = all_positive || all_negative;
    if (!strictly_one_side) {
      report.necessary_condition_holds = false;
      report.detail = "hull of the fixed-point values meets the wall of root " + rs.positive_roots[k].to_string();
      return report;
    }
  }
  report.necessary_condition_holds = true;
  report.detail = "hull of the fixed-point values avoids every root hyperplane (necessary condition only)";
  return report;
}

}  // namespace qrmult
