#pragma once

#include <map>
#include <string>

#include "qrmult/character.hpp"
#include "qrmult/fpdata.hpp"
#include "qrmult/lattice.hpp"

namespace qrmult {

/// Character of the irreducible representation with highest weight λ via
/// Kostant's alternating sum: m_λ(μ) = Σ_w det(w) P(w(λ+δ) − (μ+δ)), P the
/// partition function of the positive roots. Throws Error("non_dominant").
CharacterTable irreducible_character(const RootSystem& rs, const WeightVector& lambda);

struct DecompositionResult {
  std::map<WeightVector, Integer> multiplicities;  // dominant μ ↦ N(μ), zero entries omitted
  CharacterTable residual;                         // χ − Σ N(μ) χ_μ

  /// True iff the residual vanishes (the input was W-invariant).
  bool exact() const { return residual.empty(); }
};

/// N(μ) = Σ_w det(w) χ(w(μ+δ) − δ) for every dominant μ the support can
/// reach; negative N (virtual characters) are reported as they are.
DecompositionResult decompose_character(const CharacterTable& chi, const RootSystem& rs);

/// Convolution of multiplicity tables (character of the tensor product).
CharacterTable tensor(const CharacterTable& a, const CharacterTable& b);

/// Heuristic: whether the hull of the fixed-point moment values J_F stays
/// strictly on one side of every root hyperplane. Only a necessary
/// condition for J(M) ⊂ g*_reg; never a certificate.
struct RegularImageReport {
  bool necessary_condition_holds = false;
  std::string detail;  // first offending root when it fails
};

RegularImageReport regular_image_check(const LocalizationDataset& ds, const RootSystem& rs);

}  // namespace qrmult
