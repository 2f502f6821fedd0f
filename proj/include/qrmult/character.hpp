#pragma once

#include <map>

#include "qrmult/lattice.hpp"
#include "qrmult/rational.hpp"

namespace qrmult {

/// Finitely supported map Λ → ℤ, e.g. a character Σ N(μ) e^μ. Zero
/// multiplicities are never stored.
class CharacterTable {
 public:
  using Map = std::map<WeightVector, Integer>;

  CharacterTable() = default;
  CharacterTable(std::initializer_list<std::pair<const WeightVector, Integer>> entries);

  /// Adds `mult` to the entry at `weight` (which must be integral).
  void add(const WeightVector& weight, const Integer& mult);
  Integer at(const WeightVector& weight) const;

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Σ of all multiplicities (the virtual dimension).
  Integer total() const;

  CharacterTable operator+(const CharacterTable& other) const;
  CharacterTable operator-(const CharacterTable& other) const;
  CharacterTable operator*(const Integer& factor) const;
  bool operator==(const CharacterTable& other) const = default;

 private:
  Map entries_;
};

}  // namespace qrmult
