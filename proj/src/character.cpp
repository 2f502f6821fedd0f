#include "qrmult/character.hpp"

#include "qrmult/error.hpp"

namespace qrmult {

CharacterTable::CharacterTable(std::initializer_list<std::pair<const WeightVector, Integer>> entries) {
  for (const auto& [w, n] : entries) add(w, n);
}

void CharacterTable::add(const WeightVector& weight, const Integer& mult) {
  if (mult == 0) return;
  if (!weight.is_integral()) throw Error("non_integral", "character weight " + weight.to_string() + " is not integral");
  auto [it, inserted] = entries_.try_emplace(weight, mult);
  if (inserted) return;
  it->second += mult;
  if (it->second == 0) entries_.erase(it);
}

Integer CharacterTable::at(const WeightVector& weight) const {
  const auto it = entries_.find(weight);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer CharacterTable::total() const {
  Integer sum = 0;
  for (const auto& [w, n] : entries_) sum += n;
  return sum;
}

CharacterTable CharacterTable::operator+(const CharacterTable& other) const {
  CharacterTable out = *this;
  for (const auto& [w, n] : other.entries_) out.add(w, n);
  return out;
}

CharacterTable CharacterTable::operator-(const CharacterTable& other) const {
  return *this + other * Integer(-1);
}

CharacterTable CharacterTable::operator*(const Integer& factor) const {
  CharacterTable out;
  for (const auto& [w, n] : entries_) out.add(w, n * factor);
  return out;
}

}  // namespace qrmult
