#include "qrmult/oracle.hpp"

#include "qrmult/error.hpp"

namespace qrmult {

namespace {

void enumerate_monomials(const ProjectiveActionSpec& spec, std::size_t i, std::int64_t remaining,
                         const WeightVector& weight, CharacterTable& out) {
  const auto& w = spec.coord_weights;
  if (i + 1 == w.size()) {
    out.add(weight + w[i] * Rational(remaining), 1);
    return;
  }
  for (std::int64_t a = 0; a <= remaining; ++a) {
    enumerate_monomials(spec, i + 1, remaining - a, weight + w[i] * Rational(a), out);
  }
}

}  // namespace

CharacterTable monomial_character(const ProjectiveActionSpec& spec) {
  if (spec.coord_weights.empty()) throw Error("bad_action", "at least one homogeneous coordinate is required");
  const std::size_t rank = spec.coord_weights.front().rank();
  for (const auto& w : spec.coord_weights) {
    if (w.rank() != rank) throw Error("length_mismatch", "coordinate weights must share one rank");
  }
  if (spec.degree < 0) throw Error("bad_action", "degree must be nonnegative");
  CharacterTable out;
  enumerate_monomials(spec, 0, spec.degree, WeightVector::zero(rank), out);
  return out;
}

Integer total_dimension(const ProjectiveActionSpec& spec) {
  const std::int64_t n = static_cast<std::int64_t>(spec.coord_weights.size()) - 1;
  Integer result = 1;
  for (std::int64_t i = 1; i <= n; ++i) result = result * (spec.degree + i) / i;
  return result;
}

std::vector<WeightVector> parse_weight_list(std::string_view text) {
  std::vector<WeightVector> out;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    out.push_back(parse_weight(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
    if (out.back().rank() != out.front().rank()) {
      throw Error("rank_mismatch", "weight list mixes ranks " + std::to_string(out.front().rank()) + " and " +
                                       std::to_string(out.back().rank()));
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace qrmult
