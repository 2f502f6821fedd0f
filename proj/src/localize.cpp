#include "qrmult/localize.hpp"

#include <map>

#include "qrmult/error.hpp"

namespace qrmult {

PolarizedFixedPoint polarize(const FixedPointDatum& fp, const WeightVector& eta) {
  PolarizedFixedPoint out;
  out.source_label = fp.label;
  out.shift = WeightVector::zero(eta.rank());
  for (const auto& alpha : fp.normal_weights) {
    const Rational p = pairing(alpha, eta);
    if (p == 0) {
      throw Error("eta_not_generic",
                  "eta not generic: " + eta.to_string() + " is orthogonal to normal weight " + alpha.to_string() +
                      " at fixed point '" + fp.label + "'");
    }
    const bool flip = p < 0;
    const WeightVector polarized = flip ? -alpha : alpha;
    out.flip_flags.push_back(flip);
    if (flip) {
      ++out.sign_count;
      out.shift = out.shift + polarized;
    }
    out.polarized_weights.push_back(polarized);
  }
  return out;
}

void PartitionProblem::check_pointed() const {
  for (const auto& a : columns) {
    if (pairing(a, eta) <= 0) {
      throw Error("not_pointed", "column " + a.to_string() + " does not pair positively with " + eta.to_string());
    }
  }
  if (!lower_bounds.empty() && lower_bounds.size() != columns.size()) {
    throw Error("length_mismatch", "lower_bounds must have one entry per column");
  }
}

namespace {

using IntVec = std::vector<std::int64_t>;

// Depth-first recursion over columns; k_j is bounded by ⟨t, η⟩ / ⟨a^j, η⟩
// and results are memoized per (column, remaining target).
class PartitionCounter {
 public:
  PartitionCounter(std::vector<IntVec> columns, IntVec eta) : columns_(std::move(columns)), eta_(std::move(eta)) {
    for (const auto& a : columns_) column_eta_.push_back(dot(a, eta_));
    memo_.resize(columns_.size());
  }

  Integer count(const IntVec& target) { return count_from(0, target, dot(target, eta_)); }

 private:
  static std::int64_t dot(const IntVec& a, const IntVec& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  Integer count_from(std::size_t j, const IntVec& target, std::int64_t target_eta) {
    if (target_eta < 0) return 0;
    if (j == columns_.size()) {
      for (auto v : target)
        if (v != 0) return 0;
      return 1;
    }
    const IntVec& a = columns_[j];
    if (j + 1 == columns_.size()) {
      if (target_eta % column_eta_[j] != 0) return 0;
      const std::int64_t k = target_eta / column_eta_[j];
      for (std::size_t i = 0; i < a.size(); ++i)
        if (target[i] != k * a[i]) return 0;
      return 1;
    }
    auto& memo = memo_[j];
    if (auto it = memo.find(target); it != memo.end()) return it->second;

    Integer total = 0;
    IntVec rest = target;
    std::int64_t rest_eta = target_eta;
    for (std::int64_t k = 0; rest_eta >= 0; ++k) {
      total += count_from(j + 1, rest, rest_eta);
      for (std::size_t i = 0; i < a.size(); ++i) rest[i] -= a[i];
      rest_eta -= column_eta_[j];
    }
    memo.emplace(target, total);
    return total;
  }

  std::vector<IntVec> columns_;
  IntVec eta_;
  IntVec column_eta_;
  std::vector<std::map<IntVec, Integer>> memo_;
};

IntVec integral_direction(const WeightVector& eta) {
  Integer lcm = 1;
  for (const auto& c : eta.coords()) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
  return (eta * Rational(lcm)).to_integers();
}

Integer count_with_eta(const std::vector<WeightVector>& columns, const WeightVector& residual,
                       const WeightVector& eta) {
  // Integer combinations of integral columns are integral.
  if (!residual.is_integral()) return 0;
  std::vector<IntVec> cols;
  cols.reserve(columns.size());
  for (const auto& a : columns) cols.push_back(a.to_integers());
  PartitionCounter counter(std::move(cols), integral_direction(eta));
  return counter.count(residual.to_integers());
}

}  // namespace

Integer count_partitions(const PartitionProblem& problem) {
  problem.check_pointed();
  WeightVector residual = problem.target;
  if (problem.shift.rank() != 0) residual = residual - problem.shift;
  for (std::size_t j = 0; j < problem.lower_bounds.size(); ++j) {
    if (problem.lower_bounds[j] != 0) residual = residual - problem.columns[j] * Rational(problem.lower_bounds[j]);
  }
  return count_with_eta(problem.columns, residual, problem.eta);
}

std::vector<WeightVector> all_normal_weights(const LocalizationDataset& ds) {
  std::vector<WeightVector> out;
  for (const auto& fp : ds.fixed_points) out.insert(out.end(), fp.normal_weights.begin(), fp.normal_weights.end());
  return out;
}

namespace {

struct PreparedFixedPoint {
  PolarizedFixedPoint polarized;
  WeightVector fiber_weight;
  Polynomial coefficient;
};

class MultiplicityEngine {
 public:
  MultiplicityEngine(const LocalizationDataset& ds, const std::optional<WeightVector>& eta)
      : eta_(eta ? *eta : pick_generic_direction(all_normal_weights(ds), ds.rank)) {
    if (eta_.rank() != ds.rank) throw Error("length_mismatch", "eta must have length rank");
    for (const auto& fp : ds.fixed_points) prepared_.push_back({polarize(fp, eta_), fp.fiber_weight, fp.coefficient});
  }

  Integer operator()(const WeightVector& mu, std::int64_t m) const {
    if (!mu.is_integral()) throw Error("non_lattice_weight", "mu " + mu.to_string() + " is not a lattice point");
    Rational total = 0;
    for (const auto& p : prepared_) {
      const Rational c = p.coefficient(Rational(m));
      if (c == 0) continue;
      const WeightVector residual = p.fiber_weight * Rational(m) - mu - p.polarized.shift;
      const Integer n = count_with_eta(p.polarized.polarized_weights, residual, eta_);
      if (n == 0) continue;
      total += (p.polarized.sign_count % 2 == 0 ? c : Rational(-c)) * Rational(n);
    }
    if (!is_integer(total)) {
      throw Error("non_integral_multiplicity", "multiplicity at " + mu.to_string() + ", m=" + std::to_string(m) +
                                                   " is " + to_string(total) + "; check coefficient polynomials");
    }
    return boost::multiprecision::numerator(total);
  }

 private:
  WeightVector eta_;
  std::vector<PreparedFixedPoint> prepared_;
};

}  // namespace

Integer multiplicity(const LocalizationDataset& ds, const WeightVector& mu, std::int64_t m,
                     const std::optional<WeightVector>& eta) {
  if (mu.rank() != ds.rank) throw Error("length_mismatch", "mu must have length rank");
  return MultiplicityEngine(ds, eta)(mu, m);
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> support_box(const LocalizationDataset& ds,
                                                                            std::int64_t m) {
  std::vector<std::int64_t> lo(ds.rank), hi(ds.rank);
  bool first = true;
  for (const auto& fp : ds.fixed_points) {
    const auto j = fp.fiber_weight.to_integers();
    for (std::size_t i = 0; i < ds.rank; ++i) {
      const std::int64_t v = m * j[i];
      lo[i] = first ? v : std::min(lo[i], v);
      hi[i] = first ? v : std::max(hi[i], v);
    }
    first = false;
  }
  return {lo, hi};
}

CharacterTable character_table(const LocalizationDataset& ds, std::int64_t m, const std::optional<WeightVector>& eta) {
  const MultiplicityEngine engine(ds, eta);
  const auto [lo, hi] = support_box(ds, m);
  CharacterTable table;
  std::vector<std::int64_t> point = lo;
  while (true) {
    const WeightVector mu = WeightVector::from_integers(point);
    table.add(mu, engine(mu, m));
    std::size_t i = 0;
    for (; i < point.size(); ++i) {
      if (point[i] < hi[i]) {
        ++point[i];
        break;
      }
      point[i] = lo[i];
    }
    if (i == point.size()) break;
  }
  return table;
}

ScalingMode parse_scaling_mode(std::string_view text) {
  if (text == "fixed") return ScalingMode::fixed;
  if (text == "scaled") return ScalingMode::scaled;
  throw Error("bad_mode", "mode must be 'fixed' or 'scaled', got '" + std::string(text) + "'");
}

std::string to_string(ScalingMode mode) { return mode == ScalingMode::fixed ? "fixed" : "scaled"; }

std::vector<std::pair<std::int64_t, Integer>> multiplicity_series(const LocalizationDataset& ds,
                                                                  const WeightVector& mu, std::int64_t m_from,
                                                                  std::int64_t m_to, ScalingMode mode,
                                                                  const std::optional<WeightVector>& eta) {
  if (m_from < 1) throw Error("bad_range", "m_from must be at least 1");
  if (mu.rank() != ds.rank) throw Error("length_mismatch", "mu must have length rank");
  const auto point_at = [&](std::int64_t m) { return mode == ScalingMode::fixed ? mu : mu * Rational(m); };
  for (std::int64_t m = m_from; m <= m_to; ++m) {
    if (!point_at(m).is_integral()) {
      throw Error("non_lattice_weight", "m*mu = " + point_at(m).to_string() + " is not a lattice point at m=" +
                                            std::to_string(m));
    }
  }
  const MultiplicityEngine engine(ds, eta);
  std::vector<std::pair<std::int64_t, Integer>> out;
  for (std::int64_t m = m_from; m <= m_to; ++m) out.emplace_back(m, engine(point_at(m), m));
  return out;
}

}  // namespace qrmult
