#pragma once

// Independent ground truth for the test suites. Nothing here calls into the
// counting, decomposition or fitting code paths it is used to check.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qrmult/fpdata.hpp"

namespace qrmult::testing {

using IntVec = std::vector<std::int64_t>;

inline std::string data_path(const std::string& name) { return std::string(QRMULT_DATA_DIR) + "/" + name; }

inline LocalizationDataset corpus(const std::string& name) { return load_dataset_file(data_path(name)); }

inline std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Counts k with Σ k_j a^j = target, k_j ≥ lower_j, by scanning the full box
/// lower_j ≤ k_j ≤ lower_j + ⌊⟨target, η⟩ / ⟨a^j, η⟩⌋.
inline std::int64_t naive_partition_count(const std::vector<IntVec>& columns, const IntVec& target,
                                          const std::vector<int>& lower, const IntVec& eta) {
  const std::int64_t budget = dot(target, eta);
  if (budget < 0) return 0;
  const std::size_t n = columns.size();
  if (n == 0) {
    for (auto v : target)
      if (v != 0) return 0;
    return 1;
  }
  std::vector<std::int64_t> lo(n), hi(n), k(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = lower.empty() ? 0 : lower[j];
    hi[j] = lo[j] + budget / dot(columns[j], eta);
    k[j] = lo[j];
  }
  std::int64_t count = 0;
  while (true) {
    IntVec sum(target.size(), 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k[j] * columns[j][i];
    if (sum == target) ++count;
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (k[j] < hi[j]) {
        ++k[j];
        break;
      }
      k[j] = lo[j];
    }
    if (j == n) break;
  }
  return count;
}

/// The multiplicity closed form for the circle acting on projective 2-space
/// with coordinate weights (1, -1, 0).
inline std::int64_t cp2_closed_form(std::int64_t l, std::int64_t m) {
  const std::int64_t a = std::llabs(l);
  if (a > m) return 0;
  return 1 + (m - a) / 2;
}

using SimpleTable = std::map<std::int64_t, std::int64_t>;

/// Weights a, a-2, ..., -a of the (a+1)-dimensional irreducible
/// representation of SU(2), in the fundamental-weight basis.
inline SimpleTable a1_irrep(std::int64_t a) {
  SimpleTable t;
  for (std::int64_t i = 0; i <= a; ++i) t[a - 2 * i] += 1;
  return t;
}

inline SimpleTable convolve(const SimpleTable& x, const SimpleTable& y) {
  SimpleTable out;
  for (const auto& [u, p] : x)
    for (const auto& [v, q] : y) out[u + v] += p * q;
  return out;
}

/// Repeatedly removes the highest weight's irreducible character.
inline SimpleTable strip_highest_weights_a1(SimpleTable chi) {
  SimpleTable result;
  while (true) {
    for (auto it = chi.begin(); it != chi.end();) it = it->second == 0 ? chi.erase(it) : std::next(it);
    if (chi.empty()) break;
    const auto [top, mult] = *chi.rbegin();
    result[top] += mult;
    for (const auto& [w, n] : a1_irrep(top)) chi[w] -= mult * n;
  }
  return result;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Every η in [-range, range]^p avoiding all hyperplanes, grouped by chamber
/// (the sign vector against `weights`); returns the first representative of
/// each chamber in scan order.
inline std::vector<IntVec> chamber_representatives(const std::vector<IntVec>& weights, std::size_t rank,
                                                   std::int64_t range = 3) {
  std::map<std::vector<int>, IntVec> chambers;
  std::vector<IntVec> order;
  IntVec eta(rank, -range);
  while (true) {
    std::vector<int> signs;
    bool generic = true;
    for (const auto& w : weights) {
      const auto p = dot(w, eta);
      if (p == 0) {
        generic = false;
        break;
      }
      signs.push_back(p > 0 ? 1 : -1);
    }
    if (generic && !chambers.contains(signs)) {
      chambers.emplace(signs, eta);
      order.push_back(eta);
    }
    std::size_t i = 0;
    for (; i < rank; ++i) {
      if (eta[i] < range) {
        ++eta[i];
        break;
      }
      eta[i] = -range;
    }
    if (i == rank) break;
  }
  return order;
}

}  // namespace qrmult::testing
