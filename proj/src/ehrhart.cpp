#include "qrmult/ehrhart.hpp"

#include <algorithm>
#include <map>

#include "qrmult/error.hpp"

namespace qrmult {

int QuasiPolynomial::degree() const {
  int d = -1;
  for (const auto& p : residue_polys) d = std::max(d, p.degree());
  return d;
}

std::size_t QuasiPolynomial::residue_index(std::int64_t m) const {
  return static_cast<std::size_t>(((-m) % period + period) % period);
}

Polynomial QuasiPolynomial::class_polynomial_in_m(std::size_t j) const {
  // n = (m + j) / k
  return residue_polys.at(j).compose_affine(Rational(1, period), Rational(static_cast<std::int64_t>(j), period));
}

Rational evaluate(const QuasiPolynomial& qp, std::int64_t m) {
  const std::size_t j = qp.residue_index(m);
  const std::int64_t n = (m + static_cast<std::int64_t>(j)) / qp.period;
  return qp.residue_polys.at(j)(Rational(n));
}

QuasiPolynomial fit_quasi_polynomial(const std::vector<Sample>& samples, std::int64_t period, int degree) {
  if (period < 1) throw Error("bad_period", "period must be positive");
  if (degree < 0) throw Error("bad_degree", "degree must be nonnegative");

  QuasiPolynomial qp;
  qp.period = period;
  // Per class: (n, value) in input order.
  std::vector<std::vector<std::pair<std::int64_t, const Sample*>>> classes(static_cast<std::size_t>(period));
  for (const auto& s : samples) {
    const std::size_t j = qp.residue_index(s.first);
    classes[j].emplace_back((s.first + static_cast<std::int64_t>(j)) / period, &s);
  }

  const std::size_t unknowns = static_cast<std::size_t>(degree) + 1;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto& cls = classes[j];
    if (cls.size() < unknowns + 1) {
      throw Error("insufficient_samples", "insufficient samples per class: residue class " + std::to_string(j) +
                                              " mod " + std::to_string(period) + " has " +
                                              std::to_string(cls.size()) + ", needs " +
                                              std::to_string(unknowns + 1));
    }
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (std::size_t i = 0; i < unknowns; ++i) {
      std::vector<Rational> row(unknowns);
      Rational power = 1;
      for (auto& entry : row) {
        entry = power;
        power *= cls[i].first;
      }
      a.push_back(std::move(row));
      b.push_back(cls[i].second->second);
    }
    const auto coeffs = solve_linear_system(std::move(a), std::move(b));
    if (!coeffs) throw Error("insufficient_samples", "repeated sample arguments in class " + std::to_string(j));
    Polynomial q(*coeffs);
    for (std::size_t i = unknowns; i < cls.size(); ++i) {
      if (q(Rational(cls[i].first)) != cls[i].second->second) {
        throw VerificationFailure(cls[i].second->first,
                                  "verification failure at m=" + std::to_string(cls[i].second->first) +
                                                " (period " + std::to_string(period) + ", degree " +
                                                std::to_string(degree) + ")");
      }
    }
    qp.residue_polys.push_back(std::move(q));
  }
  return qp;
}

std::pair<std::int64_t, QuasiPolynomial> minimal_period(const std::vector<Sample>& samples, std::int64_t k_max,
                                                         int degree) {
  if (k_max < 1) throw Error("bad_period", "k_max must be positive");
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (k_max % k != 0) continue;
    try {
      return {k, fit_quasi_polynomial(samples, k, degree)};
    } catch (const VerificationFailure&) {
    }
  }
  throw Error("no_period_fits", "no period <= " + std::to_string(k_max) + " fits with degree " + std::to_string(degree));
}

std::vector<PhaseTerm> phase_decomposition(const QuasiPolynomial& qp) {
  if (qp.period == 1) return {{+1, qp.residue_polys.at(0)}};
  if (qp.period != 2) {
    throw Error("phase_form_unsupported", "phase form requires cyclotomic arithmetic; use residue form");
  }
  const Polynomial even = qp.class_polynomial_in_m(0);
  const Polynomial odd = qp.class_polynomial_in_m(1);
  return {{+1, (even + odd) * Rational(1, 2)}, {-1, (even - odd) * Rational(1, 2)}};
}

Integer count_dilated(const PartitionProblem& problem, std::int64_t m) {
  PartitionProblem dilated = problem;
  dilated.target = problem.target * Rational(m);
  if (problem.shift.rank() != 0) dilated.target = dilated.target + problem.shift;
  dilated.shift = WeightVector();
  return count_partitions(dilated);
}

std::vector<Sample> to_samples(const std::vector<std::pair<std::int64_t, Integer>>& series) {
  std::vector<Sample> out;
  out.reserve(series.size());
  for (const auto& [m, n] : series) out.emplace_back(m, Rational(n));
  return out;
}

}  // namespace qrmult
