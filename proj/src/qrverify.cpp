#include "qrmult/qrverify.hpp"

#include <algorithm>
#include <numeric>

#include "json_util.hpp"

namespace qrmult {

using detail::Json;
using detail::fail;

void check_stratum(const StratumPhaseDatum& s) {
  if (s.order < 1) throw Error("bad_stratum", "stratum '" + s.label + "': order must be positive");
  if (s.rotation < 0 || s.rotation >= 1) throw Error("bad_stratum", "stratum '" + s.label + "': rotation not in [0,1)");
  if (!is_integer(s.rotation * s.order)) {
    throw Error("bad_stratum", "stratum '" + s.label + "': rotation is not an order-th root of unity");
  }
  if (s.degree_bound < 0) throw Error("bad_stratum", "stratum '" + s.label + "': negative degree_bound");
  if (s.expected_poly && s.expected_poly->degree() > s.degree_bound) {
    throw Error("bad_stratum", "stratum '" + s.label + "': expected_poly exceeds degree_bound");
  }
}

std::vector<StratumPhaseDatum> load_strata(std::string_view document) {
  const Json doc = detail::parse_document(document);
  const Json* list = &doc;
  std::string base = "strata";
  if (doc.is_object()) {
    if (!doc.contains("strata")) fail("schema", "document", "missing field 'strata'");
    list = &doc.at("strata");
  }
  if (!list->is_array()) fail("schema", base, "expected an array");
  std::vector<StratumPhaseDatum> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string loc = base + "[" + std::to_string(i) + "]";
    const Json& item = (*list)[i];
    detail::require_keys(item, loc, {"label", "order", "rotation", "degree_bound"}, {"expected_poly"});
    StratumPhaseDatum s;
    if (!item.at("label").is_string()) fail("schema", loc + ".label", "expected a string");
    s.label = item.at("label").get<std::string>();
    s.order = detail::parse_int(item.at("order"), loc + ".order");
    s.rotation = detail::parse_rational_string(item.at("rotation"), loc + ".rotation");
    s.degree_bound = static_cast<int>(detail::parse_int(item.at("degree_bound"), loc + ".degree_bound"));
    if (item.contains("expected_poly")) {
      s.expected_poly = detail::parse_rational_poly(item.at("expected_poly"), loc + ".expected_poly");
    }
    try {
      check_stratum(s);
    } catch (const Error& e) {
      fail(e.code(), loc, e.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool QRReport::ok() const {
  return std::all_of(phases.begin(), phases.end(), [](const PhaseVerdict& v) {
    return v.degree_ok && v.matches_expected.value_or(true);
  });
}

std::optional<std::int64_t> onset_threshold(const std::vector<Sample>& samples, const QuasiPolynomial& qp) {
  std::vector<Sample> sorted = samples;
  std::sort(sorted.begin(), sorted.end(), [](const Sample& a, const Sample& b) { return a.first < b.first; });
  if (sorted.empty()) return std::nullopt;
  std::optional<std::int64_t> onset = sorted.front().first;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (evaluate(qp, sorted[i].first) != sorted[i].second) {
      onset = i + 1 < sorted.size() ? std::optional<std::int64_t>(sorted[i + 1].first) : std::nullopt;
    }
  }
  return onset;
}

QRReport verify_structure(const LocalizationDataset& ds, const WeightVector& mu,
                          const std::vector<StratumPhaseDatum>& strata, std::int64_t m_max, ScalingMode mode,
                          const std::optional<WeightVector>& eta) {
  if (strata.empty()) throw Error("bad_stratum", "at least one stratum must be declared");
  std::int64_t period = 1;
  int degree = 0;
  for (const auto& s : strata) {
    check_stratum(s);
    period = std::lcm(period, s.order);
    degree = std::max(degree, s.degree_bound);
  }
  const std::int64_t needed = 2 * (period + degree + 2);
  if (m_max < needed) {
    throw Error("insufficient_range", "m_max must be at least " + std::to_string(needed) + " for period " +
                                          std::to_string(period) + " and degree " + std::to_string(degree));
  }

  QRReport report;
  report.mode = mode;
  report.series = multiplicity_series(ds, mu, 1, m_max, mode, eta);
  report.period_used = period;
  report.degree_used = degree;
  const auto samples = to_samples(report.series);

  std::vector<std::int64_t> witnesses;
  bool fitted = false;
  for (std::int64_t start = 1; start <= m_max / 2 && !fitted; ++start) {
    const std::vector<Sample> tail(samples.begin() + (start - 1), samples.end());
    try {
      report.fitted = fit_quasi_polynomial(tail, period, degree);
      report.onset = start;
      fitted = true;
    } catch (const VerificationFailure& e) {
      if (witnesses.empty() || witnesses.back() != e.m()) witnesses.push_back(e.m());
    } catch (const Error& e) {
      if (e.code() == "insufficient_samples") break;
      throw;
    }
  }
  if (!fitted) {
    std::string list;
    for (auto m : witnesses) list += (list.empty() ? "" : ",") + std::to_string(m);
    throw Error("structure_violated", "structure violated: no arithmetic polynomial of period " +
                                          std::to_string(period) + " and degree " + std::to_string(degree) +
                                          " fits from any onset <= " + std::to_string(m_max / 2) +
                                          "; witness m=" + list);
  }

  const std::vector<Sample> from_onset(samples.begin() + (report.onset - 1), samples.end());
  report.minimal_period = minimal_period(from_onset, period, degree).first;

  if (period <= 2) {
    for (const auto& term : phase_decomposition(report.fitted)) {
      PhaseVerdict verdict;
      verdict.phase = term.phase;
      verdict.polynomial = term.polynomial;
      const Rational rotation = term.phase == 1 ? Rational(0) : Rational(1, 2);
      Polynomial expected_sum;
      bool all_expected = true;
      for (const auto& s : strata) {
        if (s.rotation != rotation) continue;
        verdict.strata.push_back(s.label);
        verdict.degree_bound = std::max(verdict.degree_bound, s.degree_bound);
        if (s.expected_poly) {
          expected_sum = expected_sum + *s.expected_poly;
        } else {
          all_expected = false;
        }
      }
      verdict.degree_ok = verdict.polynomial.degree() <= verdict.degree_bound;
      if (!verdict.strata.empty() && all_expected) {
        verdict.expected = expected_sum;
        verdict.matches_expected = expected_sum == verdict.polynomial;
      }
      report.phases.push_back(std::move(verdict));
    }
  }
  return report;
}

}  // namespace qrmult
