#include "qrmult/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrmult/ehrhart.hpp"
#include "qrmult/error.hpp"
#include "qrmult/fpdata.hpp"
#include "qrmult/localize.hpp"
#include "qrmult/oracle.hpp"
#include "qrmult/qrverify.hpp"
#include "qrmult/weylred.hpp"

namespace qrmult::cli {

namespace {

using Json = nlohmann::json;

enum class Format { human, records };

struct RunConfig {
  std::string dataset;
  std::string mu;
  std::int64_t m = 0;
  std::string m_range;
  std::int64_t m_max = -1;
  std::string mode = "scaled";
  std::string eta;
  std::int64_t period = 1;
  int degree = 0;
  std::string strata;
  std::string series;
  std::string weights;
  std::string character;
  std::string format = "human";
};

struct Range {
  std::int64_t from;
  std::int64_t to;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Error("usage", "--m-range must look like A..B, got '" + text + "'");
  const auto from = to_int64(parse_integer(text.substr(0, dots)));
  const auto to = to_int64(parse_integer(text.substr(dots + 2)));
  if (from < 1 || to < from) throw Error("usage", "--m-range needs 1 <= A <= B, got '" + text + "'");
  return {from, to};
}

std::optional<WeightVector> optional_eta(const RunConfig& cfg) {
  if (cfg.eta.empty()) return std::nullopt;
  return parse_weight(cfg.eta);
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error("usage", std::string("missing required flag ") + flag);
}

Json rational_list(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficient_strings()) out.push_back(c);
  return out;
}

void emit(std::ostream& out, const Json& record) { out << record.dump() << "\n"; }

std::string phase_label(int phase) { return phase == 1 ? "+1" : "-1"; }

// ---------------------------------------------------------------------------

int cmd_validate(const RunConfig& cfg, Format fmt, std::ostream& out) {
  require(cfg.dataset, "--dataset");
  const auto ds = load_dataset_file(cfg.dataset);
  const auto report = validate(ds);
  for (const auto& f : report.findings) {
    const std::string severity = f.severity == Finding::Severity::error ? "error" : "warning";
    if (fmt == Format::records) {
      emit(out, {{"record", "finding"}, {"severity", severity}, {"location", f.location}, {"code", f.code},
                 {"message", f.message}});
    } else {
      out << severity << " " << f.code << " " << f.location << ": " << f.message << "\n";
    }
  }
  if (fmt == Format::records) {
    emit(out, {{"record", "validation"}, {"ok", report.ok()}, {"errors", report.error_count()},
               {"warnings", report.warning_count()}, {"fixed_points", ds.fixed_points.size()}, {"rank", ds.rank}});
  } else {
    out << (report.ok() ? "ok" : "invalid") << ": rank " << ds.rank << ", " << ds.fixed_points.size()
        << " fixed points, " << report.error_count() << " errors, " << report.warning_count() << " warnings\n";
  }
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_mult(const RunConfig& cfg, Format fmt, std::ostream& out) {
  require(cfg.dataset, "--dataset");
  require(cfg.mu, "--mu");
  if (cfg.m < 1) throw Error("usage", "--m must be a positive integer");
  const auto ds = load_dataset_file(cfg.dataset);
  const auto mu = parse_weight(cfg.mu);
  const Integer n = multiplicity(ds, mu, cfg.m, optional_eta(cfg));
  if (fmt == Format::records) {
    emit(out, {{"record", "multiplicity"}, {"mu", mu.to_csv()}, {"m", cfg.m}, {"value", to_string(n)}});
  } else {
    out << to_string(n) << "\n";
  }
  return kExitOk;
}

void print_table(const CharacterTable& table, Format fmt, std::ostream& out, std::int64_t m) {
  for (const auto& [w, n] : table.entries()) {
    if (fmt == Format::records) {
      emit(out, {{"record", "weight"}, {"m", m}, {"mu", w.to_csv()}, {"mult", to_string(n)}});
    } else {
      out << w.to_string() << "\t" << to_string(n) << "\n";
    }
  }
  if (fmt == Format::records) {
    emit(out, {{"record", "total"}, {"m", m}, {"dimension", to_string(table.total())}});
  } else {
    out << "total\t" << to_string(table.total()) << "\n";
  }
}

int cmd_character(const RunConfig& cfg, Format fmt, std::ostream& out) {
  require(cfg.dataset, "--dataset");
  if (cfg.m < 1) throw Error("usage", "--m must be a positive integer");
  const auto ds = load_dataset_file(cfg.dataset);
  print_table(character_table(ds, cfg.m, optional_eta(cfg)), fmt, out, cfg.m);
  return kExitOk;
}

int cmd_series(const RunConfig& cfg, Format fmt, std::ostream& out) {
  require(cfg.dataset, "--dataset");
  require(cfg.mu, "--mu");
  require(cfg.m_range, "--m-range");
  const auto ds = load_dataset_file(cfg.dataset);
  const auto mu = parse_weight(cfg.mu);
  const auto range = parse_range(cfg.m_range);
  const auto mode = parse_scaling_mode(cfg.mode);
  for (const auto& [m, n] : multiplicity_series(ds, mu, range.from, range.to, mode, optional_eta(cfg))) {
    if (fmt == Format::records) {
      emit(out, {{"record", "series"}, {"mode", to_string(mode)}, {"mu", mu.to_csv()}, {"m", m},
                 {"value", to_string(n)}});
    } else {
      out << m << "\t" << to_string(n) << "\n";
    }
  }
  return kExitOk;
}

void print_fit(const QuasiPolynomial& qp, Format fmt, std::ostream& out) {
  if (fmt == Format::records) {
    Json residues = Json::array();
    for (const auto& p : qp.residue_polys) residues.push_back(rational_list(p));
    emit(out, {{"record", "fit"}, {"period", qp.period}, {"residue_polys", residues}});
  } else {
    out << "period " << qp.period << "\n";
    for (std::size_t j = 0; j < qp.residue_polys.size(); ++j) {
      out << "q_" << j << "(n) = f(" << qp.period << "n - " << j << ") = " << qp.residue_polys[j].to_string("n")
          << "\n";
    }
  }
  if (qp.period > 2) return;
  for (const auto& term : phase_decomposition(qp)) {
    if (fmt == Format::records) {
      emit(out, {{"record", "phase"}, {"phase", phase_label(term.phase)}, {"poly", rational_list(term.polynomial)}});
    } else {
      out << "phase " << phase_label(term.phase) << ": " << term.polynomial.to_string() << "\n";
    }
  }
}

int cmd_fit(const RunConfig& cfg, Format fmt, std::ostream& out) {
  std::vector<Sample> samples;
  if (!cfg.series.empty()) {
    const std::int64_t start = cfg.m_range.empty() ? 1 : parse_range(cfg.m_range).from;
    const auto values = parse_weight(cfg.series);
    for (std::size_t i = 0; i < values.rank(); ++i) samples.emplace_back(start + static_cast<std::int64_t>(i), values[i]);
  } else {
    require(cfg.dataset, "--dataset or --series");
    require(cfg.mu, "--mu");
    require(cfg.m_range, "--m-range");
    const auto ds = load_dataset_file(cfg.dataset);
    const auto range = parse_range(cfg.m_range);
    samples = to_samples(multiplicity_series(ds, parse_weight(cfg.mu), range.from, range.to,
                                             parse_scaling_mode(cfg.mode), optional_eta(cfg)));
  }
  print_fit(fit_quasi_polynomial(samples, cfg.period, cfg.degree), fmt, out);
  return kExitOk;
}

int cmd_verify_qr(const RunConfig& cfg, Format fmt, std::ostream& out) {
  require(cfg.dataset, "--dataset");
  require(cfg.mu, "--mu");
  const auto ds = load_dataset_file(cfg.dataset);
  const auto strata = load_strata(read_text_file(cfg.strata.empty() ? cfg.dataset : cfg.strata));
  std::int64_t m_max = cfg.m_max;
  if (m_max < 0 && !cfg.m_range.empty()) m_max = parse_range(cfg.m_range).to;
  if (m_max < 0) throw Error("usage", "verify-qr needs --m-max N (or --m-range 1..N)");
  const auto report = verify_structure(ds, parse_weight(cfg.mu), strata, m_max, parse_scaling_mode(cfg.mode),
                                       optional_eta(cfg));

  if (fmt == Format::records) {
    Json series = Json::array();
    for (const auto& [m, n] : report.series) series.push_back(to_string(n));
    emit(out, {{"record", "series"}, {"mode", to_string(report.mode)}, {"values", series}});
  } else {
    out << "series (" << to_string(report.mode) << ", m=1.." << report.series.size() << "):";
    for (const auto& [m, n] : report.series) out << " " << to_string(n);
    out << "\n";
  }
  print_fit(report.fitted, fmt, out);
  if (fmt == Format::records) {
    emit(out, {{"record", "structure"}, {"period_used", report.period_used}, {"degree_used", report.degree_used},
               {"onset", report.onset}, {"minimal_period", report.minimal_period}});
  } else {
    out << "onset m0 = " << report.onset << "\n";
    out << "minimal period " << report.minimal_period << " (declared " << report.period_used << ")\n";
  }
  for (const auto& v : report.phases) {
    if (fmt == Format::records) {
      Json rec{{"record", "phase_verdict"}, {"phase", phase_label(v.phase)}, {"poly", rational_list(v.polynomial)},
               {"strata", v.strata}, {"degree_bound", v.degree_bound}, {"degree_ok", v.degree_ok}};
      if (v.expected) {
        rec["expected"] = rational_list(*v.expected);
        rec["matches_expected"] = *v.matches_expected;
      }
      emit(out, rec);
    } else {
      out << "phase " << phase_label(v.phase) << " [" << (v.strata.empty() ? "no stratum" : "") ;
      for (std::size_t i = 0; i < v.strata.size(); ++i) out << (i ? "," : "") << v.strata[i];
      out << "]: " << v.polynomial.to_string() << "  degree " << (v.degree_ok ? "ok" : "EXCEEDS bound");
      if (v.expected) out << ", expected " << v.expected->to_string() << (*v.matches_expected ? " (match)" : " (MISMATCH)");
      out << "\n";
    }
  }
  if (fmt == Format::human) out << (report.ok() ? "verdict: consistent" : "verdict: inconsistent") << "\n";
  else emit(out, {{"record", "verdict"}, {"ok", report.ok()}});
  return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_oracle_check(const RunConfig& cfg, Format fmt, std::ostream& out, std::ostream& err) {
  require(cfg.dataset, "--dataset");
  const auto ds = load_dataset_file(cfg.dataset);
  std::string weights = cfg.weights;
  if (weights.empty()) {
    const auto it = ds.metadata.find("oracle_weights");
    if (it == ds.metadata.end()) throw Error("usage", "need --weights or metadata.oracle_weights");
    weights = it->second;
  }
  std::int64_t m_max = cfg.m_max;
  if (m_max < 0 && !cfg.m_range.empty()) m_max = parse_range(cfg.m_range).to;
  if (m_max < 0) throw Error("usage", "oracle-check needs --m-max N");
  if (m_max == 0) err << "warning: m_max = 0, nothing to check\n";

  ProjectiveActionSpec spec{parse_weight_list(weights), 1};
  for (std::int64_t m = 1; m <= m_max; ++m) {
    spec.degree = m;
    const auto expected = monomial_character(spec);
    const auto actual = character_table(ds, m, optional_eta(cfg));
    if (actual == expected) continue;
    // First mismatching weight in lexicographic order.
    const CharacterTable diff = actual - expected;
    const auto& [w, delta] = *diff.entries().begin();
    if (fmt == Format::records) {
      emit(out, {{"record", "oracle_mismatch"}, {"m", m}, {"mu", w.to_csv()}, {"localization", to_string(actual.at(w))},
                 {"oracle", to_string(expected.at(w))}});
    } else {
      out << "mismatch at m=" << m << ", weight " << w.to_string() << ": localization " << to_string(actual.at(w))
          << ", oracle " << to_string(expected.at(w)) << "\n";
    }
    return kExitCheckFailed;
  }
  if (fmt == Format::records) {
    emit(out, {{"record", "oracle_check"}, {"ok", true}, {"m_max", m_max}});
  } else {
    out << "ok: localization matches the monomial oracle for m = 1.." << m_max << "\n";
  }
  return kExitOk;
}

int cmd_weyl_decompose(const RunConfig& cfg, Format fmt, std::ostream& out) {
  require(cfg.character, "--character");
  const auto doc = load_character_document(read_text_file(cfg.character));
  std::optional<RootSystem> rs = doc.root_system;
  if (!cfg.dataset.empty()) rs = load_dataset_file(cfg.dataset).root_system;
  if (!rs) throw Error("usage", "no root system: add root_system to the character file or pass --dataset");
  const auto result = decompose_character(doc.table, *rs);
  for (const auto& [mu, n] : result.multiplicities) {
    if (fmt == Format::records) {
      emit(out, {{"record", "irreducible"}, {"mu", mu.to_csv()}, {"mult", to_string(n)}});
    } else {
      out << "N" << mu.to_string() << " = " << to_string(n) << "\n";
    }
  }
  if (fmt == Format::records) {
    Json residual = Json::array();
    for (const auto& [w, n] : result.residual.entries()) residual.push_back({{"mu", w.to_csv()}, {"mult", to_string(n)}});
    emit(out, {{"record", "decomposition"}, {"exact", result.exact()}, {"residual", residual}});
  } else if (result.exact()) {
    out << "residual: empty\n";
  } else {
    out << "residual: nonempty (input is not W-invariant)\n";
    for (const auto& [w, n] : result.residual.entries()) out << "  " << w.to_string() << "\t" << to_string(n) << "\n";
  }
  return result.exact() ? kExitOk : kExitCheckFailed;
}

std::string one_line(std::string text) {
  for (auto& c : text)
    if (c == '\n' || c == '\r') c = ' ';
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact multiplicities of quantized torus and compact group actions from fixed-point data",
               "qrmult"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "human | records")->check(CLI::IsMember({"human", "records"}));
  };
  const auto add_dataset = [&](CLI::App* sub) { sub->add_option("--dataset", cfg.dataset, "dataset document"); };
  const auto add_eta = [&](CLI::App* sub) { sub->add_option("--eta", cfg.eta, "chamber direction \"a,b,...\""); };

  auto* validate_cmd = app.add_subcommand("validate", "validate a dataset document");
  add_dataset(validate_cmd);

  auto* mult_cmd = app.add_subcommand("mult", "multiplicity N^(m)(mu)");
  add_dataset(mult_cmd);
  mult_cmd->add_option("--mu", cfg.mu, "weight \"a,b,...\"");
  mult_cmd->add_option("--m", cfg.m, "tensor power m");
  add_eta(mult_cmd);

  auto* character_cmd = app.add_subcommand("character", "full character table at level m");
  add_dataset(character_cmd);
  character_cmd->add_option("--m", cfg.m, "tensor power m");
  add_eta(character_cmd);

  auto* series_cmd = app.add_subcommand("series", "multiplicities over a range of m");
  add_dataset(series_cmd);
  series_cmd->add_option("--mu", cfg.mu, "weight");
  series_cmd->add_option("--m-range", cfg.m_range, "A..B");
  series_cmd->add_option("--mode", cfg.mode, "fixed | scaled")->check(CLI::IsMember({"fixed", "scaled"}));
  add_eta(series_cmd);

  auto* fit_cmd = app.add_subcommand("fit", "fit an arithmetic polynomial to a series");
  fit_cmd->add_option("--series", cfg.series, "values \"v1,v2,...\" at m = A, A+1, ...");
  add_dataset(fit_cmd);
  fit_cmd->add_option("--mu", cfg.mu, "weight");
  fit_cmd->add_option("--m-range", cfg.m_range, "A..B");
  fit_cmd->add_option("--mode", cfg.mode, "fixed | scaled")->check(CLI::IsMember({"fixed", "scaled"}));
  fit_cmd->add_option("--period", cfg.period, "period K")->required();
  fit_cmd->add_option("--degree", cfg.degree, "degree D")->required();
  add_eta(fit_cmd);

  auto* verify_cmd = app.add_subcommand("verify-qr", "check the arithmetic-polynomial structure against strata");
  add_dataset(verify_cmd);
  verify_cmd->add_option("--mu", cfg.mu, "weight");
  verify_cmd->add_option("--strata", cfg.strata, "strata document (default: the dataset file)");
  verify_cmd->add_option("--m-max", cfg.m_max, "largest m sampled");
  verify_cmd->add_option("--m-range", cfg.m_range, "1..N, alternative to --m-max");
  verify_cmd->add_option("--mode", cfg.mode, "fixed | scaled")->check(CLI::IsMember({"fixed", "scaled"}));
  add_eta(verify_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle-check", "compare against the monomial oracle");
  add_dataset(oracle_cmd);
  oracle_cmd->add_option("--weights", cfg.weights, "coordinate weights \"w0;w1;...\"");
  oracle_cmd->add_option("--m-max", cfg.m_max, "largest m checked");
  oracle_cmd->add_option("--m-range", cfg.m_range, "1..N, alternative to --m-max");
  add_eta(oracle_cmd);

  auto* weyl_cmd = app.add_subcommand("weyl-decompose", "decompose a W-invariant character into irreducibles");
  weyl_cmd->add_option("--character", cfg.character, "character document");
  add_dataset(weyl_cmd);

  for (auto* sub : app.get_subcommands({})) add_common(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  const Format fmt = cfg.format == "records" ? Format::records : Format::human;
  try {
    if (validate_cmd->parsed()) return cmd_validate(cfg, fmt, out);
    if (mult_cmd->parsed()) return cmd_mult(cfg, fmt, out);
    if (character_cmd->parsed()) return cmd_character(cfg, fmt, out);
    if (series_cmd->parsed()) return cmd_series(cfg, fmt, out);
    if (fit_cmd->parsed()) return cmd_fit(cfg, fmt, out);
    if (verify_cmd->parsed()) return cmd_verify_qr(cfg, fmt, out);
    if (oracle_cmd->parsed()) return cmd_oracle_check(cfg, fmt, out, err);
    if (weyl_cmd->parsed()) return cmd_weyl_decompose(cfg, fmt, out);
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << one_line(e.what()) << "\n";
    return e.code() == "usage" ? kExitUsage : kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qrmult::cli
