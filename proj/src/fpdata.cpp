#include "qrmult/fpdata.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json_util.hpp"

namespace qrmult {

using detail::Json;
using detail::fail;

bool LocalizationDataset::operator==(const LocalizationDataset& other) const {
  const auto same_roots = [](const std::optional<RootSystem>& a, const std::optional<RootSystem>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->simple_roots == b->simple_roots && a->simple_coroots == b->simple_coroots);
  };
  return rank == other.rank && fixed_points == other.fixed_points && metadata == other.metadata &&
         same_roots(root_system, other.root_system);
}

bool ValidationReport::ok() const { return error_count() == 0; }

std::size_t ValidationReport::error_count() const {
  std::size_t n = 0;
  for (const auto& f : findings) n += f.severity == Finding::Severity::error;
  return n;
}

std::size_t ValidationReport::warning_count() const { return findings.size() - error_count(); }

ValidationReport validate(const LocalizationDataset& ds) {
  ValidationReport report;
  const auto error = [&](std::string location, std::string code, std::string message) {
    report.findings.push_back({Finding::Severity::error, std::move(location), std::move(code), std::move(message)});
  };
  const auto warning = [&](std::string location, std::string code, std::string message) {
    report.findings.push_back({Finding::Severity::warning, std::move(location), std::move(code), std::move(message)});
  };

  if (ds.rank == 0) error("rank", "schema", "rank must be a positive integer");
  if (ds.fixed_points.empty()) error("fixed_points", "schema", "at least one fixed point is required");

  std::map<WeightVector, std::size_t> seen_fiber;
  for (std::size_t f = 0; f < ds.fixed_points.size(); ++f) {
    const auto& fp = ds.fixed_points[f];
    const std::string loc = "fixed_points[" + std::to_string(f) + "]";
    bool fiber_ok = true;
    if (fp.fiber_weight.rank() != ds.rank) {
      error(loc + ".fiber_weight", "rank_mismatch",
            "has length " + std::to_string(fp.fiber_weight.rank()) + ", rank is " + std::to_string(ds.rank));
      fiber_ok = false;
    } else if (!fp.fiber_weight.is_integral()) {
      error(loc + ".fiber_weight", "non_integer_weight", "fiber weight must be a lattice point");
      fiber_ok = false;
    }
    for (std::size_t j = 0; j < fp.normal_weights.size(); ++j) {
      const auto& w = fp.normal_weights[j];
      const std::string wloc = loc + ".normal_weights[" + std::to_string(j) + "]";
      if (w.rank() != ds.rank) {
        error(wloc, "rank_mismatch",
              "has length " + std::to_string(w.rank()) + ", rank is " + std::to_string(ds.rank));
      } else if (!w.is_integral()) {
        error(wloc, "non_integer_weight", "normal weight must be integral");
      } else if (w.is_zero()) {
        error(wloc, "zero_normal_weight", "zero normal weight");
      }
    }
    if (fiber_ok) {
      if (auto [it, inserted] = seen_fiber.try_emplace(fp.fiber_weight, f); !inserted) {
        warning(loc + ".fiber_weight", "duplicate_fiber_weight",
                "same fiber weight as fixed_points[" + std::to_string(it->second) + "]");
      }
    }
  }
  if (ds.root_system && ds.root_system->rank != ds.rank && !ds.root_system->simple_roots.empty()) {
    error("root_system", "rank_mismatch", "root system rank differs from dataset rank");
  }
  return report;
}

namespace {

RootSystem parse_root_system(const Json& block, std::size_t rank, const std::string& loc) {
  detail::require_keys(block, loc, {"simple_roots", "cartan_pairing"}, {});
  const auto read_rows = [&](const char* key) {
    const Json& rows = block.at(key);
    const std::string rloc = loc + "." + key;
    if (!rows.is_array()) fail("schema", rloc, "expected an array of integer arrays");
    std::vector<WeightVector> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string eloc = rloc + "[" + std::to_string(i) + "]";
      out.push_back(detail::parse_int_vector(rows[i], eloc));
      if (out.back().rank() != rank) fail("rank_mismatch", eloc, "length differs from rank");
    }
    return out;
  };
  auto roots = read_rows("simple_roots");
  auto coroots = read_rows("cartan_pairing");
  try {
    RootSystem rs = generate_weyl_group(std::move(roots), std::move(coroots));
    rs.rank = rank;
    return rs;
  } catch (const Error& e) {
    fail(e.code(), loc, e.what());
  }
}

Json root_system_json(const RootSystem& rs) {
  Json roots = Json::array();
  Json coroots = Json::array();
  for (const auto& r : rs.simple_roots) roots.push_back(detail::int_vector_json(r));
  for (const auto& c : rs.simple_coroots) coroots.push_back(detail::int_vector_json(c));
  return Json{{"simple_roots", roots}, {"cartan_pairing", coroots}};
}

std::size_t parse_rank(const Json& doc) {
  const auto rank = detail::parse_int(doc.at("rank"), "rank");
  if (rank <= 0) fail("schema", "rank", "must be a positive integer");
  return static_cast<std::size_t>(rank);
}

}  // namespace

LocalizationDataset load_dataset(std::string_view document) {
  const Json doc = detail::parse_document(document);
  // "strata" may ride along in the same file; it is read by load_strata.
  detail::require_keys(doc, "document", {"rank", "fixed_points"}, {"root_system", "metadata", "strata"});

  LocalizationDataset ds;
  ds.rank = parse_rank(doc);

  const Json& fps = doc.at("fixed_points");
  if (!fps.is_array()) fail("schema", "fixed_points", "expected an array");
  for (std::size_t f = 0; f < fps.size(); ++f) {
    const std::string loc = "fixed_points[" + std::to_string(f) + "]";
    const Json& item = fps[f];
    detail::require_keys(item, loc, {"label", "fiber_weight", "normal_weights"}, {"coefficient"});
    FixedPointDatum fp;
    if (!item.at("label").is_string()) fail("schema", loc + ".label", "expected a string");
    fp.label = item.at("label").get<std::string>();
    fp.fiber_weight = detail::parse_int_vector(item.at("fiber_weight"), loc + ".fiber_weight");
    const Json& normals = item.at("normal_weights");
    if (!normals.is_array()) fail("schema", loc + ".normal_weights", "expected an array of integer arrays");
    for (std::size_t j = 0; j < normals.size(); ++j) {
      fp.normal_weights.push_back(
          detail::parse_int_vector(normals[j], loc + ".normal_weights[" + std::to_string(j) + "]"));
    }
    if (item.contains("coefficient")) {
      fp.coefficient = detail::parse_rational_poly(item.at("coefficient"), loc + ".coefficient");
    }
    ds.fixed_points.push_back(std::move(fp));
  }

  if (doc.contains("metadata")) {
    const Json& meta = doc.at("metadata");
    if (!meta.is_object()) fail("schema", "metadata", "expected a string map");
    for (const auto& [key, value] : meta.items()) {
      if (!value.is_string()) fail("schema", "metadata." + key, "expected a string");
      ds.metadata.emplace(key, value.get<std::string>());
    }
  }

  // Report weight-level problems before building the root system so the
  // location names the offending fixed point.
  const auto report = validate(ds);
  for (const auto& finding : report.findings) {
    if (finding.severity == Finding::Severity::error) fail(finding.code, finding.location, finding.message);
  }

  if (doc.contains("root_system")) ds.root_system = parse_root_system(doc.at("root_system"), ds.rank, "root_system");
  return ds;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LocalizationDataset load_dataset_file(const std::string& path) { return load_dataset(read_text_file(path)); }

std::string serialize_dataset(const LocalizationDataset& ds) {
  Json doc;
  doc["rank"] = ds.rank;
  Json fps = Json::array();
  for (const auto& fp : ds.fixed_points) {
    Json item;
    item["label"] = fp.label;
    item["fiber_weight"] = detail::int_vector_json(fp.fiber_weight);
    Json normals = Json::array();
    for (const auto& w : fp.normal_weights) normals.push_back(detail::int_vector_json(w));
    item["normal_weights"] = normals;
    if (fp.coefficient != Polynomial::constant(1)) item["coefficient"] = detail::poly_json(fp.coefficient);
    fps.push_back(item);
  }
  doc["fixed_points"] = fps;
  if (ds.root_system) doc["root_system"] = root_system_json(*ds.root_system);
  if (!ds.metadata.empty()) doc["metadata"] = ds.metadata;
  return doc.dump(2) + "\n";
}

CharacterDocument load_character_document(std::string_view document) {
  const Json doc = detail::parse_document(document);
  detail::require_keys(doc, "document", {"rank", "entries"}, {"root_system", "metadata"});
  CharacterDocument out;
  out.rank = parse_rank(doc);
  const Json& entries = doc.at("entries");
  if (!entries.is_array()) fail("schema", "entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string loc = "entries[" + std::to_string(i) + "]";
    detail::require_keys(entries[i], loc, {"weight", "mult"}, {});
    const auto weight = detail::parse_int_vector(entries[i].at("weight"), loc + ".weight");
    if (weight.rank() != out.rank) fail("rank_mismatch", loc + ".weight", "length differs from rank");
    const Json& mult = entries[i].at("mult");
    Integer n;
    if (mult.is_number_integer()) {
      n = mult.get<std::int64_t>();
    } else if (mult.is_string()) {
      try {
        n = parse_integer(mult.get<std::string>());
      } catch (const Error& e) {
        fail("schema", loc + ".mult", e.what());
      }
    } else {
      fail("schema", loc + ".mult", "expected an integer");
    }
    out.table.add(weight, n);
  }
  if (doc.contains("root_system")) out.root_system = parse_root_system(doc.at("root_system"), out.rank, "root_system");
  return out;
}

std::string serialize_character_document(const CharacterDocument& doc) {
  Json out;
  out["rank"] = doc.rank;
  Json entries = Json::array();
  for (const auto& [w, n] : doc.table.entries()) {
    entries.push_back(Json{{"weight", detail::int_vector_json(w)}, {"mult", to_string(n)}});
  }
  out["entries"] = entries;
  if (doc.root_system) out["root_system"] = root_system_json(*doc.root_system);
  return out.dump(2) + "\n";
}

}  // namespace qrmult
