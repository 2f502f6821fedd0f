#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrmult/character.hpp"
#include "qrmult/lattice.hpp"
#include "qrmult/polynomial.hpp"

namespace qrmult {

/// One component of the torus fixed-point set.
///
/// Weights follow the section convention: the character of the holomorphic
/// sections of L^m is Σ_F coefficient_F(m) · t^{m·J_F} / Π_j (1 − t^{−α_F^j}).
/// Normal-weight multiplicity is encoded by repetition.
struct FixedPointDatum {
  std::string label;
  WeightVector fiber_weight;
  std::vector<WeightVector> normal_weights;
  Polynomial coefficient = Polynomial::constant(1);

  bool operator==(const FixedPointDatum& other) const = default;
};

struct LocalizationDataset {
  std::size_t rank = 0;
  std::vector<FixedPointDatum> fixed_points;
  std::optional<RootSystem> root_system;
  std::map<std::string, std::string> metadata;

  bool operator==(const LocalizationDataset& other) const;
};

struct Finding {
  enum class Severity { error, warning };
  Severity severity;
  std::string location;  // e.g. "fixed_points[1].normal_weights[0]"
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool ok() const;
  std::size_t error_count() const;
  std::size_t warning_count() const;
};

ValidationReport validate(const LocalizationDataset& ds);

/// Parses and validates a dataset document. Throws Error with code
/// "parse", "schema", "non_integer_weight", "zero_normal_weight",
/// "rank_mismatch" or "bad_root_system"; messages start with the location.
LocalizationDataset load_dataset(std::string_view document);
LocalizationDataset load_dataset_file(const std::string& path);

/// Inverse of load_dataset (pretty-printed, deterministic key order).
std::string serialize_dataset(const LocalizationDataset& ds);

/// A character table on its own, optionally with a root system:
/// { "rank": p, "entries": [ {"weight": [..], "mult": n}, ... ], "root_system": {...} }
struct CharacterDocument {
  std::size_t rank = 0;
  CharacterTable table;
  std::optional<RootSystem> root_system;
};

CharacterDocument load_character_document(std::string_view document);
std::string serialize_character_document(const CharacterDocument& doc);

std::string read_text_file(const std::string& path);

}  // namespace qrmult
