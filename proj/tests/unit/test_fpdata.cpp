#include <gtest/gtest.h>

#include <filesystem>

#include "brute_force.hpp"
#include "qrmult/error.hpp"
#include "qrmult/fpdata.hpp"

namespace qrmult {
namespace {

using testing::corpus;
using testing::data_path;

std::string error_code_of(const std::string& document) {
  try {
    load_dataset(document);
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

TEST(LoadDataset, ProjectiveLine) {
  const auto ds = load_dataset(R"({
    "rank": 1,
    "fixed_points": [
      {"label": "P0", "fiber_weight": [1], "normal_weights": [[1]]},
      {"label": "P1", "fiber_weight": [0], "normal_weights": [[-1]]}
    ]})");
  EXPECT_EQ(ds.rank, 1u);
  ASSERT_EQ(ds.fixed_points.size(), 2u);
  EXPECT_EQ(ds.fixed_points[1].normal_weights[0], (WeightVector{-1}));
  EXPECT_EQ(ds.fixed_points[0].coefficient, Polynomial::constant(1));
}

TEST(LoadDataset, WeightedProjectivePlane) {
  const auto ds = corpus("cp2_weighted.json");
  ASSERT_EQ(ds.fixed_points.size(), 3u);
  EXPECT_EQ(ds.fixed_points[0].fiber_weight, (WeightVector{1}));
  EXPECT_EQ(ds.fixed_points[0].normal_weights, (std::vector<WeightVector>{WeightVector{2}, WeightVector{1}}));
  EXPECT_EQ(ds.fixed_points[1].fiber_weight, (WeightVector{-1}));
  EXPECT_EQ(ds.fixed_points[1].normal_weights, (std::vector<WeightVector>{WeightVector{-2}, WeightVector{-1}}));
  EXPECT_EQ(ds.fixed_points[2].fiber_weight, (WeightVector{0}));
  EXPECT_EQ(ds.fixed_points[2].normal_weights, (std::vector<WeightVector>{WeightVector{-1}, WeightVector{1}}));
  EXPECT_TRUE(validate(ds).findings.empty());
}

TEST(LoadDataset, ZeroNormalWeightNamesLocation) {
  try {
    load_dataset(R"({"rank": 1, "fixed_points": [{"label": "P", "fiber_weight": [0], "normal_weights": [[0]]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "zero_normal_weight");
    EXPECT_NE(std::string(e.what()).find("fixed_points[0].normal_weights[0]"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("zero normal weight"), std::string::npos);
  }
}

TEST(LoadDataset, RejectsNonIntegerAndFloat) {
  EXPECT_EQ(error_code_of(R"({"rank": 1, "fixed_points": [{"label": "P", "fiber_weight": [0.5], "normal_weights": []}]})"),
            "non_integer_weight");
  EXPECT_EQ(error_code_of(R"({"rank": 1, "fixed_points": [{"label": "P", "fiber_weight": [1.0], "normal_weights": []}]})"),
            "non_integer_weight");
  EXPECT_EQ(error_code_of(R"({"rank": 1, "fixed_points": [{"label": "P", "fiber_weight": ["1"], "normal_weights": []}]})"),
            "non_integer_weight");
  EXPECT_EQ(error_code_of(R"({"rank": 2, "fixed_points": [{"label": "P", "fiber_weight": [1], "normal_weights": []}]})"),
            "rank_mismatch");
}

TEST(LoadDataset, CoefficientPolynomial) {
  const auto ds = load_dataset(
      R"({"rank": 1, "fixed_points": [{"label": "F", "fiber_weight": [0], "normal_weights": [[1]],
          "coefficient": ["1/2", "3", "-2/6"]}]})");
  EXPECT_EQ(ds.fixed_points[0].coefficient, Polynomial({Rational(1, 2), Rational(3), Rational(-1, 3)}));
}

TEST(LoadDataset, CorruptCorpusAllRejected) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_path("corrupt"))) {
    ++seen;
    EXPECT_THROW(load_dataset_file(entry.path().string()), Error) << entry.path();
  }
  EXPECT_GE(seen, 10u);
}

TEST(LoadDataset, ShippedCorpusValidates) {
  for (const char* name : {"cp1.json", "cp2_weighted.json", "cp2_torus.json", "cp3_standard.json", "cp1_su2.json",
                           "cp2_su3.json"}) {
    const auto ds = corpus(name);
    EXPECT_TRUE(validate(ds).ok()) << name;
    EXPECT_EQ(validate(ds).warning_count(), 0u) << name;
  }
}

TEST(Validate, ReportsRankMismatchInMemory) {
  auto ds = corpus("cp2_torus.json");
  ds.fixed_points[1].normal_weights[0] = WeightVector{1};
  const auto report = validate(ds);
  EXPECT_FALSE(report.ok());
  ASSERT_EQ(report.error_count(), 1u);
  EXPECT_EQ(report.findings[0].code, "rank_mismatch");
  EXPECT_EQ(report.findings[0].location, "fixed_points[1].normal_weights[0]");
}

TEST(Validate, DuplicateFixedPointIsAWarning) {
  const auto ds = load_dataset_file(data_path("duplicate_fixed_point.json"));
  const auto report = validate(ds);
  EXPECT_TRUE(report.ok());
  ASSERT_EQ(report.warning_count(), 1u);
  EXPECT_EQ(report.findings[0].code, "duplicate_fiber_weight");
}

TEST(Serialize, RoundTripOnCorpus) {
  for (const char* name : {"cp1.json", "cp2_weighted.json", "cp2_torus.json", "cp3_standard.json", "cp1_su2.json",
                           "cp2_su3.json", "duplicate_fixed_point.json"}) {
    const auto ds = corpus(name);
    const std::string text = serialize_dataset(ds);
    EXPECT_EQ(load_dataset(text), ds) << name;
    EXPECT_EQ(serialize_dataset(load_dataset(text)), text) << name;
  }
}

TEST(Serialize, RoundTripKeepsCoefficients) {
  auto ds = corpus("cp1.json");
  ds.fixed_points[0].coefficient = Polynomial({Rational(2), Rational(-1, 3)});
  EXPECT_EQ(load_dataset(serialize_dataset(ds)), ds);
}

TEST(RootSystemBlock, BuildsWeylGroup) {
  const auto ds = corpus("cp2_su3.json");
  ASSERT_TRUE(ds.root_system);
  EXPECT_EQ(ds.root_system->weyl_elements.size(), 6u);
}

TEST(CharacterDocument, RoundTrip) {
  const auto doc = load_character_document(read_text_file(data_path("a1_v1_tensor_v1.json")));
  EXPECT_EQ(doc.table.at(WeightVector{0}), 2);
  EXPECT_EQ(doc.table.total(), 4);
  ASSERT_TRUE(doc.root_system);
  const auto again = load_character_document(serialize_character_document(doc));
  EXPECT_EQ(again.table, doc.table);
}

}  // namespace
}  // namespace qrmult
