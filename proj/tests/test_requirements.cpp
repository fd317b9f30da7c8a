#include <doctest.h>

#include "mcdm/requirements.hpp"
#include "test_support.hpp"

using namespace mcdm;

TEST_CASE("bucketize_count follows the default thresholds") {
  CHECK(bucketize_count(5) == CountBucket::Small);
  CHECK(bucketize_count(7) == CountBucket::Small);
  CHECK(bucketize_count(10) == CountBucket::Medium);
  CHECK(bucketize_count(20) == CountBucket::Medium);
  CHECK(bucketize_count(25) == CountBucket::Great);

  CHECK(bucketize_count(10, {10, 20}) == CountBucket::Small);
  CHECK_THROWS_AS(bucketize_count(5, {0, 20}), Error);
  CHECK_THROWS_AS(bucketize_count(5, {20, 20}), Error);
}

TEST_CASE("bucket is monotone in the alternative count") {
  CountBucket previous = CountBucket::Small;
  for (int n = 2; n <= 60; ++n) {
    const CountBucket bucket = bucketize_count(n);
    CHECK(static_cast<int>(bucket) >= static_cast<int>(previous));
    previous = bucket;
  }
}

namespace {

DecisionSituation mixed_situation(int alternatives) {
  DecisionSituation s;
  s.problem = ProblemKind::Ranking;
  for (int i = 0; i < alternatives; ++i)
    s.alternatives.push_back("alt-" + std::to_string(i));
  Criterion quant = testing::quant("cost", Direction::Minimize);
  Criterion qual;
  qual.name = "grade";
  qual.data_type = DataType::Qualitative;
  qual.scale = std::vector<std::string>{"bad", "ok", "good"};
  s.criteria = {quant, qual};
  for (int i = 0; i < alternatives; ++i)
    s.performance.push_back(
        {static_cast<double>(i), std::string(i % 2 == 0 ? "bad" : "good")});
  return s;
}

}  // namespace

TEST_CASE("derivation copies the situation facts") {
  DecisionSituation s = mixed_situation(25);
  s.weights_origin = WeightOrigin::Unspecified;
  const MethodRequirements r = derive_requirements(s);

  CHECK(r.problem == ProblemKind::Ranking);
  CHECK(r.count_bucket == CountBucket::Great);
  CHECK(r.nature == SetNature::Discrete);
  CHECK_FALSE(r.incompatibility.has_value());
  CHECK(r.data_type_required ==
        std::set<DataType>{DataType::Quantitative, DataType::Qualitative});
  // Measure scale is never inferred; weighting stays unexpressed for
  // undeclared weights.
  CHECK_FALSE(r.measure_scale_needed.has_value());
  CHECK_FALSE(r.weighting_type.has_value());
  CHECK_FALSE(r.usage.tool_required.has_value());
}

TEST_CASE("derivation maps weight origins to weighting types") {
  DecisionSituation s = mixed_situation(10);
  s.weights_origin = WeightOrigin::Direct;
  CHECK(derive_requirements(s).weighting_type == WeightingType::Simple);

  s.weights_origin = WeightOrigin::PairwiseDerived;
  CHECK(derive_requirements(s).weighting_type ==
        WeightingType::Interdependent);
}

TEST_CASE("derivation passes usage through and honors declarations") {
  UsagePreferences usage;
  usage.tool_required = true;
  usage.easiness_required = EasinessLevel::Easy;
  usage.skills_available = SkillLevel::Weak;
  usage.notation_preference = Notation::WeightedSum;

  DecisionSituation s = mixed_situation(10);
  const MethodRequirements r = derive_requirements(s, usage, {}, true);
  CHECK(r.usage.tool_required == true);
  CHECK(r.usage.easiness_required == EasinessLevel::Easy);
  CHECK(r.usage.skills_available == SkillLevel::Weak);
  CHECK(r.usage.notation_preference == Notation::WeightedSum);
  CHECK(r.measure_scale_needed == true);
}

TEST_CASE("derivation is deterministic") {
  DecisionSituation s = mixed_situation(12);
  const MethodRequirements a = derive_requirements(s);
  const MethodRequirements b = derive_requirements(s);
  CHECK(a.problem == b.problem);
  CHECK(a.count_bucket == b.count_bucket);
  CHECK(a.data_type_required == b.data_type_required);
}

TEST_CASE("single-data-type situations derive singleton type sets") {
  const DecisionSituation s = testing::table_situation(
      {{1.0, 2.0}, {3.0, 4.0}}, {Direction::Maximize, Direction::Minimize},
      {0.5, 0.5});
  const MethodRequirements r = derive_requirements(s);
  CHECK(r.data_type_required->size() == 1);
  CHECK(r.data_type_required->count(DataType::Quantitative) == 1);
}

TEST_CASE("derivation propagates validation failures") {
  DecisionSituation s = mixed_situation(25);
  s.performance.pop_back();
  CHECK_THROWS_AS(derive_requirements(s), Error);
}
