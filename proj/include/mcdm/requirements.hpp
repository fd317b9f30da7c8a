#pragma once

#include <optional>
#include <set>

#include "mcdm/core_model.hpp"

namespace mcdm {

enum class CountBucket { Small, Medium, Great };

enum class Notation { UtilityFunction, WeightedSum, Textual };
enum class EasinessLevel { Easy, Medium, Difficult };
enum class SkillLevel { Weak, Medium, Strong };
enum class WeightingType { Simple, Interdependent };

struct BucketThresholds {
  int small_max = 7;
  int medium_max = 20;
};

// Operator-supplied usage preferences; every field may stay unexpressed.
struct UsagePreferences {
  std::optional<bool> tool_required;
  std::optional<Notation> notation_preference;
  std::optional<EasinessLevel> easiness_required;
  std::optional<SkillLevel> skills_available;
};

// The L2 requirement document. Unexpressed attributes impose no constraint
// during matching.
struct MethodRequirements {
  std::optional<ProblemKind> problem;
  std::optional<CountBucket> count_bucket;
  std::optional<SetNature> nature;
  std::optional<bool> incompatibility;
  std::optional<std::set<DataType>> data_type_required;
  std::optional<bool> measure_scale_needed;
  std::optional<WeightingType> weighting_type;
  UsagePreferences usage;
};

// Small iff n <= small_max, Medium iff n <= medium_max, Great otherwise.
CountBucket bucketize_count(int n, BucketThresholds thresholds = {});

// Derives the requirement document from a situation by problem
// investigation. The situation is (re)validated first; validation errors
// propagate. measure_scale_declared is an explicit operator declaration;
// it is never inferred from the criteria (the selection matrices in use
// leave it unexpressed unless stated).
MethodRequirements derive_requirements(
    const DecisionSituation& situation, const UsagePreferences& usage = {},
    BucketThresholds thresholds = {},
    std::optional<bool> measure_scale_declared = std::nullopt);

}  // namespace mcdm
