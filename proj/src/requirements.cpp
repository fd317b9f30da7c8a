#include "mcdm/requirements.hpp"

namespace mcdm {

CountBucket bucketize_count(int n, BucketThresholds thresholds) {
  if (!(0 < thresholds.small_max && thresholds.small_max < thresholds.medium_max))
    fail(Errc::BadThresholds, "need 0 < small_max < medium_max");
  if (n < 1) fail(Errc::ZeroCount, "alternative count must be positive");
  if (n <= thresholds.small_max) return CountBucket::Small;
  if (n <= thresholds.medium_max) return CountBucket::Medium;
  return CountBucket::Great;
}

MethodRequirements derive_requirements(
    const DecisionSituation& situation, const UsagePreferences& usage,
    BucketThresholds thresholds, std::optional<bool> measure_scale_declared) {
  const DecisionSituation validated = validate_situation(situation);

  MethodRequirements requirements;
  requirements.problem = validated.problem;
  requirements.count_bucket = bucketize_count(
      static_cast<int>(validated.alternatives.size()), thresholds);
  requirements.nature = validated.alternatives_nature;
  if (validated.incompatibility_present)
    requirements.incompatibility = *validated.incompatibility_present;

  std::set<DataType> data_types;
  for (const auto& criterion : validated.criteria)
    data_types.insert(criterion.data_type);
  requirements.data_type_required = std::move(data_types);

  requirements.measure_scale_needed = measure_scale_declared;

  switch (validated.weights_origin) {
    case WeightOrigin::Direct:
      requirements.weighting_type = WeightingType::Simple;
      break;
    case WeightOrigin::PairwiseDerived:
      requirements.weighting_type = WeightingType::Interdependent;
      break;
    case WeightOrigin::Unspecified:
      break;  // not expressed
  }

  requirements.usage = usage;
  return requirements;
}

}  // namespace mcdm
