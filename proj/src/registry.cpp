#include "mcdm/registry.hpp"

#include <algorithm>

namespace mcdm {

Registry::Registry(std::vector<MethodInterface> entries)
    : entries_(std::move(entries)) {
  for (const auto& entry : entries_)
    if (entry.problems.empty())
      fail(Errc::ParseError,
           "interface '" + entry.method_id + "' supports no problem kind");
}

const MethodInterface* Registry::find(const std::string& method_id) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const MethodInterface& entry) {
                           return entry.method_id == method_id;
                         });
  return it == entries_.end() ? nullptr : &*it;
}

const MethodInterface& Registry::lookup(const std::string& method_id) const {
  if (const MethodInterface* entry = find(method_id)) return *entry;
  fail(Errc::UnknownMethod, "no method '" + method_id + "' in the registry");
}

void Registry::append(MethodInterface entry) {
  if (entry.problems.empty())
    fail(Errc::ParseError,
         "interface '" + entry.method_id + "' supports no problem kind");
  entries_.push_back(std::move(entry));
}

namespace {

const std::set<CountBucket> kAllBuckets = {CountBucket::Small,
                                           CountBucket::Medium,
                                           CountBucket::Great};

MethodInterface maut_interface() {
  MethodInterface m;
  m.method_id = "maut";
  m.problems = {ProblemKind::Choice, ProblemKind::Ranking};
  m.count_buckets = SetCapability<CountBucket>::of(kAllBuckets);
  m.natures = SetCapability<SetNature>::of({SetNature::Discrete});
  m.incompatibility_support = BoolCapability::of(true);
  m.data_types = SetCapability<DataType>::of(
      {DataType::Quantitative, DataType::Qualitative});
  m.measure_scale_support = BoolCapability::of(true);
  m.weighting_types =
      SetCapability<WeightingType>::of({WeightingType::Simple});
  m.tool_available = BoolCapability::of(false);
  m.notation = ValueCapability<Notation>::of(Notation::UtilityFunction);
  m.easiness = EasinessLevel::Difficult;
  m.skill_demand = SkillLevel::Strong;
  return m;
}

MethodInterface ahp_interface() {
  MethodInterface m;
  m.method_id = "ahp";
  m.problems = {ProblemKind::Choice, ProblemKind::Ranking};
  m.count_buckets = SetCapability<CountBucket>::of({CountBucket::Small});
  m.natures = SetCapability<SetNature>::of({SetNature::Discrete});
  m.incompatibility_support = BoolCapability::of(false);
  m.data_types = SetCapability<DataType>::of(
      {DataType::Quantitative, DataType::Qualitative});
  m.measure_scale_support = BoolCapability::of(false);
  m.weighting_types =
      SetCapability<WeightingType>::of({WeightingType::Interdependent});
  m.tool_available = BoolCapability::of(true);
  m.notation = ValueCapability<Notation>::of(Notation::WeightedSum);
  m.easiness = EasinessLevel::Easy;
  m.skill_demand = SkillLevel::Medium;
  return m;
}

MethodInterface outranking_interface() {
  MethodInterface m;
  m.method_id = "outranking";
  m.problems = {ProblemKind::Choice, ProblemKind::Ranking,
                ProblemKind::Sorting};
  m.count_buckets = SetCapability<CountBucket>::of(kAllBuckets);
  m.natures = SetCapability<SetNature>::of({SetNature::Discrete});
  m.incompatibility_support = BoolCapability::of(true);
  m.data_types = SetCapability<DataType>::of(
      {DataType::Quantitative, DataType::Qualitative});
  m.measure_scale_support = BoolCapability::of(true);
  m.weighting_types =
      SetCapability<WeightingType>::of({WeightingType::Interdependent});
  m.tool_available = BoolCapability::of(true);
  m.notation = ValueCapability<Notation>::of(Notation::Textual);
  m.easiness = EasinessLevel::Medium;
  m.skill_demand = SkillLevel::Strong;
  return m;
}

MethodInterface weighting_interface() {
  MethodInterface m;
  m.method_id = "weighting";
  m.problems = {ProblemKind::Choice, ProblemKind::Ranking};
  m.count_buckets = SetCapability<CountBucket>::of(kAllBuckets);
  m.natures = SetCapability<SetNature>::of({SetNature::Discrete});
  m.incompatibility_support = BoolCapability::of(false);
  m.data_types = SetCapability<DataType>::of({DataType::Quantitative});
  m.measure_scale_support = BoolCapability::of(false);
  m.weighting_types =
      SetCapability<WeightingType>::of({WeightingType::Simple});
  m.tool_available = BoolCapability::of(true);
  m.notation = ValueCapability<Notation>::of(Notation::WeightedSum);
  m.easiness = EasinessLevel::Easy;
  m.skill_demand = SkillLevel::Weak;
  return m;
}

}  // namespace

MethodInterface Registry::builtin_fuzzy() {
  // Fuzzy methods differ according to the basic method they extend, so
  // every capability cell is a wildcard; only the usage burden is fixed.
  MethodInterface m;
  m.method_id = "fuzzy";
  m.problems = {ProblemKind::Choice, ProblemKind::Ranking,
                ProblemKind::Sorting};
  m.count_buckets = SetCapability<CountBucket>::wildcard();
  m.natures = SetCapability<SetNature>::wildcard();
  m.incompatibility_support = BoolCapability::wildcard();
  m.data_types = SetCapability<DataType>::wildcard();
  m.measure_scale_support = BoolCapability::wildcard();
  m.weighting_types = SetCapability<WeightingType>::wildcard();
  m.tool_available = BoolCapability::wildcard();
  m.notation = ValueCapability<Notation>::wildcard();
  m.easiness = EasinessLevel::Difficult;
  m.skill_demand = SkillLevel::Strong;
  return m;
}

Registry Registry::builtin_crisp() {
  return Registry({maut_interface(), ahp_interface(), outranking_interface(),
                   weighting_interface()});
}

Registry Registry::builtin() {
  Registry registry = builtin_crisp();
  registry.append(builtin_fuzzy());
  return registry;
}

std::string_view attribute_name(ReqAttribute attribute) {
  switch (attribute) {
    case ReqAttribute::Problem: return "problem";
    case ReqAttribute::Count: return "count";
    case ReqAttribute::Nature: return "nature";
    case ReqAttribute::Incompatibility: return "incompatibility";
    case ReqAttribute::DataType: return "data_type";
    case ReqAttribute::Scale: return "scale";
    case ReqAttribute::Weighting: return "weighting";
    case ReqAttribute::Tool: return "tool";
    case ReqAttribute::Easiness: return "easiness";
    case ReqAttribute::Skills: return "skills";
  }
  return "?";
}

std::optional<ReqAttribute> attribute_from_name(std::string_view name) {
  for (ReqAttribute attribute : kAllReqAttributes)
    if (attribute_name(attribute) == name) return attribute;
  return std::nullopt;
}

namespace {

bool is_expressed(const MethodRequirements& r, ReqAttribute attribute) {
  switch (attribute) {
    case ReqAttribute::Problem: return r.problem.has_value();
    case ReqAttribute::Count: return r.count_bucket.has_value();
    case ReqAttribute::Nature: return r.nature.has_value();
    case ReqAttribute::Incompatibility: return r.incompatibility.has_value();
    case ReqAttribute::DataType: return r.data_type_required.has_value();
    case ReqAttribute::Scale: return r.measure_scale_needed.has_value();
    case ReqAttribute::Weighting: return r.weighting_type.has_value();
    case ReqAttribute::Tool: return r.usage.tool_required.has_value();
    case ReqAttribute::Easiness:
      return r.usage.easiness_required.has_value();
    case ReqAttribute::Skills: return r.usage.skills_available.has_value();
  }
  return false;
}

}  // namespace

bool attribute_satisfied(const MethodInterface& m,
                         const MethodRequirements& r, ReqAttribute attribute) {
  switch (attribute) {
    case ReqAttribute::Problem:
      return m.problems.count(*r.problem) > 0;
    case ReqAttribute::Count:
      return m.count_buckets.contains(*r.count_bucket);
    case ReqAttribute::Nature:
      return m.natures.contains(*r.nature);
    case ReqAttribute::Incompatibility:
      // Only a required incompatibility filters.
      return !*r.incompatibility || m.incompatibility_support.any ||
             m.incompatibility_support.value;
    case ReqAttribute::DataType: {
      if (m.data_types.any) return true;
      for (DataType dt : *r.data_type_required)
        if (!m.data_types.contains(dt)) return false;
      return true;
    }
    case ReqAttribute::Scale:
      return !*r.measure_scale_needed || m.measure_scale_support.any ||
             m.measure_scale_support.value;
    case ReqAttribute::Weighting:
      // A simple-weighting requirement is satisfied by any weighting-capable
      // method; interdependent weighting only by interdependent-capable ones.
      if (m.weighting_types.any) return true;
      if (*r.weighting_type == WeightingType::Simple)
        return !m.weighting_types.values.empty();
      return m.weighting_types.contains(WeightingType::Interdependent);
    case ReqAttribute::Tool:
      return !*r.usage.tool_required || m.tool_available.any ||
             m.tool_available.value;
    case ReqAttribute::Easiness:
      // The method must be at least as easy as required.
      return static_cast<int>(m.easiness) <=
             static_cast<int>(*r.usage.easiness_required);
    case ReqAttribute::Skills:
      // The method must demand no more skill than is available.
      return static_cast<int>(m.skill_demand) <=
             static_cast<int>(*r.usage.skills_available);
  }
  return false;
}

SelectionReport match_methods(const MethodRequirements& requirements,
                              const Registry& registry) {
  if (registry.empty())
    fail(Errc::UnknownMethod, "cannot match against an empty registry");

  SelectionReport report;
  report.registry_snapshot = registry.entries();
  for (const auto& entry : registry.entries())
    report.method_ids.push_back(entry.method_id);
  report.notation_note = requirements.usage.notation_preference;

  for (ReqAttribute attribute : kAllReqAttributes) {
    if (!is_expressed(requirements, attribute)) continue;
    std::vector<int> cells;
    cells.reserve(registry.size());
    for (const auto& entry : registry.entries())
      cells.push_back(attribute_satisfied(entry, requirements, attribute) ? 1
                                                                          : 0);
    report.matrix.emplace_back(attribute, std::move(cells));
  }

  for (std::size_t i = 0; i < report.method_ids.size(); ++i) {
    bool all_ones = true;
    for (const auto& [attribute, cells] : report.matrix)
      if (cells[i] == 0) {
        all_ones = false;
        break;
      }
    if (all_ones) report.candidates.push_back(report.method_ids[i]);
  }
  report.strategy_used = Strategy::Search;
  return report;
}

namespace {

// Cell value for a weighted attribute. Expressed attributes reuse the
// matrix row; the boolean capability attributes can also be weighted while
// unexpressed (the risks-style refinement), scored by plain capability.
std::optional<int> weighted_cell(const SelectionReport& report,
                                 std::size_t method_index,
                                 ReqAttribute attribute) {
  for (const auto& [row_attribute, cells] : report.matrix)
    if (row_attribute == attribute)
      return cells[method_index];
  const MethodInterface& m = report.registry_snapshot[method_index];
  switch (attribute) {
    case ReqAttribute::Tool:
      return m.tool_available.any || m.tool_available.value ? 1 : 0;
    case ReqAttribute::Incompatibility:
      return m.incompatibility_support.any || m.incompatibility_support.value
                 ? 1
                 : 0;
    case ReqAttribute::Scale:
      return m.measure_scale_support.any || m.measure_scale_support.value ? 1
                                                                          : 0;
    default:
      return std::nullopt;  // no reference value without a requirement
  }
}

}  // namespace

std::string select_by_weighting(
    SelectionReport& report, const std::map<ReqAttribute, double>& weights) {
  if (report.candidates.empty())
    fail(Errc::TieNotResolvable,
         "weighting needs at least one candidate method");
  for (const auto& [attribute, weight] : weights)
    if (weight < 0.0)
      fail(Errc::NegativeWeight, "L2 weights must be nonnegative");

  std::vector<ReqAttribute> scored;
  for (const auto& [attribute, cells] : report.matrix) scored.push_back(attribute);
  for (const auto& [attribute, weight] : weights)
    if (std::find(scored.begin(), scored.end(), attribute) == scored.end())
      scored.push_back(attribute);

  const std::size_t method_count = report.method_ids.size();
  std::vector<double> score(method_count, 0.0);
  // Cell vectors over the positively weighted attributes, for the
  // identical-interface tie check.
  std::vector<std::vector<int>> weighted_vector(method_count);
  for (std::size_t i = 0; i < method_count; ++i) {
    for (ReqAttribute attribute : scored) {
      auto weight_it = weights.find(attribute);
      const double weight =
          weight_it == weights.end() ? 0.0 : weight_it->second;
      std::optional<int> cell = weighted_cell(report, i, attribute);
      if (!cell) continue;
      score[i] += weight * *cell;
      if (weight > 0.0) weighted_vector[i].push_back(*cell);
    }
    report.scores[report.method_ids[i]] = score[i];
  }

  // Argmax over the candidate set; scores for every method stay reported.
  std::vector<std::size_t> candidate_indices;
  for (const auto& candidate : report.candidates)
    for (std::size_t i = 0; i < method_count; ++i)
      if (report.method_ids[i] == candidate) candidate_indices.push_back(i);

  double best = score[candidate_indices.front()];
  for (std::size_t i : candidate_indices) best = std::max(best, score[i]);
  std::vector<std::size_t> top;
  for (std::size_t i : candidate_indices)
    if (score[i] == best) top.push_back(i);

  if (top.size() > 1) {
    bool all_identical = true;
    for (std::size_t i : top)
      if (weighted_vector[i] != weighted_vector[top.front()]) {
        all_identical = false;
        break;
      }
    if (all_identical)
      fail(Errc::TieNotResolvable,
           "top candidates expose identical interfaces for the weighted "
           "requirements");
    report.tiebreak_note =
        "equal weighted sums; broke the tie by registry declaration order";
  }

  report.strategy_used = Strategy::Weighted;
  report.chosen = report.method_ids[top.front()];
  return *report.chosen;
}

}  // namespace mcdm
