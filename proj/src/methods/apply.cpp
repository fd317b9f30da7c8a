#include "mcdm/methods/apply.hpp"

#include <algorithm>
#include <set>

namespace mcdm {

namespace {

std::vector<double> situation_weights(const DecisionSituation& situation) {
  std::vector<double> weights;
  weights.reserve(situation.criteria.size());
  for (const auto& criterion : situation.criteria)
    weights.push_back(criterion.weight);
  return weights;
}

Ranking run_family(const DecisionSituation& situation,
                   const std::string& method_id, const MethodConfig& config) {
  if (method_id == "weighting") {
    SawOptions options;
    options.qualitative_rank_encode = config.qualitative_rank_encode;
    return saw_rank(situation, options);
  }
  if (method_id == "ahp") {
    if (!config.criteria_matrix)
      fail(Errc::MissingConfig, "ahp needs a criteria pairwise matrix");
    std::vector<PairwiseMatrix> per_criterion;
    for (const auto& criterion : situation.criteria) {
      auto it = config.alternative_matrices.find(criterion.name);
      if (it == config.alternative_matrices.end())
        fail(Errc::MissingConfig,
             "ahp needs an alternative matrix for criterion '" +
                 criterion.name + "'");
      per_criterion.push_back(it->second);
    }
    return ahp_rank(*config.criteria_matrix, per_criterion,
                    situation.alternatives, config.ahp);
  }
  if (method_id == "outranking") {
    std::vector<PreferenceFunction> preferences;
    for (const auto& criterion : situation.criteria) {
      auto it = config.preference_functions.find(criterion.name);
      preferences.push_back(it == config.preference_functions.end()
                                ? PreferenceFunction::usual()
                                : it->second);
    }
    const Flows flows = promethee_flows(situation, preferences);
    return promethee2_rank(flows);
  }
  if (method_id == "maut") {
    if (config.utilities.empty())
      fail(Errc::MissingConfig, "maut needs per-criterion utility functions");
    std::vector<UtilityFunction> utilities;
    for (const auto& criterion : situation.criteria) {
      auto it = config.utilities.find(criterion.name);
      if (it == config.utilities.end())
        fail(Errc::MissingConfig,
             "maut needs a utility for criterion '" + criterion.name + "'");
      utilities.push_back(it->second);
    }
    return maut_rank(situation, utilities, config.maut_form);
  }
  if (method_id == "fuzzy") {
    std::vector<FuzzyWeight> weights;
    for (const auto& criterion : situation.criteria) {
      auto it = config.fuzzy_weights.find(criterion.name);
      if (it == config.fuzzy_weights.end())
        weights.emplace_back(criterion.weight);
      else
        weights.emplace_back(it->second);
    }
    return fuzzy_saw_rank(situation, weights, config.fuzzy);
  }
  fail(Errc::UnknownMethod, "no executable family '" + method_id + "'");
}

}  // namespace

DecisionResult apply_method(const DecisionSituation& situation,
                            const std::string& method_id,
                            const MethodConfig& config,
                            const Registry& registry) {
  const MethodInterface& interface = registry.lookup(method_id);
  if (interface.problems.count(situation.problem) == 0)
    fail(Errc::UnsupportedProblem,
         "'" + method_id + "' does not support this problem kind");

  if (situation.problem == ProblemKind::Sorting) {
    // Sorting is served by the outranking family's flow thresholds.
    if (method_id != "outranking")
      fail(Errc::UnsupportedProblem,
           "sorting is executed via the outranking family only");
    if (config.sorting_thresholds.empty())
      fail(Errc::MissingConfig, "sorting needs net-flow thresholds");
    std::vector<PreferenceFunction> preferences;
    for (const auto& criterion : situation.criteria) {
      auto it = config.preference_functions.find(criterion.name);
      preferences.push_back(it == config.preference_functions.end()
                                ? PreferenceFunction::usual()
                                : it->second);
    }
    const Flows flows = promethee_flows(situation, preferences);
    return {flow_sort(flows, config.sorting_thresholds,
                      *situation.sorting_categories)};
  }

  Ranking ranking = run_family(situation, method_id, config);
  if (situation.problem == ProblemKind::Ranking)
    return {std::move(ranking)};

  // Choice: the top k of the total order.
  if (config.choice_k < 1)
    fail(Errc::MissingConfig, "choice cutoff k must be >= 1");
  ChoiceSubset subset;
  const int k = std::min<int>(config.choice_k,
                              static_cast<int>(ranking.order.size()));
  for (int i = 0; i < k; ++i)
    subset.alternatives.push_back(ranking.alternatives[ranking.order[i]]);
  return {std::move(subset)};
}

ValidationVerdict validate_result(const DecisionResult& result,
                                  const DecisionSituation& situation,
                                  const MethodRequirements& requirements) {
  (void)requirements;  // shape rules depend on the situation alone
  if (result.kind() != situation.problem)
    return {false, PipelineStep::MethodApplication};

  const std::set<std::string> all(situation.alternatives.begin(),
                                  situation.alternatives.end());

  if (const auto* choice = std::get_if<ChoiceSubset>(&result.value)) {
    // A choice must discriminate: nonempty and strictly smaller than the
    // alternative set.
    if (choice->alternatives.empty() ||
        choice->alternatives.size() >= all.size())
      return {false, PipelineStep::MethodApplication};
    for (const auto& alternative : choice->alternatives)
      if (all.count(alternative) == 0)
        return {false, PipelineStep::MethodApplication};
    return {true, std::nullopt};
  }

  if (const auto* ranking = std::get_if<Ranking>(&result.value)) {
    std::set<std::string> covered(ranking->alternatives.begin(),
                                  ranking->alternatives.end());
    if (covered != all)
      return {false, PipelineStep::RequirementIdentification};
    return {true, std::nullopt};
  }

  const auto& sorting = std::get<SortingAssignment>(result.value);
  std::set<std::string> covered;
  for (const auto& [alternative, category] : sorting.assignment) {
    covered.insert(alternative);
    if (!situation.sorting_categories ||
        std::find(situation.sorting_categories->begin(),
                  situation.sorting_categories->end(),
                  category) == situation.sorting_categories->end())
      return {false, PipelineStep::MethodApplication};
  }
  if (covered != all)
    return {false, PipelineStep::RequirementIdentification};
  return {true, std::nullopt};
}

}  // namespace mcdm
