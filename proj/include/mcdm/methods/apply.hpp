#pragma once

#include <map>
#include <optional>

#include "mcdm/methods/ahp.hpp"
#include "mcdm/methods/fuzzy.hpp"
#include "mcdm/methods/maut.hpp"
#include "mcdm/methods/promethee.hpp"
#include "mcdm/methods/saw.hpp"
#include "mcdm/registry.hpp"

namespace mcdm {

// Method-specific inputs, normally parsed from the run file's config
// sub-document. Only the pieces the chosen family needs must be present.
struct MethodConfig {
  int choice_k = 1;  // choice problems take the top k of the ranking
  bool qualitative_rank_encode = false;

  // outranking; criteria without an entry default to the Usual shape
  std::map<std::string, PreferenceFunction> preference_functions;
  std::vector<double> sorting_thresholds;

  // ahp
  std::optional<PairwiseMatrix> criteria_matrix;
  std::map<std::string, PairwiseMatrix> alternative_matrices;
  AhpOptions ahp;

  // maut
  std::map<std::string, UtilityFunction> utilities;
  MautForm maut_form = MautForm::Additive;

  // fuzzy
  FuzzyOptions fuzzy;
  std::map<std::string, FuzzyNumber> fuzzy_weights;
};

// Dispatches to the family implementation and shapes the result for the
// situation's problem kind. Sorting is served by the outranking family
// only.
DecisionResult apply_method(const DecisionSituation& situation,
                            const std::string& method_id,
                            const MethodConfig& config,
                            const Registry& registry);

// Pipeline step to revisit when a result fails validation.
enum class PipelineStep { RequirementIdentification, MethodApplication };

struct ValidationVerdict {
  bool ok = false;
  std::optional<PipelineStep> flashback;
};

// A result is valid when its variant matches the problem kind, rankings and
// sortings cover every alternative, and a choice is a nonempty strict
// subset. Failures are flashback verdicts, not faults.
ValidationVerdict validate_result(const DecisionResult& result,
                                  const DecisionSituation& situation,
                                  const MethodRequirements& requirements);

}  // namespace mcdm
