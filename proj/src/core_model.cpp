#include "mcdm/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace mcdm {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::TooFewAlternatives: return "TooFewAlternatives";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IncompatibleCell: return "IncompatibleCell";
    case Errc::AllZeroWeights: return "AllZeroWeights";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::MissingSortingCategories: return "MissingSortingCategories";
    case Errc::BadCategories: return "BadCategories";
    case Errc::BadScale: return "BadScale";
    case Errc::ZeroCount: return "ZeroCount";
    case Errc::BadThresholds: return "BadThresholds";
    case Errc::TieNotResolvable: return "TieNotResolvable";
    case Errc::StoreUnreadable: return "StoreUnreadable";
    case Errc::StoreUnwritable: return "StoreUnwritable";
    case Errc::UnknownMethod: return "UnknownMethod";
    case Errc::NotReciprocal: return "NotReciprocal";
    case Errc::NotPositive: return "NotPositive";
    case Errc::DimensionTooLarge: return "DimensionTooLarge";
    case Errc::TooManyAlternatives: return "TooManyAlternatives";
    case Errc::InconsistentMatrix: return "InconsistentMatrix";
    case Errc::QualitativeDataUnsupported: return "QualitativeDataUnsupported";
    case Errc::EmptyUtility: return "EmptyUtility";
    case Errc::NegativeSupport: return "NegativeSupport";
    case Errc::UnsupportedProblem: return "UnsupportedProblem";
    case Errc::MissingConfig: return "MissingConfig";
    case Errc::NonMonotoneThresholds: return "NonMonotoneThresholds";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

ScreenVerdict screen_dm_point(const DmPointScreen& screen) {
  ScreenVerdict verdict;
  verdict.is_dm_point = screen.guidance_form == GuidanceForm::Tree;
  verdict.needs_criteria_definition =
      verdict.is_dm_point && !screen.offers_arguments;
  return verdict;
}

TypologyVerdict classify_typology(int criteria_count, int dm_count) {
  if (criteria_count < 1 || dm_count < 1)
    fail(Errc::ZeroCount, "criteria and decision-maker counts must be >= 1");
  TypologyVerdict verdict;
  verdict.criteria_axis =
      criteria_count > 1 ? CriteriaAxis::Multi : CriteriaAxis::Mono;
  verdict.dm_axis = dm_count > 1 ? DmAxis::Multiple : DmAxis::Single;
  // Only the monocriterion single-DM case is a plain optimization task.
  verdict.mc_eligible = !(verdict.criteria_axis == CriteriaAxis::Mono &&
                          verdict.dm_axis == DmAxis::Single);
  return verdict;
}

int resolve_label(const Criterion& criterion, const std::string& label) {
  if (!criterion.scale)
    fail(Errc::BadScale,
         "criterion '" + criterion.name + "' has no scale to resolve '" +
             label + "' against");
  const auto& scale = *criterion.scale;
  auto it = std::find(scale.begin(), scale.end(), label);
  if (it == scale.end())
    fail(Errc::IncompatibleCell, "label '" + label + "' is not in the scale of '" +
                                     criterion.name + "'");
  return static_cast<int>(it - scale.begin());
}

namespace {

void check_criterion(const Criterion& criterion) {
  if (criterion.weight < 0.0)
    fail(Errc::NegativeWeight,
         "criterion '" + criterion.name + "' has negative weight");
  if (criterion.data_type == DataType::Qualitative) {
    if (!criterion.scale)
      fail(Errc::BadScale,
           "qualitative criterion '" + criterion.name + "' needs a scale");
    const auto& scale = *criterion.scale;
    std::set<std::string> distinct(scale.begin(), scale.end());
    if (scale.size() < 2 || distinct.size() != scale.size())
      fail(Errc::BadScale, "scale of '" + criterion.name +
                               "' needs at least 2 distinct labels");
  } else if (criterion.scale) {
    fail(Errc::BadScale, "non-qualitative criterion '" + criterion.name +
                             "' must not carry a scale");
  }
}

void check_cell(const Criterion& criterion, const PerformanceValue& value,
                const std::string& alternative) {
  const std::string where =
      "cell (" + alternative + ", " + criterion.name + ")";
  switch (criterion.data_type) {
    case DataType::Quantitative:
      if (!std::holds_alternative<double>(value))
        fail(Errc::IncompatibleCell, where + " must be numeric");
      if (!std::isfinite(std::get<double>(value)))
        fail(Errc::IncompatibleCell, where + " must be finite");
      break;
    case DataType::Qualitative: {
      if (!std::holds_alternative<std::string>(value))
        fail(Errc::IncompatibleCell, where + " must be a scale label");
      resolve_label(criterion, std::get<std::string>(value));
      break;
    }
    case DataType::Fuzzy: {
      if (!std::holds_alternative<FuzzyNumber>(value))
        fail(Errc::IncompatibleCell, where + " must be a fuzzy triple");
      const auto& t = std::get<FuzzyNumber>(value);
      if (!(t.l <= t.m && t.m <= t.u))
        fail(Errc::IncompatibleCell, where + " violates l <= m <= u");
      break;
    }
  }
}

}  // namespace

DecisionSituation validate_situation(DecisionSituation situation) {
  if (situation.alternatives.size() < 2)
    fail(Errc::TooFewAlternatives,
         "a decision involves at least two alternatives");
  if (situation.decision_maker_count < 1)
    fail(Errc::ZeroCount, "decision_maker_count must be >= 1");
  if (situation.criteria.empty())
    fail(Errc::AllZeroWeights, "situation has no criteria");

  for (const auto& criterion : situation.criteria) check_criterion(criterion);

  if (situation.performance.size() != situation.alternatives.size())
    fail(Errc::DimensionMismatch,
         "performance has " + std::to_string(situation.performance.size()) +
             " rows for " + std::to_string(situation.alternatives.size()) +
             " alternatives");
  for (std::size_t i = 0; i < situation.performance.size(); ++i) {
    const auto& row = situation.performance[i];
    if (row.size() != situation.criteria.size())
      fail(Errc::DimensionMismatch,
           "row '" + situation.alternatives[i] + "' has " +
               std::to_string(row.size()) + " cells for " +
               std::to_string(situation.criteria.size()) + " criteria");
    for (std::size_t j = 0; j < row.size(); ++j)
      check_cell(situation.criteria[j], row[j], situation.alternatives[i]);
  }

  if (situation.problem == ProblemKind::Sorting) {
    if (!situation.sorting_categories)
      fail(Errc::MissingSortingCategories,
           "sorting problems need a category list");
    const auto& categories = *situation.sorting_categories;
    std::set<std::string> distinct(categories.begin(), categories.end());
    if (categories.size() < 2 || distinct.size() != categories.size())
      fail(Errc::BadCategories, "need at least 2 distinct categories");
  } else if (situation.sorting_categories) {
    fail(Errc::BadCategories,
         "sorting_categories only apply to sorting problems");
  }

  double total = 0.0;
  for (const auto& criterion : situation.criteria) total += criterion.weight;
  if (total <= 0.0)
    fail(Errc::AllZeroWeights, "at least one criterion weight must be > 0");
  // Skip renormalization for already-normalized weights so validation is
  // bit-identical on its own output.
  if (std::abs(total - 1.0) > 1e-12)
    for (auto& criterion : situation.criteria) criterion.weight /= total;

  return situation;
}

}  // namespace mcdm
