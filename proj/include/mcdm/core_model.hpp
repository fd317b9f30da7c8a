#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcdm/errors.hpp"

namespace mcdm {

// What a decision is expected to produce: a subset, an order, or an
// assignment to predefined categories.
enum class ProblemKind { Choice, Ranking, Sorting };

enum class Direction { Maximize, Minimize };

enum class DataType { Quantitative, Qualitative, Fuzzy };

enum class SetNature { Discrete, Continuous };

// Triangular fuzzy number (l <= m <= u). Crisp iff l == m == u.
struct FuzzyNumber {
  double l = 0.0;
  double m = 0.0;
  double u = 0.0;

  bool crisp() const { return l == m && m == u; }
  bool operator==(const FuzzyNumber&) const = default;
};

// Centroid defuzzification. Crisp numbers come back bit-exact.
inline double centroid(const FuzzyNumber& t) {
  return t.crisp() ? t.m : (t.l + t.m + t.u) / 3.0;
}

// One cell of the performance table. The variant must agree with the
// owning criterion's data type.
using PerformanceValue = std::variant<double, std::string, FuzzyNumber>;

struct Criterion {
  std::string name;
  Direction direction = Direction::Maximize;
  DataType data_type = DataType::Quantitative;
  // Ordered label list; only qualitative criteria carry one. Rank index
  // (0-based) is the default numeric encoding.
  std::optional<std::vector<std::string>> scale;
  double weight = 1.0;
};

// How the criterion weights arrived. Drives the weighting-type requirement:
// direct values make it Simple, a pairwise matrix makes it Interdependent,
// and defaulted weights leave it unexpressed.
enum class WeightOrigin { Unspecified, Direct, PairwiseDerived };

// The L1 decision situation: <Problem; Alternative; Criterion> plus the
// performance table.
struct DecisionSituation {
  ProblemKind problem = ProblemKind::Choice;
  std::vector<std::string> alternatives;
  SetNature alternatives_nature = SetNature::Discrete;
  std::optional<bool> incompatibility_present;
  std::vector<Criterion> criteria;
  // One row per alternative, one column per criterion.
  std::vector<std::vector<PerformanceValue>> performance;
  int decision_maker_count = 1;
  std::optional<std::vector<std::string>> sorting_categories;
  WeightOrigin weights_origin = WeightOrigin::Direct;
};

enum class GuidanceForm { Linear, Tree };

// Answers to the three DM-point screening questions.
struct DmPointScreen {
  GuidanceForm guidance_form = GuidanceForm::Linear;
  bool offers_arguments = false;
  bool offers_prioritization = false;
};

struct ScreenVerdict {
  bool is_dm_point = false;
  bool needs_criteria_definition = false;
};

enum class CriteriaAxis { Mono, Multi };
enum class DmAxis { Single, Multiple };

struct TypologyVerdict {
  CriteriaAxis criteria_axis = CriteriaAxis::Mono;
  DmAxis dm_axis = DmAxis::Single;
  bool mc_eligible = false;
};

// Tree-form guidance means alternatives exist; absent arguments mean the
// criteria family still has to be defined.
ScreenVerdict screen_dm_point(const DmPointScreen& screen);

// Classifies by criterion count and decision-maker count. Only the
// single-criterion / single-DM case falls outside MC methods.
TypologyVerdict classify_typology(int criteria_count, int dm_count);

// Checks every situation invariant and returns a copy with weights
// normalized to sum to 1 (ratio-preserving). Idempotent: a validated
// situation passes through bit-identically.
DecisionSituation validate_situation(DecisionSituation situation);

// Resolves a qualitative label to its rank index in the criterion scale.
int resolve_label(const Criterion& criterion, const std::string& label);

}  // namespace mcdm
