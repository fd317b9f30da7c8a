#include "mcdm/methods/maut.hpp"

#include <cmath>

#include "mcdm/methods/saw.hpp"

namespace mcdm {

namespace {
// Multiplicative aggregation floors utilities so a single zero does not
// annihilate the product.
constexpr double kUtilityFloor = 1e-12;
}  // namespace

UtilityFunction UtilityFunction::from_breakpoints(
    std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.size() < 2)
    fail(Errc::EmptyUtility, "a utility needs at least two breakpoints");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (i > 0 && !(breakpoints[i].first > breakpoints[i - 1].first))
      fail(Errc::EmptyUtility, "breakpoint abscissae must strictly increase");
    const double u = breakpoints[i].second;
    if (u < 0.0 || u > 1.0)
      fail(Errc::EmptyUtility, "utility values live in [0, 1]");
  }
  const double first = breakpoints.front().second;
  const double last = breakpoints.back().second;
  if (!((first == 0.0 && last == 1.0) || (first == 1.0 && last == 0.0)))
    fail(Errc::EmptyUtility,
         "utility endpoints must span [0, 1] (0 to 1 or 1 to 0)");
  return UtilityFunction(std::move(breakpoints));
}

UtilityFunction UtilityFunction::linear_span(double lo, double hi,
                                             Direction direction) {
  if (!(lo < hi)) fail(Errc::EmptyUtility, "linear span needs lo < hi");
  if (direction == Direction::Maximize)
    return from_breakpoints({{lo, 0.0}, {hi, 1.0}});
  return from_breakpoints({{lo, 1.0}, {hi, 0.0}});
}

double UtilityFunction::evaluate(double x, bool* clamped) const {
  if (clamped) *clamped = false;
  if (x <= breakpoints_.front().first) {
    if (clamped && x < breakpoints_.front().first) *clamped = true;
    return breakpoints_.front().second;
  }
  if (x >= breakpoints_.back().first) {
    if (clamped && x > breakpoints_.back().first) *clamped = true;
    return breakpoints_.back().second;
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    const auto& [x1, u1] = breakpoints_[i];
    if (x > x1) continue;
    const auto& [x0, u0] = breakpoints_[i - 1];
    if (x == x1) return u1;  // exact at a breakpoint
    return u0 + (u1 - u0) * (x - x0) / (x1 - x0);
  }
  return breakpoints_.back().second;
}

Ranking maut_rank(const DecisionSituation& situation,
                  const std::vector<UtilityFunction>& utilities,
                  std::span<const double> weights, MautForm form) {
  const int n = static_cast<int>(situation.alternatives.size());
  const int m = static_cast<int>(situation.criteria.size());
  if (static_cast<int>(utilities.size()) != m)
    fail(Errc::EmptyUtility, "one utility function per criterion expected");
  if (static_cast<int>(weights.size()) != m)
    fail(Errc::DimensionMismatch, "one weight per criterion expected");

  std::vector<std::string> warnings;
  std::vector<double> scores(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double log_score = 0.0;
    for (int j = 0; j < m; ++j) {
      const double x = numeric_cell(situation, i, j, /*allow_qualitative=*/true);
      bool clamped = false;
      const double u = utilities[j].evaluate(x, &clamped);
      if (clamped)
        warnings.push_back("value of '" + situation.criteria[j].name +
                           "' for '" + situation.alternatives[i] +
                           "' lies outside the utility span; clamped");
      if (form == MautForm::Additive)
        scores[i] += weights[j] * u;
      else
        // Weighted geometric aggregation, accumulated in log space.
        log_score += weights[j] * std::log(std::max(u, kUtilityFloor));
    }
    if (form == MautForm::Multiplicative) scores[i] = std::exp(log_score);
  }

  Ranking ranking = make_ranking(situation.alternatives, std::move(scores));
  ranking.warnings = std::move(warnings);
  return ranking;
}

Ranking maut_rank(const DecisionSituation& situation,
                  const std::vector<UtilityFunction>& utilities,
                  MautForm form) {
  std::vector<double> weights;
  weights.reserve(situation.criteria.size());
  for (const auto& criterion : situation.criteria)
    weights.push_back(criterion.weight);
  return maut_rank(situation, utilities, weights, form);
}

}  // namespace mcdm
