#include "mcdm/methods/saw.hpp"

#include <algorithm>
#include <cmath>

namespace mcdm {

Ranking make_ranking(std::vector<std::string> alternatives,
                     std::vector<double> scores) {
  Ranking ranking;
  ranking.alternatives = std::move(alternatives);
  ranking.scores = std::move(scores);
  const int n = static_cast<int>(ranking.alternatives.size());
  ranking.order.resize(n);
  for (int i = 0; i < n; ++i) ranking.order[i] = i;
  std::stable_sort(ranking.order.begin(), ranking.order.end(),
                   [&](int a, int b) {
                     return ranking.scores[a] > ranking.scores[b];
                   });
  for (int i = 0; i < n; ++i) {
    if (i == 0 || ranking.scores[ranking.order[i]] !=
                      ranking.scores[ranking.order[i - 1]])
      ranking.tie_groups.emplace_back();
    ranking.tie_groups.back().push_back(ranking.order[i]);
  }
  return ranking;
}

NormalizedColumn minmax_normalize(std::span<const double> column,
                                  Direction direction) {
  NormalizedColumn out;
  if (column.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
  const double lo = *lo_it, hi = *hi_it;
  out.values.reserve(column.size());
  if (lo == hi) {
    // A constant column carries no information; flag it instead of failing.
    out.degenerate = true;
    out.values.assign(column.size(), 0.5);
    return out;
  }
  const double span = hi - lo;
  for (double v : column)
    out.values.push_back(direction == Direction::Maximize ? (v - lo) / span
                                                          : (hi - v) / span);
  return out;
}

double numeric_cell(const DecisionSituation& situation, int row, int col,
                    bool allow_qualitative) {
  const Criterion& criterion = situation.criteria[col];
  const PerformanceValue& value = situation.performance[row][col];
  if (const double* x = std::get_if<double>(&value)) return *x;
  if (const std::string* label = std::get_if<std::string>(&value)) {
    if (!allow_qualitative)
      fail(Errc::QualitativeDataUnsupported,
           "criterion '" + criterion.name +
               "' is qualitative; enable rank-index encoding or pick a "
               "method that accepts labels");
    return static_cast<double>(resolve_label(criterion, *label));
  }
  fail(Errc::QualitativeDataUnsupported,
       "criterion '" + criterion.name +
           "' carries fuzzy values; use the fuzzy family");
}

Ranking saw_rank(const DecisionSituation& situation,
                 std::span<const double> weights, const SawOptions& options) {
  const int n = static_cast<int>(situation.alternatives.size());
  const int m = static_cast<int>(situation.criteria.size());
  if (static_cast<int>(weights.size()) != m)
    fail(Errc::DimensionMismatch, "one weight per criterion expected");

  std::vector<std::string> warnings;
  std::vector<std::vector<double>> normalized(m);
  for (int j = 0; j < m; ++j) {
    std::vector<double> column(n);
    for (int i = 0; i < n; ++i)
      column[i] = numeric_cell(situation, i, j, options.qualitative_rank_encode);
    NormalizedColumn norm =
        minmax_normalize(column, situation.criteria[j].direction);
    if (norm.degenerate)
      warnings.push_back("criterion '" + situation.criteria[j].name +
                         "' is constant; normalized to 0.5");
    normalized[j] = std::move(norm.values);
  }

  std::vector<double> scores(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) scores[i] += weights[j] * normalized[j][i];

  Ranking ranking = make_ranking(situation.alternatives, std::move(scores));
  ranking.warnings = std::move(warnings);
  return ranking;
}

Ranking saw_rank(const DecisionSituation& situation, const SawOptions& options) {
  std::vector<double> weights;
  weights.reserve(situation.criteria.size());
  for (const auto& criterion : situation.criteria)
    weights.push_back(criterion.weight);
  return saw_rank(situation, weights, options);
}

}  // namespace mcdm
