#include "mcdm/methods/promethee.hpp"

#include <algorithm>

#include "mcdm/methods/saw.hpp"

namespace mcdm {

PreferenceFunction PreferenceFunction::vshape(double p) {
  if (!(p > 0.0)) fail(Errc::BadThresholds, "v-shape needs p > 0");
  return {Shape::VShape, 0.0, p};
}

PreferenceFunction PreferenceFunction::linear(double q, double p) {
  if (q < 0.0 || !(q < p))
    fail(Errc::BadThresholds, "linear shape needs 0 <= q < p");
  return {Shape::Linear, q, p};
}

double PreferenceFunction::evaluate(double d) const {
  switch (shape) {
    case Shape::Usual:
      return d > 0.0 ? 1.0 : 0.0;
    case Shape::VShape:
      if (d <= 0.0) return 0.0;
      return d >= p ? 1.0 : d / p;
    case Shape::Linear:
      if (d <= q) return 0.0;
      return d >= p ? 1.0 : (d - q) / (p - q);
  }
  return 0.0;
}

Flows promethee_flows(const DecisionSituation& situation,
                      std::span<const double> weights,
                      const std::vector<PreferenceFunction>& preferences) {
  const int n = static_cast<int>(situation.alternatives.size());
  const int m = static_cast<int>(situation.criteria.size());
  if (n < 2)
    fail(Errc::TooFewAlternatives, "flows need at least two alternatives");
  if (static_cast<int>(weights.size()) != m)
    fail(Errc::DimensionMismatch, "one weight per criterion expected");
  if (static_cast<int>(preferences.size()) != m)
    fail(Errc::DimensionMismatch,
         "one preference function per criterion expected");

  // The outranking family reads qualitative cells by rank index.
  std::vector<std::vector<double>> values(n, std::vector<double>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      values[i][j] = numeric_cell(situation, i, j, /*allow_qualitative=*/true);

  Flows flows;
  flows.alternatives = situation.alternatives;
  flows.plus.assign(n, 0.0);
  flows.minus.assign(n, 0.0);
  flows.net.assign(n, 0.0);

  // pi(a, b) over all ordered pairs; fixed iteration order keeps the sums
  // independent of any evaluation strategy.
  std::vector<std::vector<double>> pi(n, std::vector<double>(n, 0.0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      double degree = 0.0;
      for (int j = 0; j < m; ++j) {
        const double diff = values[a][j] - values[b][j];
        const double d = situation.criteria[j].direction == Direction::Maximize
                             ? diff
                             : -diff;
        degree += weights[j] * preferences[j].evaluate(d);
      }
      pi[a][b] = degree;
    }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      flows.plus[a] += pi[a][b];
      flows.minus[a] += pi[b][a];
    }
    flows.plus[a] /= n - 1;
    flows.minus[a] /= n - 1;
    flows.net[a] = flows.plus[a] - flows.minus[a];
  }
  return flows;
}

Flows promethee_flows(const DecisionSituation& situation,
                      const std::vector<PreferenceFunction>& preferences) {
  std::vector<double> weights;
  weights.reserve(situation.criteria.size());
  for (const auto& criterion : situation.criteria)
    weights.push_back(criterion.weight);
  return promethee_flows(situation, weights, preferences);
}

Ranking promethee2_rank(const Flows& flows) {
  return make_ranking(flows.alternatives, flows.net);
}

Ranking promethee1_partial(const Flows& flows) {
  Ranking ranking = make_ranking(flows.alternatives, flows.net);
  ranking.partial = true;
  const int n = static_cast<int>(flows.alternatives.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool i_not_worse =
          flows.plus[i] >= flows.plus[j] && flows.minus[i] <= flows.minus[j];
      const bool j_not_worse =
          flows.plus[j] >= flows.plus[i] && flows.minus[j] <= flows.minus[i];
      // Both hold only for indifference (equal flows); neither holding
      // means the flows cross and the pair is incomparable.
      if (!i_not_worse && !j_not_worse) ranking.incomparable.emplace_back(i, j);
    }
  return ranking;
}

SortingAssignment flow_sort(const Flows& flows,
                            std::span<const double> thresholds,
                            const std::vector<std::string>& categories) {
  if (categories.size() < 2 ||
      thresholds.size() + 1 != categories.size())
    fail(Errc::NonMonotoneThresholds,
         "need |thresholds| = |categories| - 1 with at least two categories");
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (!(thresholds[i] < thresholds[i - 1]))
      fail(Errc::NonMonotoneThresholds,
           "category cuts must strictly descend");

  SortingAssignment assignment;
  for (std::size_t a = 0; a < flows.alternatives.size(); ++a) {
    std::size_t category = thresholds.size();  // below every cut
    for (std::size_t c = 0; c < thresholds.size(); ++c)
      if (flows.net[a] >= thresholds[c]) {
        category = c;
        break;
      }
    assignment.assignment[flows.alternatives[a]] = categories[category];
  }
  return assignment;
}

}  // namespace mcdm
