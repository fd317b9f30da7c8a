#pragma once

// Shared builders, random generators, and independent oracles for the test
// suites. Oracle code deliberately re-derives results straight from the
// definitions and must not call into the implementation paths it checks.

#include <random>
#include <string>
#include <vector>

#include "mcdm/methods/promethee.hpp"
#include "mcdm/methods/saw.hpp"

namespace mcdm::testing {

inline Criterion quant(const std::string& name, Direction direction,
                       double weight = 1.0) {
  Criterion criterion;
  criterion.name = name;
  criterion.direction = direction;
  criterion.data_type = DataType::Quantitative;
  criterion.weight = weight;
  return criterion;
}

// Quantitative-only situation from a plain value table (rows =
// alternatives).
inline DecisionSituation table_situation(
    const std::vector<std::vector<double>>& values,
    const std::vector<Direction>& directions,
    const std::vector<double>& weights,
    ProblemKind problem = ProblemKind::Ranking) {
  DecisionSituation situation;
  situation.problem = problem;
  for (std::size_t i = 0; i < values.size(); ++i)
    situation.alternatives.push_back("alt-" + std::to_string(i + 1));
  for (std::size_t j = 0; j < directions.size(); ++j)
    situation.criteria.push_back(
        quant("c" + std::to_string(j + 1), directions[j], weights[j]));
  for (const auto& row : values) {
    std::vector<PerformanceValue> cells(row.begin(), row.end());
    situation.performance.push_back(std::move(cells));
  }
  return validate_situation(situation);
}

// Random quantitative table with distinct-ish entries.
struct RandomTable {
  std::vector<std::vector<double>> values;
  std::vector<Direction> directions;
  std::vector<double> weights;  // normalized
};

inline RandomTable random_table(std::mt19937& rng, int max_alternatives = 8,
                                int max_criteria = 5) {
  std::uniform_int_distribution<int> n_dist(2, max_alternatives);
  std::uniform_int_distribution<int> m_dist(1, max_criteria);
  std::uniform_real_distribution<double> value_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> weight_dist(0.05, 1.0);
  RandomTable table;
  const int n = n_dist(rng);
  const int m = m_dist(rng);
  for (int j = 0; j < m; ++j) {
    table.directions.push_back(rng() % 2 == 0 ? Direction::Maximize
                                              : Direction::Minimize);
    table.weights.push_back(weight_dist(rng));
  }
  double total = 0.0;
  for (double w : table.weights) total += w;
  for (double& w : table.weights) w /= total;
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(m);
    for (int j = 0; j < m; ++j) row[j] = value_dist(rng);
    table.values.push_back(std::move(row));
  }
  return table;
}

// --- independent PROMETHEE oracle (exhaustive over ordered pairs) ---

inline double oracle_preference(const PreferenceFunction& f, double d) {
  switch (f.shape) {
    case PreferenceFunction::Shape::Usual:
      return d > 0 ? 1.0 : 0.0;
    case PreferenceFunction::Shape::VShape:
      return d <= 0 ? 0.0 : (d >= f.p ? 1.0 : d / f.p);
    case PreferenceFunction::Shape::Linear:
      if (d <= f.q) return 0.0;
      if (d >= f.p) return 1.0;
      return (d - f.q) / (f.p - f.q);
  }
  return 0.0;
}

struct OracleFlows {
  std::vector<double> plus, minus, net;
};

inline OracleFlows oracle_flows(const std::vector<std::vector<double>>& values,
                                const std::vector<Direction>& directions,
                                const std::vector<double>& weights,
                                const std::vector<PreferenceFunction>& prefs) {
  const int n = static_cast<int>(values.size());
  const int m = static_cast<int>(directions.size());
  OracleFlows flows;
  flows.plus.assign(n, 0.0);
  flows.minus.assign(n, 0.0);
  flows.net.assign(n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      double pi = 0.0;
      for (int k = 0; k < m; ++k) {
        const double sign = directions[k] == Direction::Maximize ? 1.0 : -1.0;
        pi += weights[k] *
              oracle_preference(prefs[k], sign * (values[a][k] - values[b][k]));
      }
      flows.plus[a] += pi;
      flows.minus[b] += pi;
    }
  for (int a = 0; a < n; ++a) {
    flows.plus[a] /= n - 1;
    flows.minus[a] /= n - 1;
    flows.net[a] = flows.plus[a] - flows.minus[a];
  }
  return flows;
}

}  // namespace mcdm::testing
