#pragma once

#include <span>

#include "mcdm/ranking.hpp"

namespace mcdm {

// Per-criterion preference function: Usual (step), V-shape (linear up to a
// strict preference threshold p), or Linear with an indifference band q < p.
struct PreferenceFunction {
  enum class Shape { Usual, VShape, Linear };

  Shape shape = Shape::Usual;
  double q = 0.0;
  double p = 0.0;

  static PreferenceFunction usual() { return {Shape::Usual, 0.0, 0.0}; }
  static PreferenceFunction vshape(double p);
  static PreferenceFunction linear(double q, double p);

  // Preference degree in [0, 1] for a direction-signed difference d.
  double evaluate(double d) const;
};

struct Flows {
  std::vector<std::string> alternatives;
  std::vector<double> plus;   // phi+ in [0, 1]
  std::vector<double> minus;  // phi- in [0, 1]
  std::vector<double> net;    // phi+ - phi-, sums to 0
};

// Pairwise preference aggregation: pi(a,b) as the weighted sum of
// per-criterion preference degrees, flows averaged over the n-1 opponents.
// Qualitative cells enter by scale rank index; fuzzy cells are rejected.
Flows promethee_flows(const DecisionSituation& situation,
                      std::span<const double> weights,
                      const std::vector<PreferenceFunction>& preferences);

Flows promethee_flows(const DecisionSituation& situation,
                      const std::vector<PreferenceFunction>& preferences);

// Complete ranking by net flow, descending; equal flows form tie groups.
Ranking promethee2_rank(const Flows& flows);

// Partial preorder: a outranks b iff phi+(a) >= phi+(b) and
// phi-(a) <= phi-(b) with at least one strict; crossed flows are listed as
// incomparable pairs.
Ranking promethee1_partial(const Flows& flows);

// Assigns each alternative to the first category whose lower net-flow cut
// it meets or exceeds. thresholds are strictly descending and one shorter
// than categories.
SortingAssignment flow_sort(const Flows& flows,
                            std::span<const double> thresholds,
                            const std::vector<std::string>& categories);

}  // namespace mcdm
