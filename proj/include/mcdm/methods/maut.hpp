#pragma once

#include <span>
#include <utility>

#include "mcdm/ranking.hpp"

namespace mcdm {

// Piecewise-linear partial utility. Breakpoint abscissae strictly increase,
// ordinates live in [0, 1], and the endpoints span the full range: one end
// at 0, the other at 1.
class UtilityFunction {
 public:
  static UtilityFunction from_breakpoints(
      std::vector<std::pair<double, double>> breakpoints);
  // Linear utility spanning [lo, hi]: increasing for Maximize, decreasing
  // for Minimize.
  static UtilityFunction linear_span(double lo, double hi,
                                     Direction direction);

  const std::vector<std::pair<double, double>>& breakpoints() const {
    return breakpoints_;
  }

  // Values outside the breakpoint span clamp to the nearest endpoint;
  // *clamped reports that it happened.
  double evaluate(double x, bool* clamped = nullptr) const;

 private:
  explicit UtilityFunction(std::vector<std::pair<double, double>> breakpoints)
      : breakpoints_(std::move(breakpoints)) {}
  std::vector<std::pair<double, double>> breakpoints_;
};

enum class MautForm { Additive, Multiplicative };

// Aggregates per-criterion utilities: weighted sum, or weighted geometric
// product with utilities floored at 1e-12. utilities align with the
// situation's criteria; weights must be normalized.
Ranking maut_rank(const DecisionSituation& situation,
                  const std::vector<UtilityFunction>& utilities,
                  std::span<const double> weights,
                  MautForm form = MautForm::Additive);

Ranking maut_rank(const DecisionSituation& situation,
                  const std::vector<UtilityFunction>& utilities,
                  MautForm form = MautForm::Additive);

}  // namespace mcdm
