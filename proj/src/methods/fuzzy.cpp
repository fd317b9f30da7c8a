#include "mcdm/methods/fuzzy.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "mcdm/methods/saw.hpp"

namespace mcdm {

FuzzyNumber fuzzy_add(const FuzzyNumber& a, const FuzzyNumber& b) {
  return {a.l + b.l, a.m + b.m, a.u + b.u};
}

FuzzyNumber fuzzy_scale(double factor, const FuzzyNumber& t) {
  if (factor < 0.0)
    fail(Errc::NegativeSupport, "fuzzy scaling needs a nonnegative factor");
  return {factor * t.l, factor * t.m, factor * t.u};
}

FuzzyNumber fuzzy_multiply(const FuzzyNumber& a, const FuzzyNumber& b) {
  if (a.l < 0.0 || b.l < 0.0)
    fail(Errc::NegativeSupport,
         "fuzzy multiplication needs nonnegative supports");
  return {a.l * b.l, a.m * b.m, a.u * b.u};
}

std::span<const FuzzyNumber> fuzzy_level_table() {
  static const std::array<FuzzyNumber, 5> kLevels = {{
      {0.0, 0.0, 0.25},
      {0.0, 0.25, 0.5},
      {0.25, 0.5, 0.75},
      {0.5, 0.75, 1.0},
      {0.75, 1.0, 1.0},
  }};
  return kLevels;
}

namespace {

FuzzyNumber lift_cell(const DecisionSituation& situation, int row, int col,
                      const FuzzyOptions& options) {
  const Criterion& criterion = situation.criteria[col];
  const PerformanceValue& value = situation.performance[row][col];
  if (const double* x = std::get_if<double>(&value)) return {*x, *x, *x};
  if (const FuzzyNumber* t = std::get_if<FuzzyNumber>(&value)) return *t;

  const std::string& label = std::get<std::string>(value);
  auto criterion_overrides = options.label_tfns.find(criterion.name);
  if (criterion_overrides != options.label_tfns.end()) {
    auto mapped = criterion_overrides->second.find(label);
    if (mapped != criterion_overrides->second.end()) return mapped->second;
  }
  // Map the scale rank onto the 5-level table by rounded position.
  const int rank = resolve_label(criterion, label);
  const int top = static_cast<int>(criterion.scale->size()) - 1;
  const auto levels = fuzzy_level_table();
  if (top == 0) return levels[2];
  const int level = static_cast<int>(
      std::lround(static_cast<double>(rank) * 4.0 / top));
  return levels[level];
}

}  // namespace

Ranking fuzzy_saw_rank(const DecisionSituation& situation,
                       std::span<const FuzzyWeight> weights,
                       const FuzzyOptions& options) {
  const int n = static_cast<int>(situation.alternatives.size());
  const int m = static_cast<int>(situation.criteria.size());
  if (static_cast<int>(weights.size()) != m)
    fail(Errc::DimensionMismatch, "one weight per criterion expected");
  for (const FuzzyWeight& w : weights) {
    if (const double* crisp = std::get_if<double>(&w)) {
      if (*crisp < 0.0)
        fail(Errc::NegativeSupport, "weights must be nonnegative");
    } else if (std::get<FuzzyNumber>(w).l < 0.0) {
      fail(Errc::NegativeSupport, "fuzzy weights need nonnegative support");
    }
  }

  std::vector<std::string> warnings;
  // Lift every cell, then min-max normalize each column in fuzzy
  // arithmetic. The crisp path mirrors minmax_normalize exactly so crisp
  // inputs reduce to saw_rank bit for bit.
  std::vector<std::vector<FuzzyNumber>> normalized(
      m, std::vector<FuzzyNumber>(n));
  for (int j = 0; j < m; ++j) {
    std::vector<FuzzyNumber> column(n);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      column[i] = lift_cell(situation, i, j, options);
      lo = std::min(lo, column[i].l);
      hi = std::max(hi, column[i].u);
    }
    if (lo == hi) {
      warnings.push_back("criterion '" + situation.criteria[j].name +
                         "' is constant; normalized to 0.5");
      for (int i = 0; i < n; ++i) normalized[j][i] = {0.5, 0.5, 0.5};
      continue;
    }
    const double span = hi - lo;
    const bool maximize =
        situation.criteria[j].direction == Direction::Maximize;
    for (int i = 0; i < n; ++i) {
      const FuzzyNumber& t = column[i];
      normalized[j][i] =
          maximize ? FuzzyNumber{(t.l - lo) / span, (t.m - lo) / span,
                                 (t.u - lo) / span}
                   : FuzzyNumber{(hi - t.u) / span, (hi - t.m) / span,
                                 (hi - t.l) / span};
    }
  }

  std::vector<FuzzyNumber> fuzzy_scores(n, FuzzyNumber{0.0, 0.0, 0.0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const FuzzyNumber& v = normalized[j][i];
      if (const double* crisp = std::get_if<double>(&weights[j]))
        fuzzy_scores[i] = fuzzy_add(fuzzy_scores[i], fuzzy_scale(*crisp, v));
      else
        fuzzy_scores[i] = fuzzy_add(
            fuzzy_scores[i],
            fuzzy_multiply(std::get<FuzzyNumber>(weights[j]), v));
    }

  std::vector<double> scores(n);
  for (int i = 0; i < n; ++i) scores[i] = centroid(fuzzy_scores[i]);

  Ranking ranking = make_ranking(situation.alternatives, std::move(scores));
  ranking.fuzzy_scores = std::move(fuzzy_scores);
  ranking.warnings = std::move(warnings);
  return ranking;
}

Ranking fuzzy_saw_rank(const DecisionSituation& situation,
                       const FuzzyOptions& options) {
  std::vector<FuzzyWeight> weights;
  weights.reserve(situation.criteria.size());
  for (const auto& criterion : situation.criteria)
    weights.emplace_back(criterion.weight);
  return fuzzy_saw_rank(situation, weights, options);
}

}  // namespace mcdm
