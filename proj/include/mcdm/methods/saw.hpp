#pragma once

#include <span>

#include "mcdm/ranking.hpp"

namespace mcdm {

struct NormalizedColumn {
  std::vector<double> values;  // in [0, 1]
  bool degenerate = false;     // constant column, normalized to all 0.5
};

// Min-max normalization toward "higher is better". A constant column maps
// to all 0.5 and raises the degenerate flag instead of erroring.
NormalizedColumn minmax_normalize(std::span<const double> column,
                                  Direction direction);

struct SawOptions {
  // Table-1 weighting family is quantitative-only; rank-index encoding of
  // qualitative labels must be requested explicitly.
  bool qualitative_rank_encode = false;
};

// Weighted sum of min-max normalized columns. Weights must be normalized
// (use the situation's validated weights).
Ranking saw_rank(const DecisionSituation& situation,
                 std::span<const double> weights, const SawOptions& options = {});

// Convenience overload using the situation's own criterion weights.
Ranking saw_rank(const DecisionSituation& situation,
                 const SawOptions& options = {});

// Numeric view of one performance cell: numbers pass through, labels map to
// their scale rank when allowed, fuzzy cells are rejected for crisp methods.
double numeric_cell(const DecisionSituation& situation, int row, int col,
                    bool allow_qualitative);

}  // namespace mcdm
