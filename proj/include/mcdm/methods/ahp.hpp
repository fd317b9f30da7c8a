#pragma once

#include <vector>

#include "mcdm/ranking.hpp"

namespace mcdm {

// Positive reciprocal pairwise-comparison matrix: diagonal 1, entries[j][i]
// equal to 1/entries[i][j] within 1e-9.
class PairwiseMatrix {
 public:
  // Validates shape, positivity, and reciprocity.
  static PairwiseMatrix from_rows(std::vector<std::vector<double>> rows);
  // Consistent matrix a_ij = w_i / w_j built from a positive weight vector.
  static PairwiseMatrix from_weights(const std::vector<double>& weights);

  int size() const { return static_cast<int>(rows_.size()); }
  double at(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }

 private:
  explicit PairwiseMatrix(std::vector<std::vector<double>> rows)
      : rows_(std::move(rows)) {}
  std::vector<std::vector<double>> rows_;
};

enum class PriorityMode { GeometricMean, Eigenvector };

struct PriorityResult {
  std::vector<double> weights;  // simplex vector
  double lambda_max = 0.0;
};

// Priority vector by row geometric means or by power iteration on the
// principal eigenvector (residual 1e-10). lambda_max is the mean of
// (A*w)_i / w_i.
PriorityResult ahp_priorities(const PairwiseMatrix& matrix,
                              PriorityMode mode = PriorityMode::GeometricMean);

struct ConsistencyResult {
  double ci = 0.0;
  double cr = 0.0;
};

// Saaty consistency index and ratio. n <= 2 is consistent by convention;
// the random index table covers n up to 10.
ConsistencyResult ahp_consistency(
    const PairwiseMatrix& matrix,
    PriorityMode mode = PriorityMode::GeometricMean);

struct AhpOptions {
  PriorityMode mode = PriorityMode::GeometricMean;
  double cr_threshold = 0.1;
  // Inconsistent matrices warn by default; error mode throws
  // InconsistentMatrix instead.
  bool cr_error = false;
};

// Hierarchical composition: criteria weights from the criteria matrix,
// per-criterion alternative priorities, global score as the weighted sum.
Ranking ahp_rank(const PairwiseMatrix& criteria_matrix,
                 const std::vector<PairwiseMatrix>& alternative_matrices,
                 const std::vector<std::string>& alternatives,
                 const AhpOptions& options = {});

}  // namespace mcdm
