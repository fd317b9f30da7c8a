#include "mcdm/methods/ahp.hpp"

#include <cmath>
#include <map>

namespace mcdm {

namespace {
constexpr double kReciprocalTolerance = 1e-9;
constexpr double kPowerIterationResidual = 1e-10;
constexpr int kMaxPriorityDimension = 15;
}  // namespace

PairwiseMatrix PairwiseMatrix::from_rows(
    std::vector<std::vector<double>> rows) {
  const std::size_t n = rows.size();
  if (n == 0) fail(Errc::DimensionMismatch, "empty pairwise matrix");
  for (const auto& row : rows)
    if (row.size() != n)
      fail(Errc::DimensionMismatch, "pairwise matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double v = rows[i][j];
      if (!(v > 0.0) || !std::isfinite(v))
        fail(Errc::NotPositive, "pairwise entries must be positive");
      if (i == j && std::abs(v - 1.0) > kReciprocalTolerance)
        fail(Errc::NotReciprocal, "pairwise diagonal must be 1");
      if (std::abs(rows[j][i] - 1.0 / v) > kReciprocalTolerance)
        fail(Errc::NotReciprocal,
             "entry (" + std::to_string(j) + "," + std::to_string(i) +
                 ") is not the reciprocal of its mirror");
    }
  return PairwiseMatrix(std::move(rows));
}

PairwiseMatrix PairwiseMatrix::from_weights(
    const std::vector<double>& weights) {
  const std::size_t n = weights.size();
  if (n == 0) fail(Errc::DimensionMismatch, "empty weight vector");
  for (double w : weights)
    if (!(w > 0.0)) fail(Errc::NotPositive, "generator weights must be positive");
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = weights[i] / weights[j];
  // Exact reciprocity: w_i/w_j times w_j/w_i is 1 up to rounding, and the
  // construction keeps it within the tolerance by definition.
  return PairwiseMatrix(std::move(rows));
}

namespace {

std::vector<double> multiply(const PairwiseMatrix& matrix,
                             const std::vector<double>& v) {
  const int n = matrix.size();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += matrix.at(i, j) * v[j];
  return out;
}

void normalize_sum(std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  for (double& x : v) x /= total;
}

double lambda_from(const PairwiseMatrix& matrix,
                   const std::vector<double>& weights) {
  const std::vector<double> aw = multiply(matrix, weights);
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) acc += aw[i] / weights[i];
  return acc / static_cast<double>(weights.size());
}

}  // namespace

PriorityResult ahp_priorities(const PairwiseMatrix& matrix,
                              PriorityMode mode) {
  const int n = matrix.size();
  if (n > kMaxPriorityDimension)
    fail(Errc::DimensionTooLarge,
         "pairwise priorities support up to 15 items");

  std::vector<double> weights(n, 1.0 / n);
  if (mode == PriorityMode::GeometricMean) {
    for (int i = 0; i < n; ++i) {
      double log_sum = 0.0;
      for (int j = 0; j < n; ++j) log_sum += std::log(matrix.at(i, j));
      weights[i] = std::exp(log_sum / n);
    }
    normalize_sum(weights);
  } else {
    // Power iteration on the principal eigenvector.
    for (int iteration = 0; iteration < 10000; ++iteration) {
      std::vector<double> next = multiply(matrix, weights);
      normalize_sum(next);
      double residual = 0.0;
      for (int i = 0; i < n; ++i)
        residual = std::max(residual, std::abs(next[i] - weights[i]));
      weights = std::move(next);
      if (residual < kPowerIterationResidual) break;
    }
  }
  return {weights, lambda_from(matrix, weights)};
}

ConsistencyResult ahp_consistency(const PairwiseMatrix& matrix,
                                  PriorityMode mode) {
  // Saaty random indices for n = 3..10.
  static const std::map<int, double> kRandomIndex = {
      {3, 0.58}, {4, 0.90}, {5, 1.12}, {6, 1.24},
      {7, 1.32}, {8, 1.41}, {9, 1.45}, {10, 1.49}};

  const int n = matrix.size();
  if (n > 10)
    fail(Errc::DimensionTooLarge, "consistency ratio is tabulated up to n=10");
  if (n <= 2) return {0.0, 0.0};  // always consistent by convention

  const PriorityResult priorities = ahp_priorities(matrix, mode);
  ConsistencyResult out;
  out.ci = (priorities.lambda_max - n) / (n - 1);
  out.cr = out.ci / kRandomIndex.at(n);
  return out;
}

Ranking ahp_rank(const PairwiseMatrix& criteria_matrix,
                 const std::vector<PairwiseMatrix>& alternative_matrices,
                 const std::vector<std::string>& alternatives,
                 const AhpOptions& options) {
  const int alternative_count = static_cast<int>(alternatives.size());
  if (alternative_count > 9)
    fail(Errc::TooManyAlternatives,
         "the hierarchy family is practical for small alternative sets "
         "(<= 9)");
  if (criteria_matrix.size() !=
      static_cast<int>(alternative_matrices.size()))
    fail(Errc::DimensionMismatch,
         "one alternative matrix per criterion expected");

  std::vector<std::string> warnings;
  auto guard_consistency = [&](const PairwiseMatrix& matrix,
                               const std::string& what) {
    if (matrix.size() > 10 || matrix.size() < 3) return;
    const ConsistencyResult consistency =
        ahp_consistency(matrix, options.mode);
    if (consistency.cr <= options.cr_threshold) return;
    if (options.cr_error)
      fail(Errc::InconsistentMatrix,
           what + " has CR above the threshold");
    warnings.push_back(what + " has CR " + std::to_string(consistency.cr) +
                       " above threshold " +
                       std::to_string(options.cr_threshold));
  };

  guard_consistency(criteria_matrix, "criteria matrix");
  const std::vector<double> criteria_weights =
      ahp_priorities(criteria_matrix, options.mode).weights;

  std::vector<double> scores(alternative_count, 0.0);
  for (std::size_t k = 0; k < alternative_matrices.size(); ++k) {
    const PairwiseMatrix& matrix = alternative_matrices[k];
    if (matrix.size() != alternative_count)
      fail(Errc::DimensionMismatch,
           "alternative matrix " + std::to_string(k) +
               " does not match the alternative count");
    guard_consistency(matrix, "alternative matrix " + std::to_string(k));
    const std::vector<double> priorities =
        ahp_priorities(matrix, options.mode).weights;
    for (int i = 0; i < alternative_count; ++i)
      scores[i] += criteria_weights[k] * priorities[i];
  }

  Ranking ranking = make_ranking(alternatives, std::move(scores));
  ranking.warnings = std::move(warnings);
  return ranking;
}

}  // namespace mcdm
