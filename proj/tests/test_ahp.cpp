#include <doctest.h>

#include <cmath>

#include "mcdm/methods/ahp.hpp"
#include "test_support.hpp"

using namespace mcdm;

namespace {

const std::vector<std::vector<double>> kSaatyExample{
    {1.0, 3.0, 5.0}, {1.0 / 3.0, 1.0, 3.0}, {1.0 / 5.0, 1.0 / 3.0, 1.0}};

// Geometric-mean oracle values for kSaatyExample, computed independently
// before the implementation existed (row geometric means, normalized;
// lambda_max as the mean Aw/w ratio).
constexpr double kOracleW0 = 0.636985571744757;
constexpr double kOracleW1 = 0.258284994374495;
constexpr double kOracleW2 = 0.104729433880748;
constexpr double kOracleLambda = 3.038511090558170;
constexpr double kOracleCi = 0.019255545279085;
constexpr double kOracleCr = 0.033199215998423;

std::vector<double> random_simplex(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(0.02, 1.0);
  std::vector<double> weights(n);
  double total = 0.0;
  for (double& w : weights) total += (w = dist(rng));
  for (double& w : weights) w /= total;
  return weights;
}

}  // namespace

TEST_CASE("pairwise matrices enforce positivity and reciprocity") {
  CHECK_NOTHROW(PairwiseMatrix::from_rows(kSaatyExample));

  try {
    PairwiseMatrix::from_rows({{1.0, 2.0}, {0.49, 1.0}});
    FAIL("expected NotReciprocal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotReciprocal);
  }

  try {
    PairwiseMatrix::from_rows({{1.0, -2.0}, {-0.5, 1.0}});
    FAIL("expected NotPositive");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPositive);
  }

  CHECK_THROWS_AS(PairwiseMatrix::from_rows({{1.0, 2.0}}), Error);
}

TEST_CASE("the all-ones matrix yields uniform priorities") {
  const auto matrix =
      PairwiseMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  for (PriorityMode mode :
       {PriorityMode::GeometricMean, PriorityMode::Eigenvector}) {
    const PriorityResult result = ahp_priorities(matrix, mode);
    for (double w : result.weights) CHECK(w == doctest::Approx(1.0 / 3));
    CHECK(result.lambda_max == doctest::Approx(3.0));
  }
}

TEST_CASE("consistent matrices reproduce their generator") {
  const std::vector<double> generator{0.6, 0.3, 0.1};
  const auto matrix = PairwiseMatrix::from_weights(generator);
  for (PriorityMode mode :
       {PriorityMode::GeometricMean, PriorityMode::Eigenvector}) {
    const PriorityResult result = ahp_priorities(matrix, mode);
    for (std::size_t i = 0; i < generator.size(); ++i)
      CHECK(std::abs(result.weights[i] - generator[i]) < 1e-9);
    CHECK(std::abs(result.lambda_max - 3.0) < 1e-9);
  }
}

TEST_CASE("the classic 3x3 example matches the geometric-mean oracle") {
  const auto matrix = PairwiseMatrix::from_rows(kSaatyExample);
  const PriorityResult gm = ahp_priorities(matrix, PriorityMode::GeometricMean);
  CHECK(gm.weights[0] == doctest::Approx(kOracleW0).epsilon(1e-12));
  CHECK(gm.weights[1] == doctest::Approx(kOracleW1).epsilon(1e-12));
  CHECK(gm.weights[2] == doctest::Approx(kOracleW2).epsilon(1e-12));
  CHECK(gm.lambda_max == doctest::Approx(kOracleLambda).epsilon(1e-12));

  const PriorityResult ev = ahp_priorities(matrix, PriorityMode::Eigenvector);
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(ev.weights[i] - gm.weights[i]) < 1e-3);
}

TEST_CASE("consistency follows the oracle and the small-n convention") {
  const auto example = PairwiseMatrix::from_rows(kSaatyExample);
  const ConsistencyResult consistency = ahp_consistency(example);
  CHECK(consistency.ci == doctest::Approx(kOracleCi).epsilon(1e-9));
  CHECK(consistency.cr == doctest::Approx(kOracleCr).epsilon(1e-9));
  CHECK(consistency.cr < 0.1);

  const auto two = PairwiseMatrix::from_rows({{1.0, 4.0}, {0.25, 1.0}});
  const ConsistencyResult small = ahp_consistency(two);
  CHECK(small.ci == 0.0);
  CHECK(small.cr == 0.0);

  const auto consistent = PairwiseMatrix::from_weights({0.5, 0.3, 0.2});
  CHECK(ahp_consistency(consistent).cr == doctest::Approx(0.0));

  std::vector<std::vector<double>> big(11, std::vector<double>(11, 1.0));
  CHECK_THROWS_AS(ahp_consistency(PairwiseMatrix::from_rows(big)), Error);
}

TEST_CASE("recovery property: random consistent matrices, both modes") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);  // 3..9
    const std::vector<double> generator = random_simplex(rng, n);
    const auto matrix = PairwiseMatrix::from_weights(generator);
    for (PriorityMode mode :
         {PriorityMode::GeometricMean, PriorityMode::Eigenvector}) {
      const PriorityResult result = ahp_priorities(matrix, mode);
      for (int i = 0; i < n; ++i)
        CHECK(std::abs(result.weights[i] - generator[i]) < 1e-9);
    }
    CHECK(std::abs(ahp_consistency(matrix).cr) < 1e-9);
  }
}

TEST_CASE("hierarchical composition matches the hand-composed oracle") {
  // criteria weights (0.6, 0.4); alternative priorities (0.5, 0.3, 0.2)
  // and (0.2, 0.3, 0.5) give global scores (0.38, 0.30, 0.32).
  const auto criteria = PairwiseMatrix::from_weights({0.6, 0.4});
  const std::vector<PairwiseMatrix> alternatives{
      PairwiseMatrix::from_weights({0.5, 0.3, 0.2}),
      PairwiseMatrix::from_weights({0.2, 0.3, 0.5})};
  const Ranking ranking =
      ahp_rank(criteria, alternatives, {"a", "b", "c"});
  CHECK(std::abs(ranking.scores[0] - 0.38) < 1e-9);
  CHECK(std::abs(ranking.scores[1] - 0.30) < 1e-9);
  CHECK(std::abs(ranking.scores[2] - 0.32) < 1e-9);
  CHECK(ranking.order == std::vector<int>{0, 2, 1});
}

TEST_CASE("one criterion with an all-ones matrix ties everything") {
  const auto criteria = PairwiseMatrix::from_rows({{1.0}});
  const std::vector<PairwiseMatrix> alternatives{
      PairwiseMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})};
  const Ranking ranking = ahp_rank(criteria, alternatives, {"a", "b", "c"});
  CHECK(ranking.tie_groups.size() == 1);
}

TEST_CASE("a zero-weight criterion contributes nothing") {
  // Weights (1, 0) up to reciprocal-matrix limits: use a lopsided but
  // consistent pair (0.999, 0.001) and check the first matrix dominates.
  const auto criteria = PairwiseMatrix::from_weights({0.999, 0.001});
  const std::vector<PairwiseMatrix> alternatives{
      PairwiseMatrix::from_weights({0.7, 0.2, 0.1}),
      PairwiseMatrix::from_weights({0.1, 0.2, 0.7})};
  const Ranking ranking = ahp_rank(criteria, alternatives, {"a", "b", "c"});
  CHECK(ranking.order[0] == 0);
  const PriorityResult first = ahp_priorities(alternatives[0]);
  CHECK(ranking.scores[0] == doctest::Approx(first.weights[0]).epsilon(0.01));
}

TEST_CASE("alternative sets beyond the small bucket are rejected") {
  const auto criteria = PairwiseMatrix::from_rows({{1.0}});
  std::vector<std::string> names(10, "x");
  for (int i = 0; i < 10; ++i) names[i] += std::to_string(i);
  std::vector<PairwiseMatrix> alternatives{
      PairwiseMatrix::from_weights(std::vector<double>(10, 0.1))};
  try {
    ahp_rank(criteria, alternatives, names);
    FAIL("expected TooManyAlternatives");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyAlternatives);
  }
}

TEST_CASE("inconsistency warns by default and errors on request") {
  // A deliberately inconsistent 3x3 matrix (circular preferences).
  const auto circular = PairwiseMatrix::from_rows(
      {{1.0, 9.0, 1.0 / 9.0}, {1.0 / 9.0, 1.0, 9.0}, {9.0, 1.0 / 9.0, 1.0}});
  CHECK(ahp_consistency(circular).cr > 0.1);

  const auto criteria = PairwiseMatrix::from_rows({{1.0}});
  const std::vector<PairwiseMatrix> alternatives{circular};

  const Ranking warned = ahp_rank(criteria, alternatives, {"a", "b", "c"});
  CHECK_FALSE(warned.warnings.empty());

  AhpOptions strict;
  strict.cr_error = true;
  try {
    ahp_rank(criteria, alternatives, {"a", "b", "c"}, strict);
    FAIL("expected InconsistentMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InconsistentMatrix);
  }
}
