#pragma once

#include <map>
#include <span>
#include <variant>

#include "mcdm/ranking.hpp"

namespace mcdm {

// Component-wise triangular arithmetic.
FuzzyNumber fuzzy_add(const FuzzyNumber& a, const FuzzyNumber& b);
// Nonnegative scalar multiple.
FuzzyNumber fuzzy_scale(double factor, const FuzzyNumber& t);
// Product of two TFNs with nonnegative supports; throws NegativeSupport
// otherwise.
FuzzyNumber fuzzy_multiply(const FuzzyNumber& a, const FuzzyNumber& b);

// The default 5-level qualitative scale. Scales with a different label
// count map onto it by rounded rank position.
std::span<const FuzzyNumber> fuzzy_level_table();

// A weight is either crisp or a TFN with nonnegative support.
using FuzzyWeight = std::variant<double, FuzzyNumber>;

struct FuzzyOptions {
  // Per-criterion label -> TFN overrides; otherwise labels map through the
  // criterion scale onto the 5-level table.
  std::map<std::string, std::map<std::string, FuzzyNumber>> label_tfns;
};

// Fuzzy weighted sum: every cell is lifted to a TFN (numbers become crisp
// triples, labels map through the level table), columns are min-max
// normalized in fuzzy arithmetic, scores aggregate per component, and the
// ranking orders centroids descending. Crisp inputs reduce exactly to
// saw_rank.
Ranking fuzzy_saw_rank(const DecisionSituation& situation,
                       std::span<const FuzzyWeight> weights,
                       const FuzzyOptions& options = {});

Ranking fuzzy_saw_rank(const DecisionSituation& situation,
                       const FuzzyOptions& options = {});

}  // namespace mcdm
