#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mcdm/core_model.hpp"

namespace mcdm {

// Scored order over alternatives. Total by default; PROMETHEE I produces a
// partial order with an explicit incomparable-pairs set.
struct Ranking {
  std::vector<std::string> alternatives;  // input order
  std::vector<double> scores;             // aligned with alternatives
  std::vector<int> order;                 // indices, best first
  std::vector<std::vector<int>> tie_groups;  // equal-score groups, best first
  bool partial = false;
  std::vector<std::pair<int, int>> incomparable;  // index pairs, i < j
  std::vector<std::string> warnings;

  // Present only for the fuzzy family: per-alternative fuzzy scores whose
  // centroids are the crisp scores above.
  std::vector<FuzzyNumber> fuzzy_scores;
};

// Builds order and tie groups from scores (descending, stable by index).
Ranking make_ranking(std::vector<std::string> alternatives,
                     std::vector<double> scores);

struct ChoiceSubset {
  std::vector<std::string> alternatives;
};

struct SortingAssignment {
  std::map<std::string, std::string> assignment;  // alternative -> category
};

// Result variant; must match the situation's problem kind.
struct DecisionResult {
  std::variant<ChoiceSubset, Ranking, SortingAssignment> value;

  ProblemKind kind() const {
    switch (value.index()) {
      case 0: return ProblemKind::Choice;
      case 1: return ProblemKind::Ranking;
      default: return ProblemKind::Sorting;
    }
  }
};

}  // namespace mcdm
