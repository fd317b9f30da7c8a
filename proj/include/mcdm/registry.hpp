#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcdm/requirements.hpp"

namespace mcdm {

// Capability cell that may hold an explicit value set or the "any" wildcard
// (Table-style "Different"). "Any" satisfies every expressed value.
template <typename T>
struct SetCapability {
  bool any = false;
  std::set<T> values;

  static SetCapability wildcard() { return {true, {}}; }
  static SetCapability of(std::set<T> vs) { return {false, std::move(vs)}; }
  bool contains(const T& v) const { return any || values.count(v) > 0; }
};

template <typename T>
struct ValueCapability {
  bool any = false;
  T value{};

  static ValueCapability wildcard() { return {true, {}}; }
  static ValueCapability of(T v) { return {false, v}; }
};

using BoolCapability = ValueCapability<bool>;

// One method family's interface: the situation characteristics under which
// the family applies.
struct MethodInterface {
  std::string method_id;
  std::set<ProblemKind> problems;  // nonempty, never a wildcard
  SetCapability<CountBucket> count_buckets;
  SetCapability<SetNature> natures;
  BoolCapability incompatibility_support;
  SetCapability<DataType> data_types;
  BoolCapability measure_scale_support;
  SetCapability<WeightingType> weighting_types;
  BoolCapability tool_available;
  ValueCapability<Notation> notation;
  EasinessLevel easiness = EasinessLevel::Medium;
  SkillLevel skill_demand = SkillLevel::Medium;
};

// Ordered method registry. Declaration order is meaningful: it fixes report
// columns and breaks score ties deterministically.
class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<MethodInterface> entries);

  // All five bundled family interfaces: MAUT, AHP, Outranking, Weighting,
  // Fuzzy.
  static Registry builtin();
  // The four crisp families only; the fuzzy family enters via registry
  // extension.
  static Registry builtin_crisp();
  // The bundled fuzzy-family interface on its own.
  static MethodInterface builtin_fuzzy();

  const std::vector<MethodInterface>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  const MethodInterface* find(const std::string& method_id) const;
  // Throws UnknownMethod.
  const MethodInterface& lookup(const std::string& method_id) const;

  void append(MethodInterface entry);

 private:
  std::vector<MethodInterface> entries_;
};

// Requirement attributes in the canonical matrix-row order.
enum class ReqAttribute {
  Problem,
  Count,
  Nature,
  Incompatibility,
  DataType,
  Scale,
  Weighting,
  Tool,
  Easiness,
  Skills,
};

inline constexpr ReqAttribute kAllReqAttributes[] = {
    ReqAttribute::Problem,       ReqAttribute::Count,
    ReqAttribute::Nature,        ReqAttribute::Incompatibility,
    ReqAttribute::DataType,      ReqAttribute::Scale,
    ReqAttribute::Weighting,     ReqAttribute::Tool,
    ReqAttribute::Easiness,      ReqAttribute::Skills,
};

std::string_view attribute_name(ReqAttribute attribute);
std::optional<ReqAttribute> attribute_from_name(std::string_view name);

enum class Strategy { Search, Weighted, Experience };

// The 0/1 selection matrix plus candidate set, chosen method, and the
// registry snapshot that produced it.
struct SelectionReport {
  std::vector<std::string> method_ids;  // registry order
  // One row per expressed attribute, canonical order; cells align with
  // method_ids.
  std::vector<std::pair<ReqAttribute, std::vector<int>>> matrix;
  std::vector<std::string> candidates;
  std::optional<std::string> chosen;
  Strategy strategy_used = Strategy::Search;
  // Notation preference is reported but never filters.
  std::optional<Notation> notation_note;
  // Weighted-strategy scores for every method, and how a tie was broken.
  std::map<std::string, double> scores;
  std::optional<std::string> tiebreak_note;
  // Embedded snapshot so the report is self-contained.
  std::vector<MethodInterface> registry_snapshot;
};

// Evaluates every expressed requirement attribute against every method.
// A cell is 1 iff the method's interface satisfies the expressed value;
// candidates are the all-1 columns. An empty candidate set is a valid
// report, not an error.
SelectionReport match_methods(const MethodRequirements& requirements,
                              const Registry& registry);

// Whether one interface satisfies one expressed attribute of a requirement
// document. Exposed for the weighting strategy and for tests.
bool attribute_satisfied(const MethodInterface& interface,
                         const MethodRequirements& requirements,
                         ReqAttribute attribute);

// Weighted tie-break over a prior report. Scores every method as the
// weighted sum of its cells over the expressed attributes, plus the boolean
// capability attributes (tool, incompatibility, scale) when the operator
// weights them while unexpressed. The argmax is taken over the candidate
// set; scores for all methods land in report.scores. Throws
// TieNotResolvable when the top candidates have identical cell vectors over
// the weighted attributes.
std::string select_by_weighting(SelectionReport& report,
                                const std::map<ReqAttribute, double>& weights);

}  // namespace mcdm
