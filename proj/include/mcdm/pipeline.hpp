#pragma once

#include <filesystem>

#include "mcdm/io/json_io.hpp"

namespace mcdm {

// One flashback step: unexpress a requirement attribute, or extend the
// registry with more method interfaces ("fuzzy" for the bundled fuzzy
// family, otherwise a registry file path).
struct FlashbackAction {
  enum class Kind { RelaxRequirement, ExtendRegistry };
  Kind kind = Kind::RelaxRequirement;
  std::string argument;
};

struct RunPlan {
  std::filesystem::path situation_path;
  std::optional<std::filesystem::path> usage_path;
  // Empty means the builtin crisp-family registry.
  std::optional<std::filesystem::path> registry_path;
  Strategy strategy = Strategy::Search;
  std::optional<std::filesystem::path> l2_weights_path;
  std::vector<FlashbackAction> flashback_policy;  // each applied at most once
  std::optional<std::filesystem::path> method_config_path;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> experience_path;
  BucketThresholds thresholds;
};

// Exit codes for `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNoMethod = 2;
inline constexpr int kExitTie = 3;
inline constexpr int kExitValidationFlashback = 4;
inline constexpr int kExitInputError = 5;

struct IterationRecord {
  std::string registry_snapshot_id;
  std::vector<ReqAttribute> expressed;
  std::vector<std::string> candidates;
  // The flashback that produced this iteration; absent for the first.
  std::optional<FlashbackAction> applied;
};

struct RunReport {
  MethodRequirements derived_requirements;
  SelectionReport selection;  // final iteration
  std::vector<IterationRecord> iterations;
  std::optional<DecisionResult> result;
  std::optional<ValidationVerdict> validation;
  int exit_code = kExitOk;
  std::string error;  // populated for nonzero exits without a result
};

// Executes derive -> select -> apply -> validate. An empty candidate set
// consumes the next flashback action and re-matches; the run stops when a
// method is chosen or the policy is exhausted. report.json and matrix.csv
// land in plan.output_dir, byte-stable for identical inputs.
RunReport run(const RunPlan& plan);

// Fig-6-style comma-separated matrix: expressed attribute rows in canonical
// order, one column per method, final candidate row. The full grid variant
// prints every attribute with blank cells where unexpressed.
std::string emit_matrix(const SelectionReport& report, bool full_grid = false);

json run_report_to_json(const RunReport& report, const RunPlan& plan);

}  // namespace mcdm
