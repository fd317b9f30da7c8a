// mcdm: file-driven multicriteria decision engine.
//
// Subcommands mirror the four-step integration process: describe a decision
// situation, derive requirements for an MC method, select a method by
// interface matching, execute it, and validate the result.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mcdm/pipeline.hpp"

namespace {

using mcdm::json;

std::filesystem::path experience_store_path(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("MCDM_EXPERIENCE_PATH")) return env;
  mcdm::fail(mcdm::Errc::StoreUnreadable,
             "no experience store given (use --store or "
             "MCDM_EXPERIENCE_PATH)");
}

mcdm::SelectionReport selection_report_from_json(const json& j) {
  mcdm::SelectionReport report;
  report.method_ids = j.at("methods").get<std::vector<std::string>>();
  for (const auto& attribute : mcdm::kAllReqAttributes) {
    const std::string name{mcdm::attribute_name(attribute)};
    if (j.at("matrix").contains(name))
      report.matrix.emplace_back(
          attribute, j["matrix"][name].get<std::vector<int>>());
  }
  report.candidates = j.at("candidates").get<std::vector<std::string>>();
  if (j.contains("chosen")) report.chosen = j["chosen"].get<std::string>();
  return report;
}

struct SelectInputs {
  std::string situation_path;
  std::string usage_path;
  std::string registry_path;
  std::vector<std::string> extensions;
  mcdm::BucketThresholds thresholds;
};

struct SelectOutcome {
  mcdm::DecisionSituation situation;
  mcdm::MethodRequirements requirements;
  mcdm::SelectionReport report;
};

SelectOutcome derive_and_match(const SelectInputs& inputs) {
  SelectOutcome outcome;
  outcome.situation = mcdm::validate_situation(
      mcdm::load_situation(inputs.situation_path).situation);
  mcdm::UsagePreferences usage;
  std::optional<bool> measure_scale;
  if (!inputs.usage_path.empty()) {
    mcdm::LoadedUsage loaded = mcdm::load_usage(inputs.usage_path);
    usage = loaded.usage;
    measure_scale = loaded.measure_scale_needed;
  }
  outcome.requirements = mcdm::derive_requirements(
      outcome.situation, usage, inputs.thresholds, measure_scale);

  mcdm::Registry registry = inputs.registry_path.empty()
                                ? mcdm::Registry::builtin_crisp()
                                : mcdm::load_registry(inputs.registry_path);
  for (const auto& extension : inputs.extensions) {
    if (extension == "fuzzy") {
      registry.append(mcdm::Registry::builtin_fuzzy());
    } else {
      for (const auto& entry : mcdm::load_registry(extension).entries())
        registry.append(entry);
    }
  }
  outcome.report = mcdm::match_methods(outcome.requirements, registry);
  return outcome;
}

void add_threshold_flags(CLI::App* cmd, mcdm::BucketThresholds& thresholds) {
  cmd->add_option("--small-max", thresholds.small_max,
                  "largest alternative count still bucketed as small");
  cmd->add_option("--medium-max", thresholds.medium_max,
                  "largest alternative count still bucketed as medium");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multicriteria decision engine"};
  app.require_subcommand(1);

  // --- screen ---
  std::string guidance = "linear";
  bool offers_arguments = false;
  bool offers_prioritization = false;
  int criteria_count = 0;
  int dm_count = 0;
  auto* screen = app.add_subcommand(
      "screen", "screen a process task for a decision point");
  screen->add_option("--guidance", guidance, "guidance form: linear|tree")
      ->required();
  screen->add_flag("--arguments,!--no-arguments", offers_arguments,
                   "the guidance offers arguments (metrics or criteria)");
  screen->add_flag("--prioritization,!--no-prioritization",
                   offers_prioritization,
                   "the guidance offers a prioritization");
  screen->add_option("--criteria-count", criteria_count,
                     "also classify the typology: criterion count");
  screen->add_option("--dm-count", dm_count,
                     "also classify the typology: decision-maker count");

  // --- describe ---
  std::string situation_path;
  auto* describe = app.add_subcommand(
      "describe", "validate a situation file and print it normalized");
  describe->add_option("--situation", situation_path, "situation document")
      ->required();

  // --- derive ---
  SelectInputs derive_inputs;
  auto* derive = app.add_subcommand(
      "derive", "derive the method requirements from a situation");
  derive->add_option("--situation", derive_inputs.situation_path)->required();
  derive->add_option("--usage", derive_inputs.usage_path,
                     "usage preferences document");
  add_threshold_flags(derive, derive_inputs.thresholds);

  // --- select ---
  SelectInputs select_inputs;
  bool matrix_only = false;
  bool full_grid = false;
  std::string select_out;
  auto* select = app.add_subcommand(
      "select", "match the derived requirements against a method registry");
  select->add_option("--situation", select_inputs.situation_path)->required();
  select->add_option("--usage", select_inputs.usage_path);
  select->add_option("--registry", select_inputs.registry_path,
                     "registry file (default: the builtin crisp families)");
  select->add_option("--extend", select_inputs.extensions,
                     "append interfaces: 'fuzzy' or a registry file");
  select->add_flag("--matrix", matrix_only,
                   "print the selection matrix CSV instead of the report");
  select->add_flag("--full-grid", full_grid,
                   "matrix variant with blank rows for unexpressed "
                   "attributes");
  select->add_option("--out", select_out,
                     "directory for report.json and matrix.csv");
  add_threshold_flags(select, select_inputs.thresholds);

  // --- apply ---
  std::string apply_situation;
  std::string apply_method_id;
  std::string apply_config;
  std::string apply_registry;
  auto* apply =
      app.add_subcommand("apply", "execute a method family on a situation");
  apply->add_option("--situation", apply_situation)->required();
  apply->add_option("--method", apply_method_id)->required();
  apply->add_option("--config", apply_config, "method configuration file");
  apply->add_option("--registry", apply_registry);

  // --- run ---
  mcdm::RunPlan plan;
  std::string run_situation, run_usage, run_registry, run_weights,
      run_config, run_out, run_store;
  std::string strategy = "search";
  std::vector<std::string> flashbacks;
  auto* run = app.add_subcommand(
      "run", "full pipeline: derive, select (with flashbacks), apply, "
             "validate");
  run->add_option("--situation", run_situation)->required();
  run->add_option("--usage", run_usage);
  run->add_option("--registry", run_registry);
  run->add_option("--strategy", strategy, "search|weighted|experience");
  run->add_option("--l2-weights", run_weights,
                  "attribute weights for the weighted strategy");
  run->add_option("--flashback", flashbacks,
                  "policy entries, in order: relax:<attribute> or "
                  "extend:fuzzy or extend:<registry file>");
  run->add_option("--config", run_config, "method configuration file");
  run->add_option("--out", run_out, "output directory")->required();
  run->add_option("--store", run_store, "experience store path");
  add_threshold_flags(run, plan.thresholds);

  // --- matrix ---
  std::string matrix_report;
  std::string matrix_out;
  bool matrix_full_grid = false;
  auto* matrix = app.add_subcommand(
      "matrix", "re-emit the selection matrix CSV from a report.json");
  matrix->add_option("--report", matrix_report)->required();
  matrix->add_flag("--full-grid", matrix_full_grid);
  matrix->add_option("-o,--out", matrix_out, "output file (default stdout)");

  // --- experience ---
  auto* experience =
      app.add_subcommand("experience", "inspect or extend the experience "
                                       "store");
  experience->require_subcommand(1);
  std::string exp_store;
  auto* exp_list = experience->add_subcommand("list", "print all records");
  exp_list->add_option("--store", exp_store);
  SelectInputs record_inputs;
  std::string record_method;
  std::string record_store;
  std::string record_registry;
  auto* exp_record = experience->add_subcommand(
      "record", "derive requirements and record the chosen method");
  exp_record->add_option("--situation", record_inputs.situation_path)
      ->required();
  exp_record->add_option("--usage", record_inputs.usage_path);
  exp_record->add_option("--method", record_method)->required();
  exp_record->add_option("--store", record_store);
  exp_record->add_option("--registry", record_registry);
  add_threshold_flags(exp_record, record_inputs.thresholds);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*screen) {
      mcdm::DmPointScreen answers;
      answers.guidance_form = mcdm::guidance_form_from(guidance);
      answers.offers_arguments = offers_arguments;
      answers.offers_prioritization = offers_prioritization;
      const mcdm::ScreenVerdict verdict = mcdm::screen_dm_point(answers);
      json out;
      out["is_dm_point"] = verdict.is_dm_point;
      out["needs_criteria_definition"] = verdict.needs_criteria_definition;
      if (criteria_count > 0 && dm_count > 0) {
        const mcdm::TypologyVerdict typology =
            mcdm::classify_typology(criteria_count, dm_count);
        out["typology"] = {
            {"criteria_axis",
             typology.criteria_axis == mcdm::CriteriaAxis::Multi ? "multi"
                                                                 : "mono"},
            {"dm_axis", typology.dm_axis == mcdm::DmAxis::Multiple
                            ? "multiple"
                            : "single"},
            {"mc_eligible", typology.mc_eligible},
        };
      }
      std::cout << out.dump(2) << '\n';
    } else if (*describe) {
      const mcdm::DecisionSituation situation = mcdm::validate_situation(
          mcdm::load_situation(situation_path).situation);
      std::cout << mcdm::situation_to_json(situation).dump(2) << '\n';
    } else if (*derive) {
      SelectOutcome outcome = derive_and_match(derive_inputs);
      std::cout << mcdm::requirements_to_json(outcome.requirements).dump(2)
                << '\n';
    } else if (*select) {
      SelectOutcome outcome = derive_and_match(select_inputs);
      const std::string csv = mcdm::emit_matrix(outcome.report, full_grid);
      if (!select_out.empty()) {
        std::filesystem::create_directories(select_out);
        std::ofstream matrix_file(std::filesystem::path(select_out) /
                                  "matrix.csv");
        matrix_file << csv;
        std::ofstream report_file(std::filesystem::path(select_out) /
                                  "report.json");
        report_file << mcdm::selection_report_to_json(outcome.report).dump(2)
                    << '\n';
      }
      if (matrix_only)
        std::cout << csv;
      else
        std::cout << mcdm::selection_report_to_json(outcome.report).dump(2)
                  << '\n';
    } else if (*apply) {
      const mcdm::DecisionSituation situation = mcdm::validate_situation(
          mcdm::load_situation(apply_situation).situation);
      const mcdm::Registry registry =
          apply_registry.empty() ? mcdm::Registry::builtin()
                                 : mcdm::load_registry(apply_registry);
      mcdm::MethodConfig config;
      if (!apply_config.empty())
        config = mcdm::load_method_config(apply_config, situation);
      const mcdm::DecisionResult result =
          mcdm::apply_method(situation, apply_method_id, config, registry);
      std::cout << mcdm::result_to_json(result).dump(2) << '\n';
    } else if (*run) {
      plan.situation_path = run_situation;
      if (!run_usage.empty()) plan.usage_path = run_usage;
      if (!run_registry.empty()) plan.registry_path = run_registry;
      if (!run_weights.empty()) plan.l2_weights_path = run_weights;
      if (!run_config.empty()) plan.method_config_path = run_config;
      if (!run_store.empty()) plan.experience_path = run_store;
      plan.output_dir = run_out;
      if (strategy == "weighted")
        plan.strategy = mcdm::Strategy::Weighted;
      else if (strategy == "experience")
        plan.strategy = mcdm::Strategy::Experience;
      else if (strategy == "search")
        plan.strategy = mcdm::Strategy::Search;
      else
        mcdm::fail(mcdm::Errc::ParseError,
                   "unknown strategy '" + strategy + "'");
      for (const auto& entry : flashbacks) {
        mcdm::FlashbackAction action;
        if (entry.rfind("relax:", 0) == 0) {
          action.kind = mcdm::FlashbackAction::Kind::RelaxRequirement;
          action.argument = entry.substr(6);
        } else if (entry.rfind("extend:", 0) == 0) {
          action.kind = mcdm::FlashbackAction::Kind::ExtendRegistry;
          action.argument = entry.substr(7);
        } else {
          mcdm::fail(mcdm::Errc::ParseError,
                     "flashback entries look like relax:<attribute> or "
                     "extend:<fuzzy|file>");
        }
        plan.flashback_policy.push_back(std::move(action));
      }
      const mcdm::RunReport report = mcdm::run(plan);
      json summary;
      summary["exit_code"] = report.exit_code;
      if (report.selection.chosen) summary["chosen"] = *report.selection.chosen;
      summary["candidates"] = report.selection.candidates;
      summary["iterations"] = report.iterations.size();
      if (!report.error.empty()) summary["error"] = report.error;
      std::cout << summary.dump(2) << '\n';
      return report.exit_code;
    } else if (*matrix) {
      const json report_json = mcdm::load_json_file(matrix_report);
      const mcdm::SelectionReport report = selection_report_from_json(
          report_json.contains("selection") ? report_json["selection"]
                                            : report_json);
      const std::string csv = mcdm::emit_matrix(report, matrix_full_grid);
      if (matrix_out.empty()) {
        std::cout << csv;
      } else {
        std::ofstream out(matrix_out);
        out << csv;
      }
    } else if (*experience) {
      if (*exp_list) {
        mcdm::ExperienceStore store(experience_store_path(exp_store));
        for (const auto& record : store.records()) {
          json line;
          line["fingerprint"] = record.fingerprint;
          line["method"] = record.method_id;
          line["timestamp"] = record.timestamp_ns;
          std::cout << line.dump() << '\n';
        }
      } else {
        const mcdm::DecisionSituation situation = mcdm::validate_situation(
            mcdm::load_situation(record_inputs.situation_path).situation);
        mcdm::UsagePreferences usage;
        std::optional<bool> measure_scale;
        if (!record_inputs.usage_path.empty()) {
          mcdm::LoadedUsage loaded =
              mcdm::load_usage(record_inputs.usage_path);
          usage = loaded.usage;
          measure_scale = loaded.measure_scale_needed;
        }
        const mcdm::MethodRequirements requirements =
            mcdm::derive_requirements(situation, usage,
                                      record_inputs.thresholds, measure_scale);
        const mcdm::Registry registry =
            record_registry.empty() ? mcdm::Registry::builtin()
                                    : mcdm::load_registry(record_registry);
        mcdm::ExperienceStore store(experience_store_path(record_store));
        const mcdm::ExperienceRecord record =
            store.record(requirements, record_method, registry);
        json out;
        out["fingerprint"] = record.fingerprint;
        out["method"] = record.method_id;
        out["timestamp"] = record.timestamp_ns;
        std::cout << out.dump(2) << '\n';
      }
    }
  } catch (const mcdm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return mcdm::kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return mcdm::kExitInputError;
  }
  return 0;
}
