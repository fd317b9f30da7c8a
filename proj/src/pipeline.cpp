#include "mcdm/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mcdm {

std::string emit_matrix(const SelectionReport& report, bool full_grid) {
  std::ostringstream out;
  out << "attribute";
  for (const auto& method_id : report.method_ids) out << ',' << method_id;
  out << '\n';

  auto row_for = [&](ReqAttribute attribute) -> const std::vector<int>* {
    for (const auto& [row_attribute, cells] : report.matrix)
      if (row_attribute == attribute) return &cells;
    return nullptr;
  };

  for (ReqAttribute attribute : kAllReqAttributes) {
    const std::vector<int>* cells = row_for(attribute);
    if (!cells && !full_grid) continue;
    out << attribute_name(attribute);
    for (std::size_t i = 0; i < report.method_ids.size(); ++i) {
      out << ',';
      if (cells) out << (*cells)[i];
    }
    out << '\n';
  }

  out << "candidate";
  for (const auto& method_id : report.method_ids) {
    const bool is_candidate =
        std::find(report.candidates.begin(), report.candidates.end(),
                  method_id) != report.candidates.end();
    out << ',' << (is_candidate ? 1 : 0);
  }
  out << '\n';
  return out.str();
}

namespace {

json action_to_json(const FlashbackAction& action) {
  return json{{"kind", action.kind == FlashbackAction::Kind::RelaxRequirement
                           ? "relax_requirement"
                           : "extend_registry"},
              {"argument", action.argument}};
}

json plan_to_json(const RunPlan& plan) {
  json j;
  j["situation"] = plan.situation_path.string();
  if (plan.usage_path) j["usage"] = plan.usage_path->string();
  j["registry"] =
      plan.registry_path ? plan.registry_path->string() : "builtin";
  j["strategy"] = to_string(plan.strategy);
  if (plan.l2_weights_path) j["l2_weights"] = plan.l2_weights_path->string();
  json policy = json::array();
  for (const auto& action : plan.flashback_policy)
    policy.push_back(action_to_json(action));
  j["flashback_policy"] = std::move(policy);
  if (plan.method_config_path)
    j["method_config"] = plan.method_config_path->string();
  j["thresholds"] = json{{"small_max", plan.thresholds.small_max},
                         {"medium_max", plan.thresholds.medium_max}};
  return j;
}

void unexpress(MethodRequirements& requirements, ReqAttribute attribute) {
  switch (attribute) {
    case ReqAttribute::Problem: requirements.problem.reset(); break;
    case ReqAttribute::Count: requirements.count_bucket.reset(); break;
    case ReqAttribute::Nature: requirements.nature.reset(); break;
    case ReqAttribute::Incompatibility:
      requirements.incompatibility.reset();
      break;
    case ReqAttribute::DataType: requirements.data_type_required.reset(); break;
    case ReqAttribute::Scale: requirements.measure_scale_needed.reset(); break;
    case ReqAttribute::Weighting: requirements.weighting_type.reset(); break;
    case ReqAttribute::Tool: requirements.usage.tool_required.reset(); break;
    case ReqAttribute::Easiness:
      requirements.usage.easiness_required.reset();
      break;
    case ReqAttribute::Skills:
      requirements.usage.skills_available.reset();
      break;
  }
}

std::vector<ReqAttribute> expressed_of(const SelectionReport& report) {
  std::vector<ReqAttribute> expressed;
  for (const auto& [attribute, cells] : report.matrix)
    expressed.push_back(attribute);
  return expressed;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out.is_open())
    fail(Errc::StoreUnwritable, "cannot write " + path.string());
  out << text;
}

}  // namespace

json run_report_to_json(const RunReport& report, const RunPlan& plan) {
  json j;
  j["plan"] = plan_to_json(plan);
  j["derived_requirements"] =
      requirements_to_json(report.derived_requirements);
  json iterations = json::array();
  for (const auto& iteration : report.iterations) {
    json it;
    it["registry_snapshot_id"] = iteration.registry_snapshot_id;
    json expressed = json::array();
    for (ReqAttribute attribute : iteration.expressed)
      expressed.push_back(std::string(attribute_name(attribute)));
    it["expressed"] = std::move(expressed);
    it["candidates"] = iteration.candidates;
    if (iteration.applied) it["flashback"] = action_to_json(*iteration.applied);
    iterations.push_back(std::move(it));
  }
  j["iterations"] = std::move(iterations);
  j["selection"] = selection_report_to_json(report.selection);
  if (report.result) j["result"] = result_to_json(*report.result);
  if (report.validation) {
    json validation;
    validation["ok"] = report.validation->ok;
    if (report.validation->flashback)
      validation["flashback"] = to_string(*report.validation->flashback);
    j["validation"] = std::move(validation);
  }
  j["exit_code"] = report.exit_code;
  if (!report.error.empty()) j["error"] = report.error;
  return j;
}

RunReport run(const RunPlan& plan) {
  RunReport report;

  DecisionSituation situation;
  UsagePreferences usage;
  std::optional<bool> measure_scale_declared;
  Registry registry;
  MethodConfig config;
  try {
    situation = validate_situation(load_situation(plan.situation_path).situation);
    if (plan.usage_path) {
      LoadedUsage loaded = load_usage(*plan.usage_path);
      usage = loaded.usage;
      measure_scale_declared = loaded.measure_scale_needed;
    }
    registry = plan.registry_path ? load_registry(*plan.registry_path)
                                  : Registry::builtin_crisp();
    if (plan.method_config_path)
      config = load_method_config(*plan.method_config_path, situation);
    report.derived_requirements = derive_requirements(
        situation, usage, plan.thresholds, measure_scale_declared);
  } catch (const Error& e) {
    report.exit_code = kExitInputError;
    report.error = e.what();
    return report;
  }

  MethodRequirements requirements = report.derived_requirements;

  // Iterate: match, and on an empty candidate set consume the next
  // flashback action. Relaxing never shrinks the candidate set; extending
  // never drops existing candidates.
  std::size_t next_action = 0;
  std::optional<FlashbackAction> last_applied;
  int snapshot_counter = 0;
  while (true) {
    report.selection = match_methods(requirements, registry);
    IterationRecord iteration;
    iteration.registry_snapshot_id = "r" + std::to_string(snapshot_counter);
    iteration.expressed = expressed_of(report.selection);
    iteration.candidates = report.selection.candidates;
    iteration.applied = last_applied;
    report.iterations.push_back(std::move(iteration));

    if (!report.selection.candidates.empty()) break;
    if (next_action >= plan.flashback_policy.size()) break;

    const FlashbackAction& action = plan.flashback_policy[next_action++];
    try {
      if (action.kind == FlashbackAction::Kind::RelaxRequirement) {
        const auto attribute = attribute_from_name(action.argument);
        if (!attribute)
          fail(Errc::ParseError,
               "unknown requirement attribute '" + action.argument + "'");
        unexpress(requirements, *attribute);
      } else {
        if (action.argument == "fuzzy")
          registry.append(Registry::builtin_fuzzy());
        else
          for (const auto& entry :
               load_registry(action.argument).entries())
            registry.append(entry);
        ++snapshot_counter;
      }
    } catch (const Error& e) {
      report.exit_code = kExitInputError;
      report.error = e.what();
      return report;
    }
    last_applied = action;
  }

  auto finish = [&](int code, const std::string& error) {
    report.exit_code = code;
    report.error = error;
    if (!plan.output_dir.empty()) {
      std::filesystem::create_directories(plan.output_dir);
      write_file(plan.output_dir / "matrix.csv", emit_matrix(report.selection));
      write_file(plan.output_dir / "report.json",
                 run_report_to_json(report, plan).dump(2) + "\n");
    }
    return report;
  };

  if (report.selection.candidates.empty())
    return finish(kExitNoMethod, "no method matches after all flashbacks");

  // Choose among the candidates with the requested strategy.
  try {
    switch (plan.strategy) {
      case Strategy::Experience: {
        const char* env = std::getenv("MCDM_EXPERIENCE_PATH");
        std::filesystem::path store_path =
            plan.experience_path
                ? *plan.experience_path
                : (env ? std::filesystem::path(env) : std::filesystem::path());
        if (store_path.empty())
          fail(Errc::StoreUnreadable,
               "experience strategy needs a store path (flag or "
               "MCDM_EXPERIENCE_PATH)");
        ExperienceStore store(store_path);
        const auto remembered = store.lookup(report.derived_requirements);
        const auto& candidates = report.selection.candidates;
        if (remembered && std::find(candidates.begin(), candidates.end(),
                                    *remembered) != candidates.end()) {
          report.selection.chosen = *remembered;
          report.selection.strategy_used = Strategy::Experience;
          break;
        }
        // No exact match recorded: fall through to search.
        report.selection.chosen = candidates.front();
        report.selection.strategy_used = Strategy::Search;
        break;
      }
      case Strategy::Weighted: {
        if (!plan.l2_weights_path)
          fail(Errc::MissingConfig,
               "weighted strategy needs an L2 weights file");
        select_by_weighting(report.selection,
                            load_l2_weights(*plan.l2_weights_path));
        break;
      }
      case Strategy::Search: {
        // One candidate is the answer; several keep registry order, first
        // wins, and the full candidate set stays in the report.
        report.selection.chosen = report.selection.candidates.front();
        report.selection.strategy_used = Strategy::Search;
        break;
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::TieNotResolvable)
      return finish(kExitTie, e.what());
    return finish(kExitInputError, e.what());
  }

  // Apply the chosen method and validate the result shape.
  try {
    report.result =
        apply_method(situation, *report.selection.chosen, config, registry);
  } catch (const Error& e) {
    return finish(kExitInputError, e.what());
  }

  report.validation =
      validate_result(*report.result, situation, requirements);
  if (!report.validation->ok)
    return finish(kExitValidationFlashback,
                  "result failed validation; revisit " +
                      to_string(*report.validation->flashback));

  return finish(kExitOk, "");
}

}  // namespace mcdm
