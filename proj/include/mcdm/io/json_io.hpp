#pragma once

#include <filesystem>
#include <nlohmann/json_fwd.hpp>

#include "mcdm/experience.hpp"
#include "mcdm/methods/apply.hpp"

// JSON encodings for every documented file format and report type. Field
// names mirror the type definitions; enums serialize as lowercase strings.

namespace mcdm {

using json = nlohmann::json;

// --- enum <-> string ---
std::string to_string(ProblemKind v);
std::string to_string(Direction v);
std::string to_string(DataType v);
std::string to_string(SetNature v);
std::string to_string(GuidanceForm v);
std::string to_string(CountBucket v);
std::string to_string(Notation v);
std::string to_string(EasinessLevel v);
std::string to_string(SkillLevel v);
std::string to_string(WeightingType v);
std::string to_string(Strategy v);
std::string to_string(PipelineStep v);

ProblemKind problem_kind_from(const std::string& s);
Direction direction_from(const std::string& s);
DataType data_type_from(const std::string& s);
SetNature set_nature_from(const std::string& s);
GuidanceForm guidance_form_from(const std::string& s);
CountBucket count_bucket_from(const std::string& s);
Notation notation_from(const std::string& s);
EasinessLevel easiness_from(const std::string& s);
SkillLevel skill_from(const std::string& s);
WeightingType weighting_type_from(const std::string& s);

// --- type <-> json ---
json situation_to_json(const DecisionSituation& situation);
DecisionSituation situation_from_json(const json& j);

json usage_to_json(const UsagePreferences& usage);
UsagePreferences usage_from_json(const json& j);

json requirements_to_json(const MethodRequirements& requirements);
MethodRequirements requirements_from_json(const json& j);

json interface_to_json(const MethodInterface& interface);
MethodInterface interface_from_json(const json& j);

json registry_to_json(const Registry& registry);
Registry registry_from_json(const json& j);

json ranking_to_json(const Ranking& ranking);
json result_to_json(const DecisionResult& result);
json selection_report_to_json(const SelectionReport& report);

json method_config_to_json(const MethodConfig& config);
MethodConfig method_config_from_json(const json& j,
                                     const DecisionSituation& situation);

// --- file loaders (throw ParseError with file context) ---
json load_json_file(const std::filesystem::path& path);

struct LoadedSituation {
  DecisionSituation situation;  // not yet validated
};
LoadedSituation load_situation(const std::filesystem::path& path);

struct LoadedUsage {
  UsagePreferences usage;
  // Optional operator declaration carried alongside usage preferences.
  std::optional<bool> measure_scale_needed;
};
LoadedUsage load_usage(const std::filesystem::path& path);

std::map<ReqAttribute, double> load_l2_weights(
    const std::filesystem::path& path);
Registry load_registry(const std::filesystem::path& path);
MethodConfig load_method_config(const std::filesystem::path& path,
                                const DecisionSituation& situation);

}  // namespace mcdm
