// Python bindings for the decision engine. Structured values cross the
// boundary as plain dicts/lists mirroring the file formats, so the Python
// surface matches what the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "mcdm/pipeline.hpp"

namespace py = pybind11;
using mcdm::json;

namespace {

json to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) {
    json arr = json::array();
    for (const auto& item : obj) arr.push_back(to_json(item));
    return arr;
  }
  if (py::isinstance<py::dict>(obj)) {
    json out = json::object();
    for (const auto& item : obj.cast<py::dict>())
      out[py::str(item.first).cast<std::string>()] = to_json(item.second);
    return out;
  }
  throw py::type_error("unsupported value type for a document field");
}

py::object to_python(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items())
        out[py::str(key)] = to_python(value);
      return out;
    }
    default: return py::none();
  }
}

mcdm::DecisionSituation situation_from(const py::dict& situation) {
  return mcdm::validate_situation(
      mcdm::situation_from_json(to_json(situation)));
}

mcdm::Registry registry_from(const py::object& registry) {
  if (registry.is_none()) return mcdm::Registry::builtin();
  return mcdm::registry_from_json(to_json(registry));
}

mcdm::PairwiseMatrix matrix_from(const std::vector<std::vector<double>>& rows) {
  return mcdm::PairwiseMatrix::from_rows(rows);
}

std::map<mcdm::ReqAttribute, double> l2_weights_from(const py::dict& weights) {
  std::map<mcdm::ReqAttribute, double> out;
  for (const auto& item : weights) {
    const std::string name = py::str(item.first).cast<std::string>();
    const auto attribute = mcdm::attribute_from_name(name);
    if (!attribute)
      throw py::value_error("unknown requirement attribute '" + name + "'");
    out[*attribute] = item.second.cast<double>();
  }
  return out;
}

void register_error(py::module_& m) {
  static py::exception<mcdm::Error> exc(m, "McdmError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const mcdm::Error& e) {
      PyErr_SetString(exc.ptr(), e.what());
    }
  });
}

}  // namespace

PYBIND11_MODULE(_mcdm, m) {
  m.doc() = "multicriteria decision engine";
  register_error(m);

  m.def(
      "screen_dm_point",
      [](const std::string& guidance, bool offers_arguments,
         bool offers_prioritization) {
        mcdm::DmPointScreen screen;
        screen.guidance_form = mcdm::guidance_form_from(guidance);
        screen.offers_arguments = offers_arguments;
        screen.offers_prioritization = offers_prioritization;
        const mcdm::ScreenVerdict verdict = mcdm::screen_dm_point(screen);
        py::dict out;
        out["is_dm_point"] = verdict.is_dm_point;
        out["needs_criteria_definition"] = verdict.needs_criteria_definition;
        return out;
      },
      py::arg("guidance"), py::arg("offers_arguments"),
      py::arg("offers_prioritization"),
      "Screen a process task for a decision point.");

  m.def(
      "classify_typology",
      [](int criteria_count, int dm_count) {
        const mcdm::TypologyVerdict verdict =
            mcdm::classify_typology(criteria_count, dm_count);
        py::dict out;
        out["criteria_axis"] =
            verdict.criteria_axis == mcdm::CriteriaAxis::Multi ? "multi"
                                                               : "mono";
        out["dm_axis"] =
            verdict.dm_axis == mcdm::DmAxis::Multiple ? "multiple" : "single";
        out["mc_eligible"] = verdict.mc_eligible;
        return out;
      },
      py::arg("criteria_count"), py::arg("dm_count"));

  m.def(
      "validate_situation",
      [](const py::dict& situation) {
        return to_python(mcdm::situation_to_json(situation_from(situation)));
      },
      py::arg("situation"),
      "Validate a situation document and return it with normalized weights.");

  m.def(
      "bucketize_count",
      [](int n, int small_max, int medium_max) {
        return mcdm::to_string(
            mcdm::bucketize_count(n, {small_max, medium_max}));
      },
      py::arg("n"), py::arg("small_max") = 7, py::arg("medium_max") = 20);

  m.def(
      "derive_requirements",
      [](const py::dict& situation, const py::object& usage, int small_max,
         int medium_max) {
        mcdm::UsagePreferences preferences;
        std::optional<bool> measure_scale;
        if (!usage.is_none()) {
          const json j = to_json(usage);
          preferences = mcdm::usage_from_json(j);
          if (j.contains("measure_scale_needed"))
            measure_scale = j["measure_scale_needed"].get<bool>();
        }
        const mcdm::MethodRequirements requirements =
            mcdm::derive_requirements(situation_from(situation), preferences,
                                      {small_max, medium_max}, measure_scale);
        return to_python(mcdm::requirements_to_json(requirements));
      },
      py::arg("situation"), py::arg("usage") = py::none(),
      py::arg("small_max") = 7, py::arg("medium_max") = 20);

  m.def("builtin_interfaces", [] {
    return to_python(mcdm::registry_to_json(mcdm::Registry::builtin()));
  });

  m.def(
      "match_methods",
      [](const py::dict& requirements, const py::object& registry) {
        const mcdm::SelectionReport report = mcdm::match_methods(
            mcdm::requirements_from_json(to_json(requirements)),
            registry.is_none() ? mcdm::Registry::builtin_crisp()
                               : mcdm::registry_from_json(to_json(registry)));
        return to_python(mcdm::selection_report_to_json(report));
      },
      py::arg("requirements"), py::arg("registry") = py::none(),
      "Match a requirements document against a registry (default: the "
      "builtin crisp families).");

  m.def(
      "select_by_weighting",
      [](const py::dict& requirements, const py::dict& weights,
         const py::object& registry) {
        mcdm::SelectionReport report = mcdm::match_methods(
            mcdm::requirements_from_json(to_json(requirements)),
            registry.is_none() ? mcdm::Registry::builtin_crisp()
                               : mcdm::registry_from_json(to_json(registry)));
        mcdm::select_by_weighting(report, l2_weights_from(weights));
        return to_python(mcdm::selection_report_to_json(report));
      },
      py::arg("requirements"), py::arg("l2_weights"),
      py::arg("registry") = py::none());

  m.def(
      "saw_rank",
      [](const py::dict& situation, bool qualitative_rank_encode) {
        mcdm::SawOptions options;
        options.qualitative_rank_encode = qualitative_rank_encode;
        return to_python(mcdm::ranking_to_json(
            mcdm::saw_rank(situation_from(situation), options)));
      },
      py::arg("situation"), py::arg("qualitative_rank_encode") = false);

  m.def(
      "minmax_normalize",
      [](const std::vector<double>& column, const std::string& direction) {
        const mcdm::NormalizedColumn normalized = mcdm::minmax_normalize(
            column, mcdm::direction_from(direction));
        return py::make_tuple(normalized.values, normalized.degenerate);
      },
      py::arg("column"), py::arg("direction") = "maximize");

  m.def(
      "ahp_priorities",
      [](const std::vector<std::vector<double>>& matrix,
         const std::string& mode) {
        const mcdm::PriorityResult result = mcdm::ahp_priorities(
            matrix_from(matrix), mode == "eigenvector"
                                     ? mcdm::PriorityMode::Eigenvector
                                     : mcdm::PriorityMode::GeometricMean);
        return py::make_tuple(result.weights, result.lambda_max);
      },
      py::arg("matrix"), py::arg("mode") = "geometric_mean");

  m.def(
      "ahp_consistency",
      [](const std::vector<std::vector<double>>& matrix) {
        const mcdm::ConsistencyResult result =
            mcdm::ahp_consistency(matrix_from(matrix));
        return py::make_tuple(result.ci, result.cr);
      },
      py::arg("matrix"));

  m.def(
      "promethee_flows",
      [](const py::dict& situation, const py::object& preferences) {
        const mcdm::DecisionSituation validated = situation_from(situation);
        mcdm::MethodConfig config;
        if (!preferences.is_none())
          config = mcdm::method_config_from_json(
              json{{"preference_functions", to_json(preferences)}}, validated);
        std::vector<mcdm::PreferenceFunction> specs;
        for (const auto& criterion : validated.criteria) {
          auto it = config.preference_functions.find(criterion.name);
          specs.push_back(it == config.preference_functions.end()
                              ? mcdm::PreferenceFunction::usual()
                              : it->second);
        }
        const mcdm::Flows flows = mcdm::promethee_flows(validated, specs);
        py::dict out;
        out["alternatives"] = flows.alternatives;
        out["plus"] = flows.plus;
        out["minus"] = flows.minus;
        out["net"] = flows.net;
        return out;
      },
      py::arg("situation"), py::arg("preference_functions") = py::none());

  m.def(
      "apply_method",
      [](const py::dict& situation, const std::string& method_id,
         const py::object& config, const py::object& registry) {
        const mcdm::DecisionSituation validated = situation_from(situation);
        mcdm::MethodConfig method_config;
        if (!config.is_none())
          method_config =
              mcdm::method_config_from_json(to_json(config), validated);
        return to_python(mcdm::result_to_json(mcdm::apply_method(
            validated, method_id, method_config, registry_from(registry))));
      },
      py::arg("situation"), py::arg("method_id"),
      py::arg("config") = py::none(), py::arg("registry") = py::none());

  m.def(
      "run",
      [](const std::string& situation_path, const py::object& usage_path,
         const py::object& registry_path, const std::string& strategy,
         const py::object& l2_weights_path,
         const std::vector<std::pair<std::string, std::string>>& flashbacks,
         const py::object& method_config_path, const std::string& output_dir,
         const py::object& experience_path, int small_max, int medium_max) {
        mcdm::RunPlan plan;
        plan.situation_path = situation_path;
        if (!usage_path.is_none())
          plan.usage_path = usage_path.cast<std::string>();
        if (!registry_path.is_none())
          plan.registry_path = registry_path.cast<std::string>();
        if (strategy == "weighted")
          plan.strategy = mcdm::Strategy::Weighted;
        else if (strategy == "experience")
          plan.strategy = mcdm::Strategy::Experience;
        if (!l2_weights_path.is_none())
          plan.l2_weights_path = l2_weights_path.cast<std::string>();
        for (const auto& [kind, argument] : flashbacks)
          plan.flashback_policy.push_back(
              {kind == "extend"
                   ? mcdm::FlashbackAction::Kind::ExtendRegistry
                   : mcdm::FlashbackAction::Kind::RelaxRequirement,
               argument});
        if (!method_config_path.is_none())
          plan.method_config_path = method_config_path.cast<std::string>();
        plan.output_dir = output_dir;
        if (!experience_path.is_none())
          plan.experience_path = experience_path.cast<std::string>();
        plan.thresholds = {small_max, medium_max};
        const mcdm::RunReport report = mcdm::run(plan);
        return to_python(mcdm::run_report_to_json(report, plan));
      },
      py::arg("situation_path"), py::arg("usage_path") = py::none(),
      py::arg("registry_path") = py::none(), py::arg("strategy") = "search",
      py::arg("l2_weights_path") = py::none(),
      py::arg("flashbacks") =
          std::vector<std::pair<std::string, std::string>>{},
      py::arg("method_config_path") = py::none(), py::arg("output_dir") = "",
      py::arg("experience_path") = py::none(), py::arg("small_max") = 7,
      py::arg("medium_max") = 20,
      "Execute the full pipeline over document files; returns the run "
      "report.");

  m.def(
      "emit_matrix",
      [](const py::dict& report, bool full_grid) {
        mcdm::SelectionReport selection;
        const json j = to_json(report);
        const json& body = j.contains("selection") ? j["selection"] : j;
        selection.method_ids =
            body.at("methods").get<std::vector<std::string>>();
        for (const auto& attribute : mcdm::kAllReqAttributes) {
          const std::string name{mcdm::attribute_name(attribute)};
          if (body.at("matrix").contains(name))
            selection.matrix.emplace_back(
                attribute, body["matrix"][name].get<std::vector<int>>());
        }
        selection.candidates =
            body.at("candidates").get<std::vector<std::string>>();
        return mcdm::emit_matrix(selection, full_grid);
      },
      py::arg("report"), py::arg("full_grid") = false);

  m.def(
      "fingerprint",
      [](const py::dict& requirements) {
        return mcdm::fingerprint(
            mcdm::requirements_from_json(to_json(requirements)));
      },
      py::arg("requirements"),
      "Canonical fingerprint of a requirements document.");

  m.def(
      "validate_result",
      [](const py::dict& result, const py::dict& situation) {
        const mcdm::DecisionSituation validated = situation_from(situation);
        const json j = to_json(result);
        mcdm::DecisionResult decision;
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "choice") {
          decision.value = mcdm::ChoiceSubset{
              j.at("choice").get<std::vector<std::string>>()};
        } else if (kind == "ranking") {
          mcdm::Ranking ranking;
          ranking.alternatives =
              j.at("ranking").at("alternatives").get<std::vector<std::string>>();
          ranking.scores = j.at("ranking").at("scores").get<std::vector<double>>();
          decision.value = std::move(ranking);
        } else {
          mcdm::SortingAssignment sorting;
          for (const auto& [alt, cat] : j.at("assignment").items())
            sorting.assignment[alt] = cat.get<std::string>();
          decision.value = std::move(sorting);
        }
        const mcdm::ValidationVerdict verdict =
            mcdm::validate_result(decision, validated, {});
        py::dict out;
        out["ok"] = verdict.ok;
        if (verdict.flashback)
          out["flashback"] = mcdm::to_string(*verdict.flashback);
        return out;
      },
      py::arg("result"), py::arg("situation"));
}
