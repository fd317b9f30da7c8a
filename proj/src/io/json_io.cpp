#include "mcdm/io/json_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "mcdm/methods/ahp.hpp"

namespace mcdm {

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  fail(Errc::ParseError, message);
}

template <typename T>
T enum_from(const std::string& s,
            std::initializer_list<std::pair<const char*, T>> table,
            const char* what) {
  for (const auto& [name, value] : table)
    if (s == name) return value;
  parse_fail("unknown " + std::string(what) + " '" + s + "'");
}

}  // namespace

std::string to_string(ProblemKind v) {
  switch (v) {
    case ProblemKind::Choice: return "choice";
    case ProblemKind::Ranking: return "ranking";
    case ProblemKind::Sorting: return "sorting";
  }
  return "?";
}
ProblemKind problem_kind_from(const std::string& s) {
  return enum_from<ProblemKind>(s,
                                {{"choice", ProblemKind::Choice},
                                 {"ranking", ProblemKind::Ranking},
                                 {"sorting", ProblemKind::Sorting}},
                                "problem kind");
}

std::string to_string(Direction v) {
  return v == Direction::Maximize ? "maximize" : "minimize";
}
Direction direction_from(const std::string& s) {
  return enum_from<Direction>(
      s, {{"maximize", Direction::Maximize}, {"minimize", Direction::Minimize}},
      "direction");
}

std::string to_string(DataType v) {
  switch (v) {
    case DataType::Quantitative: return "quantitative";
    case DataType::Qualitative: return "qualitative";
    case DataType::Fuzzy: return "fuzzy";
  }
  return "?";
}
DataType data_type_from(const std::string& s) {
  return enum_from<DataType>(s,
                             {{"quantitative", DataType::Quantitative},
                              {"qualitative", DataType::Qualitative},
                              {"fuzzy", DataType::Fuzzy}},
                             "data type");
}

std::string to_string(SetNature v) {
  return v == SetNature::Discrete ? "discrete" : "continuous";
}
SetNature set_nature_from(const std::string& s) {
  return enum_from<SetNature>(
      s, {{"discrete", SetNature::Discrete}, {"continuous", SetNature::Continuous}},
      "set nature");
}

std::string to_string(GuidanceForm v) {
  return v == GuidanceForm::Linear ? "linear" : "tree";
}
GuidanceForm guidance_form_from(const std::string& s) {
  return enum_from<GuidanceForm>(
      s, {{"linear", GuidanceForm::Linear}, {"tree", GuidanceForm::Tree}},
      "guidance form");
}

std::string to_string(CountBucket v) {
  switch (v) {
    case CountBucket::Small: return "small";
    case CountBucket::Medium: return "medium";
    case CountBucket::Great: return "great";
  }
  return "?";
}
CountBucket count_bucket_from(const std::string& s) {
  return enum_from<CountBucket>(s,
                                {{"small", CountBucket::Small},
                                 {"medium", CountBucket::Medium},
                                 {"great", CountBucket::Great}},
                                "count bucket");
}

std::string to_string(Notation v) {
  switch (v) {
    case Notation::UtilityFunction: return "utility_function";
    case Notation::WeightedSum: return "weighted_sum";
    case Notation::Textual: return "textual";
  }
  return "?";
}
Notation notation_from(const std::string& s) {
  return enum_from<Notation>(s,
                             {{"utility_function", Notation::UtilityFunction},
                              {"weighted_sum", Notation::WeightedSum},
                              {"textual", Notation::Textual}},
                             "notation");
}

std::string to_string(EasinessLevel v) {
  switch (v) {
    case EasinessLevel::Easy: return "easy";
    case EasinessLevel::Medium: return "medium";
    case EasinessLevel::Difficult: return "difficult";
  }
  return "?";
}
EasinessLevel easiness_from(const std::string& s) {
  return enum_from<EasinessLevel>(s,
                                  {{"easy", EasinessLevel::Easy},
                                   {"medium", EasinessLevel::Medium},
                                   {"difficult", EasinessLevel::Difficult}},
                                  "easiness level");
}

std::string to_string(SkillLevel v) {
  switch (v) {
    case SkillLevel::Weak: return "weak";
    case SkillLevel::Medium: return "medium";
    case SkillLevel::Strong: return "strong";
  }
  return "?";
}
SkillLevel skill_from(const std::string& s) {
  return enum_from<SkillLevel>(s,
                               {{"weak", SkillLevel::Weak},
                                {"medium", SkillLevel::Medium},
                                {"strong", SkillLevel::Strong}},
                               "skill level");
}

std::string to_string(WeightingType v) {
  return v == WeightingType::Simple ? "simple" : "interdependent";
}
WeightingType weighting_type_from(const std::string& s) {
  return enum_from<WeightingType>(s,
                                  {{"simple", WeightingType::Simple},
                                   {"interdependent", WeightingType::Interdependent}},
                                  "weighting type");
}

std::string to_string(Strategy v) {
  switch (v) {
    case Strategy::Search: return "search";
    case Strategy::Weighted: return "weighted";
    case Strategy::Experience: return "experience";
  }
  return "?";
}

std::string to_string(PipelineStep v) {
  return v == PipelineStep::RequirementIdentification
             ? "requirement_identification"
             : "method_application";
}

// --- situation ---

namespace {

json cell_to_json(const PerformanceValue& value) {
  if (const double* x = std::get_if<double>(&value)) return *x;
  if (const std::string* s = std::get_if<std::string>(&value)) return *s;
  const auto& t = std::get<FuzzyNumber>(value);
  return json::array({t.l, t.m, t.u});
}

PerformanceValue cell_from_json(const json& j, DataType column_type) {
  if (j.is_number()) {
    // A bare number in a fuzzy column reads as a crisp triple.
    if (column_type == DataType::Fuzzy) {
      const double x = j.get<double>();
      return FuzzyNumber{x, x, x};
    }
    return j.get<double>();
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && j.size() == 3)
    return FuzzyNumber{j[0].get<double>(), j[1].get<double>(),
                       j[2].get<double>()};
  parse_fail("performance cells are numbers, labels, or [l, m, u] triples");
}

}  // namespace

json situation_to_json(const DecisionSituation& situation) {
  json j;
  j["problem"] = to_string(situation.problem);
  j["alternatives"] = situation.alternatives;
  j["alternatives_nature"] = to_string(situation.alternatives_nature);
  if (situation.incompatibility_present)
    j["incompatibility_present"] = *situation.incompatibility_present;
  j["decision_maker_count"] = situation.decision_maker_count;
  if (situation.sorting_categories)
    j["sorting_categories"] = *situation.sorting_categories;

  json criteria = json::array();
  for (const auto& criterion : situation.criteria) {
    json c;
    c["name"] = criterion.name;
    c["direction"] = to_string(criterion.direction);
    c["data_type"] = to_string(criterion.data_type);
    if (criterion.scale) c["scale"] = *criterion.scale;
    if (situation.weights_origin != WeightOrigin::Unspecified)
      c["weight"] = criterion.weight;
    criteria.push_back(std::move(c));
  }
  j["criteria"] = std::move(criteria);
  if (situation.weights_origin == WeightOrigin::PairwiseDerived)
    j["weights_derived_from_pairwise"] = true;

  json rows = json::array();
  for (const auto& row : situation.performance) {
    json cells = json::array();
    for (const auto& value : row) cells.push_back(cell_to_json(value));
    rows.push_back(std::move(cells));
  }
  j["performance"] = std::move(rows);
  return j;
}

DecisionSituation situation_from_json(const json& j) {
  if (!j.is_object()) parse_fail("situation document must be an object");
  DecisionSituation situation;
  try {
    situation.problem = problem_kind_from(j.at("problem").get<std::string>());
    situation.alternatives =
        j.at("alternatives").get<std::vector<std::string>>();
    if (j.contains("alternatives_nature"))
      situation.alternatives_nature =
          set_nature_from(j["alternatives_nature"].get<std::string>());
    if (j.contains("incompatibility_present"))
      situation.incompatibility_present =
          j["incompatibility_present"].get<bool>();
    if (j.contains("decision_maker_count"))
      situation.decision_maker_count = j["decision_maker_count"].get<int>();
    if (j.contains("sorting_categories"))
      situation.sorting_categories =
          j["sorting_categories"].get<std::vector<std::string>>();

    bool any_weight = false;
    for (const auto& c : j.at("criteria")) {
      Criterion criterion;
      criterion.name = c.at("name").get<std::string>();
      criterion.direction = direction_from(c.at("direction").get<std::string>());
      criterion.data_type = data_type_from(c.at("data_type").get<std::string>());
      if (c.contains("scale"))
        criterion.scale = c["scale"].get<std::vector<std::string>>();
      if (c.contains("weight")) {
        criterion.weight = c["weight"].get<double>();
        any_weight = true;
      }
      situation.criteria.push_back(std::move(criterion));
    }

    const bool pairwise = j.contains("criteria_weight_matrix");
    if (any_weight && pairwise)
      parse_fail("give either per-criterion weights or a pairwise matrix");
    if (any_weight) {
      for (const auto& c : j.at("criteria"))
        if (!c.contains("weight"))
          parse_fail("either every criterion carries a weight or none does");
      situation.weights_origin =
          j.value("weights_derived_from_pairwise", false)
              ? WeightOrigin::PairwiseDerived
              : WeightOrigin::Direct;
    } else if (pairwise) {
      auto rows =
          j["criteria_weight_matrix"].get<std::vector<std::vector<double>>>();
      if (rows.size() != situation.criteria.size())
        parse_fail("criteria_weight_matrix must match the criterion count");
      const PriorityResult priorities =
          ahp_priorities(PairwiseMatrix::from_rows(std::move(rows)));
      for (std::size_t i = 0; i < situation.criteria.size(); ++i)
        situation.criteria[i].weight = priorities.weights[i];
      situation.weights_origin = WeightOrigin::PairwiseDerived;
    } else {
      // No declaration: equal weights, weighting type stays unexpressed.
      for (auto& criterion : situation.criteria) criterion.weight = 1.0;
      situation.weights_origin = WeightOrigin::Unspecified;
    }

    for (const auto& row : j.at("performance")) {
      std::vector<PerformanceValue> cells;
      for (std::size_t col = 0; col < row.size(); ++col) {
        const DataType column_type = col < situation.criteria.size()
                                         ? situation.criteria[col].data_type
                                         : DataType::Quantitative;
        cells.push_back(cell_from_json(row[col], column_type));
      }
      situation.performance.push_back(std::move(cells));
    }
  } catch (const json::exception& e) {
    parse_fail(std::string("bad situation document: ") + e.what());
  }
  return situation;
}

// --- usage ---

json usage_to_json(const UsagePreferences& usage) {
  json j = json::object();
  if (usage.tool_required) j["tool_required"] = *usage.tool_required;
  if (usage.notation_preference)
    j["notation_preference"] = to_string(*usage.notation_preference);
  if (usage.easiness_required)
    j["easiness_required"] = to_string(*usage.easiness_required);
  if (usage.skills_available)
    j["skills_available"] = to_string(*usage.skills_available);
  return j;
}

UsagePreferences usage_from_json(const json& j) {
  UsagePreferences usage;
  if (!j.is_object()) parse_fail("usage document must be an object");
  try {
    if (j.contains("tool_required"))
      usage.tool_required = j["tool_required"].get<bool>();
    if (j.contains("notation_preference"))
      usage.notation_preference =
          notation_from(j["notation_preference"].get<std::string>());
    if (j.contains("easiness_required"))
      usage.easiness_required =
          easiness_from(j["easiness_required"].get<std::string>());
    if (j.contains("skills_available"))
      usage.skills_available =
          skill_from(j["skills_available"].get<std::string>());
  } catch (const json::exception& e) {
    parse_fail(std::string("bad usage document: ") + e.what());
  }
  return usage;
}

// --- requirements ---

json requirements_to_json(const MethodRequirements& r) {
  json j = json::object();
  if (r.problem) j["problem"] = to_string(*r.problem);
  if (r.count_bucket) j["count_bucket"] = to_string(*r.count_bucket);
  if (r.nature) j["nature"] = to_string(*r.nature);
  if (r.incompatibility) j["incompatibility"] = *r.incompatibility;
  if (r.data_type_required) {
    json types = json::array();
    for (DataType dt : *r.data_type_required) types.push_back(to_string(dt));
    j["data_type_required"] = std::move(types);
  }
  if (r.measure_scale_needed)
    j["measure_scale_needed"] = *r.measure_scale_needed;
  if (r.weighting_type) j["weighting_type"] = to_string(*r.weighting_type);
  json usage = usage_to_json(r.usage);
  if (!usage.empty()) j["usage"] = std::move(usage);
  return j;
}

MethodRequirements requirements_from_json(const json& j) {
  MethodRequirements r;
  if (!j.is_object()) parse_fail("requirements document must be an object");
  try {
    if (j.contains("problem"))
      r.problem = problem_kind_from(j["problem"].get<std::string>());
    if (j.contains("count_bucket"))
      r.count_bucket = count_bucket_from(j["count_bucket"].get<std::string>());
    if (j.contains("nature"))
      r.nature = set_nature_from(j["nature"].get<std::string>());
    if (j.contains("incompatibility"))
      r.incompatibility = j["incompatibility"].get<bool>();
    if (j.contains("data_type_required")) {
      std::set<DataType> types;
      for (const auto& dt : j["data_type_required"])
        types.insert(data_type_from(dt.get<std::string>()));
      if (types.empty())
        parse_fail("data_type_required must be nonempty when expressed");
      r.data_type_required = std::move(types);
    }
    if (j.contains("measure_scale_needed"))
      r.measure_scale_needed = j["measure_scale_needed"].get<bool>();
    if (j.contains("weighting_type"))
      r.weighting_type =
          weighting_type_from(j["weighting_type"].get<std::string>());
    if (j.contains("usage")) r.usage = usage_from_json(j["usage"]);
  } catch (const json::exception& e) {
    parse_fail(std::string("bad requirements document: ") + e.what());
  }
  return r;
}

// --- interfaces / registry ---

namespace {

template <typename T>
json set_capability_to_json(const SetCapability<T>& capability) {
  if (capability.any) return "any";
  json values = json::array();
  for (const T& v : capability.values) values.push_back(to_string(v));
  return values;
}

json bool_capability_to_json(const BoolCapability& capability) {
  if (capability.any) return "any";
  return capability.value;
}

template <typename T, typename FromString>
SetCapability<T> set_capability_from_json(const json& j, FromString from) {
  if (j.is_string() && j.get<std::string>() == "any")
    return SetCapability<T>::wildcard();
  std::set<T> values;
  for (const auto& v : j) values.insert(from(v.template get<std::string>()));
  return SetCapability<T>::of(std::move(values));
}

BoolCapability bool_capability_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "any")
    return BoolCapability::wildcard();
  return BoolCapability::of(j.get<bool>());
}

}  // namespace

json interface_to_json(const MethodInterface& m) {
  json j;
  j["method_id"] = m.method_id;
  json problems = json::array();
  for (ProblemKind p : m.problems) problems.push_back(to_string(p));
  j["problems"] = std::move(problems);
  j["count_buckets"] = set_capability_to_json(m.count_buckets);
  j["natures"] = set_capability_to_json(m.natures);
  j["incompatibility_support"] =
      bool_capability_to_json(m.incompatibility_support);
  j["data_types"] = set_capability_to_json(m.data_types);
  j["measure_scale_support"] =
      bool_capability_to_json(m.measure_scale_support);
  j["weighting_types"] = set_capability_to_json(m.weighting_types);
  j["tool_available"] = bool_capability_to_json(m.tool_available);
  j["notation"] = m.notation.any ? json("any") : json(to_string(m.notation.value));
  j["easiness"] = to_string(m.easiness);
  j["skill_demand"] = to_string(m.skill_demand);
  return j;
}

MethodInterface interface_from_json(const json& j) {
  MethodInterface m;
  try {
    m.method_id = j.at("method_id").get<std::string>();
    for (const auto& p : j.at("problems"))
      m.problems.insert(problem_kind_from(p.get<std::string>()));
    m.count_buckets = set_capability_from_json<CountBucket>(
        j.at("count_buckets"), count_bucket_from);
    m.natures =
        set_capability_from_json<SetNature>(j.at("natures"), set_nature_from);
    m.incompatibility_support =
        bool_capability_from_json(j.at("incompatibility_support"));
    m.data_types =
        set_capability_from_json<DataType>(j.at("data_types"), data_type_from);
    m.measure_scale_support =
        bool_capability_from_json(j.at("measure_scale_support"));
    m.weighting_types = set_capability_from_json<WeightingType>(
        j.at("weighting_types"), weighting_type_from);
    m.tool_available = bool_capability_from_json(j.at("tool_available"));
    const json& notation = j.at("notation");
    m.notation = notation.is_string() && notation.get<std::string>() == "any"
                     ? ValueCapability<Notation>::wildcard()
                     : ValueCapability<Notation>::of(
                           notation_from(notation.get<std::string>()));
    m.easiness = easiness_from(j.at("easiness").get<std::string>());
    m.skill_demand = skill_from(j.at("skill_demand").get<std::string>());
  } catch (const json::exception& e) {
    parse_fail(std::string("bad method interface: ") + e.what());
  }
  if (m.problems.empty()) parse_fail("interface supports no problem kind");
  return m;
}

json registry_to_json(const Registry& registry) {
  json entries = json::array();
  for (const auto& entry : registry.entries())
    entries.push_back(interface_to_json(entry));
  return json{{"methods", std::move(entries)}};
}

Registry registry_from_json(const json& j) {
  std::vector<MethodInterface> entries;
  const json& list = j.is_object() && j.contains("methods") ? j["methods"] : j;
  if (!list.is_array()) parse_fail("registry document must list methods");
  for (const auto& entry : list) entries.push_back(interface_from_json(entry));
  if (entries.empty()) parse_fail("registry document lists no methods");
  return Registry(std::move(entries));
}

// --- rankings / results / reports ---

json ranking_to_json(const Ranking& ranking) {
  json j;
  j["alternatives"] = ranking.alternatives;
  j["scores"] = ranking.scores;
  json order = json::array();
  for (int index : ranking.order) order.push_back(ranking.alternatives[index]);
  j["order"] = std::move(order);
  json ties = json::array();
  for (const auto& group : ranking.tie_groups) {
    json names = json::array();
    for (int index : group) names.push_back(ranking.alternatives[index]);
    ties.push_back(std::move(names));
  }
  j["tie_groups"] = std::move(ties);
  j["partial"] = ranking.partial;
  if (ranking.partial) {
    json pairs = json::array();
    for (const auto& [a, b] : ranking.incomparable)
      pairs.push_back(json::array(
          {ranking.alternatives[a], ranking.alternatives[b]}));
    j["incomparable"] = std::move(pairs);
  }
  if (!ranking.fuzzy_scores.empty()) {
    json fuzzy = json::array();
    for (const auto& t : ranking.fuzzy_scores)
      fuzzy.push_back(json::array({t.l, t.m, t.u}));
    j["fuzzy_scores"] = std::move(fuzzy);
  }
  if (!ranking.warnings.empty()) j["warnings"] = ranking.warnings;
  return j;
}

json result_to_json(const DecisionResult& result) {
  json j;
  j["kind"] = to_string(result.kind());
  if (const auto* choice = std::get_if<ChoiceSubset>(&result.value))
    j["choice"] = choice->alternatives;
  else if (const auto* ranking = std::get_if<Ranking>(&result.value))
    j["ranking"] = ranking_to_json(*ranking);
  else
    j["assignment"] = std::get<SortingAssignment>(result.value).assignment;
  return j;
}

json selection_report_to_json(const SelectionReport& report) {
  json j;
  j["methods"] = report.method_ids;
  json matrix = json::object();
  for (const auto& [attribute, cells] : report.matrix)
    matrix[std::string(attribute_name(attribute))] = cells;
  j["matrix"] = std::move(matrix);
  j["candidates"] = report.candidates;
  if (report.chosen) j["chosen"] = *report.chosen;
  j["strategy_used"] = to_string(report.strategy_used);
  if (report.notation_note)
    j["notation_preference"] = to_string(*report.notation_note);
  if (!report.scores.empty()) j["scores"] = report.scores;
  if (report.tiebreak_note) j["tiebreak"] = *report.tiebreak_note;
  json snapshot = json::array();
  for (const auto& entry : report.registry_snapshot)
    snapshot.push_back(interface_to_json(entry));
  j["registry_snapshot"] = std::move(snapshot);
  return j;
}

// --- method configuration ---

namespace {

PreferenceFunction preference_from_json(const json& j) {
  const std::string shape = j.at("shape").get<std::string>();
  if (shape == "usual") return PreferenceFunction::usual();
  if (shape == "vshape")
    return PreferenceFunction::vshape(j.at("p").get<double>());
  if (shape == "linear")
    return PreferenceFunction::linear(j.at("q").get<double>(),
                                      j.at("p").get<double>());
  parse_fail("unknown preference shape '" + shape + "'");
}

json preference_to_json(const PreferenceFunction& f) {
  switch (f.shape) {
    case PreferenceFunction::Shape::Usual:
      return json{{"shape", "usual"}};
    case PreferenceFunction::Shape::VShape:
      return json{{"shape", "vshape"}, {"p", f.p}};
    case PreferenceFunction::Shape::Linear:
      return json{{"shape", "linear"}, {"q", f.q}, {"p", f.p}};
  }
  return {};
}

void require_criterion(const DecisionSituation& situation,
                       const std::string& name, const char* where) {
  for (const auto& criterion : situation.criteria)
    if (criterion.name == name) return;
  parse_fail(std::string(where) + " references unknown criterion '" + name +
             "'");
}

}  // namespace

json method_config_to_json(const MethodConfig& config) {
  json j;
  j["choice_k"] = config.choice_k;
  if (config.qualitative_rank_encode) j["qualitative_rank_encode"] = true;
  if (!config.preference_functions.empty()) {
    json prefs = json::object();
    for (const auto& [name, f] : config.preference_functions)
      prefs[name] = preference_to_json(f);
    j["preference_functions"] = std::move(prefs);
  }
  if (!config.sorting_thresholds.empty())
    j["sorting_thresholds"] = config.sorting_thresholds;
  if (config.criteria_matrix)
    j["criteria_matrix"] = config.criteria_matrix->rows();
  if (!config.alternative_matrices.empty()) {
    json matrices = json::object();
    for (const auto& [name, matrix] : config.alternative_matrices)
      matrices[name] = matrix.rows();
    j["alternative_matrices"] = std::move(matrices);
  }
  if (!config.utilities.empty()) {
    json utilities = json::object();
    for (const auto& [name, utility] : config.utilities) {
      json points = json::array();
      for (const auto& [x, u] : utility.breakpoints())
        points.push_back(json::array({x, u}));
      utilities[name] = std::move(points);
    }
    j["utilities"] = std::move(utilities);
  }
  j["maut_form"] =
      config.maut_form == MautForm::Additive ? "additive" : "multiplicative";
  return j;
}

MethodConfig method_config_from_json(const json& j,
                                     const DecisionSituation& situation) {
  MethodConfig config;
  if (!j.is_object()) parse_fail("method config must be an object");
  try {
    if (j.contains("choice_k")) config.choice_k = j["choice_k"].get<int>();
    if (j.contains("qualitative_rank_encode"))
      config.qualitative_rank_encode = j["qualitative_rank_encode"].get<bool>();
    if (j.contains("preference_functions"))
      for (const auto& [name, spec] : j["preference_functions"].items()) {
        require_criterion(situation, name, "preference_functions");
        config.preference_functions.emplace(name, preference_from_json(spec));
      }
    if (j.contains("sorting_thresholds"))
      config.sorting_thresholds =
          j["sorting_thresholds"].get<std::vector<double>>();
    if (j.contains("criteria_matrix"))
      config.criteria_matrix = PairwiseMatrix::from_rows(
          j["criteria_matrix"].get<std::vector<std::vector<double>>>());
    if (j.contains("alternative_matrices"))
      for (const auto& [name, rows] : j["alternative_matrices"].items()) {
        require_criterion(situation, name, "alternative_matrices");
        config.alternative_matrices.emplace(
            name, PairwiseMatrix::from_rows(
                      rows.get<std::vector<std::vector<double>>>()));
      }
    if (j.contains("ahp_mode"))
      config.ahp.mode = j["ahp_mode"].get<std::string>() == "eigenvector"
                            ? PriorityMode::Eigenvector
                            : PriorityMode::GeometricMean;
    if (j.contains("cr_threshold"))
      config.ahp.cr_threshold = j["cr_threshold"].get<double>();
    if (j.contains("cr_mode"))
      config.ahp.cr_error = j["cr_mode"].get<std::string>() == "error";
    if (j.contains("utilities"))
      for (const auto& [name, points] : j["utilities"].items()) {
        require_criterion(situation, name, "utilities");
        std::vector<std::pair<double, double>> breakpoints;
        for (const auto& point : points)
          breakpoints.emplace_back(point.at(0).get<double>(),
                                   point.at(1).get<double>());
        config.utilities.emplace(
            name, UtilityFunction::from_breakpoints(std::move(breakpoints)));
      }
    if (j.contains("maut_form"))
      config.maut_form = j["maut_form"].get<std::string>() == "multiplicative"
                             ? MautForm::Multiplicative
                             : MautForm::Additive;
    if (j.contains("tfn_scale"))
      for (const auto& [name, labels] : j["tfn_scale"].items()) {
        require_criterion(situation, name, "tfn_scale");
        for (const auto& [label, triple] : labels.items())
          config.fuzzy.label_tfns[name][label] =
              FuzzyNumber{triple.at(0).get<double>(),
                          triple.at(1).get<double>(),
                          triple.at(2).get<double>()};
      }
    if (j.contains("fuzzy_weights"))
      for (const auto& [name, triple] : j["fuzzy_weights"].items()) {
        require_criterion(situation, name, "fuzzy_weights");
        config.fuzzy_weights[name] =
            FuzzyNumber{triple.at(0).get<double>(), triple.at(1).get<double>(),
                        triple.at(2).get<double>()};
      }
  } catch (const json::exception& e) {
    parse_fail(std::string("bad method config: ") + e.what());
  }
  return config;
}

// --- file loaders ---

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in.is_open())
    fail(Errc::ParseError, "cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded())
    fail(Errc::ParseError, path.string() + " is not valid JSON");
  return j;
}

LoadedSituation load_situation(const std::filesystem::path& path) {
  return {situation_from_json(load_json_file(path))};
}

LoadedUsage load_usage(const std::filesystem::path& path) {
  const json j = load_json_file(path);
  LoadedUsage loaded;
  loaded.usage = usage_from_json(j);
  if (j.is_object() && j.contains("measure_scale_needed"))
    loaded.measure_scale_needed = j["measure_scale_needed"].get<bool>();
  return loaded;
}

std::map<ReqAttribute, double> load_l2_weights(
    const std::filesystem::path& path) {
  const json j = load_json_file(path);
  if (!j.is_object()) fail(Errc::ParseError, "L2 weights must be an object");
  std::map<ReqAttribute, double> weights;
  for (const auto& [name, value] : j.items()) {
    const auto attribute = attribute_from_name(name);
    if (!attribute)
      fail(Errc::ParseError, "unknown requirement attribute '" + name + "'");
    weights[*attribute] = value.get<double>();
  }
  return weights;
}

Registry load_registry(const std::filesystem::path& path) {
  return registry_from_json(load_json_file(path));
}

MethodConfig load_method_config(const std::filesystem::path& path,
                                const DecisionSituation& situation) {
  return method_config_from_json(load_json_file(path), situation);
}

}  // namespace mcdm
