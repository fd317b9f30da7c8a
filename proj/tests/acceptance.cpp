// Acceptance suite: end-to-end checks over the bundled fixtures, the CLI,
// and the statistical invariants of the method implementations. Prints one
// PASS/FAIL line per criterion and exits nonzero if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mcdm/experience.hpp"
#include "mcdm/methods/apply.hpp"
#include "mcdm/methods/fuzzy.hpp"
#include "mcdm/methods/maut.hpp"
#include "mcdm/pipeline.hpp"
#include "test_support.hpp"

#ifndef MCDM_CLI_PATH
#error "MCDM_CLI_PATH must point at the mcdm executable"
#endif
#ifndef MCDM_FIXTURES_DIR
#error "MCDM_FIXTURES_DIR must point at the bundled fixtures"
#endif

using namespace mcdm;
using Clock = std::chrono::steady_clock;

namespace {

const std::filesystem::path kFixtures{MCDM_FIXTURES_DIR};
int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << '\n';
  if (!pass) ++g_failures;
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string command = std::string(MCDM_CLI_PATH) + " " + args + " 2>&1";
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.is_open()) return {};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("mcdm_accept_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// --- criterion 1: selection-matrix reproduction over the fixtures ---

constexpr const char* kToolsMatrix =
    "attribute,maut,ahp,outranking,weighting\n"
    "problem,1,1,1,1\n"
    "count,1,0,1,1\n"
    "nature,1,1,1,1\n"
    "data_type,1,1,1,1\n"
    "weighting,1,1,1,1\n"
    "easiness,0,1,0,1\n"
    "skills,0,0,0,1\n"
    "candidate,0,0,0,1\n";

constexpr const char* kRisksMatrix =
    "attribute,maut,ahp,outranking,weighting\n"
    "problem,1,1,1,1\n"
    "count,1,0,1,1\n"
    "nature,1,1,1,1\n"
    "data_type,1,1,1,0\n"
    "candidate,1,0,1,0\n";

constexpr const char* kUseCasesMatrix =
    "attribute,maut,ahp,outranking,weighting\n"
    "problem,1,1,1,1\n"
    "count,1,0,1,1\n"
    "nature,1,1,1,1\n"
    "data_type,0,0,0,0\n"
    "tool,0,1,1,1\n"
    "candidate,0,0,0,0\n";

void criterion_1() {
  const auto start = Clock::now();
  const CommandResult tools = run_cli(
      "select --situation " + (kFixtures / "tools.json").string() +
      " --usage " + (kFixtures / "tools_usage.json").string() + " --matrix");
  const CommandResult risks = run_cli(
      "select --situation " + (kFixtures / "risks.json").string() +
      " --matrix");
  const CommandResult use_cases = run_cli(
      "select --situation " + (kFixtures / "use_cases.json").string() +
      " --usage " + (kFixtures / "use_cases_usage.json").string() +
      " --matrix");
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start)
                           .count();

  const bool cells = tools.output == kToolsMatrix &&
                     risks.output == kRisksMatrix &&
                     use_cases.output == kUseCasesMatrix;
  const bool exits = tools.exit_code == 0 && risks.exit_code == 0 &&
                     use_cases.exit_code == 0;
  const bool fast = elapsed < 1000;
  report(1, cells && exits && fast,
         "bundled fixtures reproduce the published selection matrices "
         "cell-for-cell with candidates {weighting} / {maut,outranking} / "
         "none (" +
             std::to_string(elapsed) + " ms)");
}

// --- criterion 2: weighted refinement of the risks candidates ---

void criterion_2() {
  const DecisionSituation situation = validate_situation(
      load_situation(kFixtures / "risks.json").situation);
  const MethodRequirements requirements = derive_requirements(situation);
  SelectionReport selection =
      match_methods(requirements, Registry::builtin_crisp());
  bool pass = selection.candidates ==
              std::vector<std::string>{"maut", "outranking"};
  std::string chosen;
  try {
    chosen = select_by_weighting(selection, {{ReqAttribute::Tool, 1.0}});
  } catch (const Error&) {
    pass = false;
  }
  pass = pass && chosen == "outranking";
  report(2, pass,
         "full weight on tool availability refines {maut,outranking} to "
         "outranking");
}

// --- criterion 3: registry-extension flashback and the no-method exit ---

void criterion_3() {
  const auto out_dir = fresh_dir("flashback");
  const CommandResult with_policy = run_cli(
      "run --situation " + (kFixtures / "use_cases.json").string() +
      " --usage " + (kFixtures / "use_cases_usage.json").string() +
      " --flashback extend:fuzzy --out " + (out_dir / "a").string());
  bool pass = with_policy.exit_code == 0;

  json report_json;
  try {
    report_json = json::parse(slurp(out_dir / "a" / "report.json"));
    pass = pass && report_json.at("iterations").size() == 2 &&
           report_json.at("selection").at("chosen") == "fuzzy";
  } catch (...) {
    pass = false;
  }

  const CommandResult without_policy = run_cli(
      "run --situation " + (kFixtures / "use_cases.json").string() +
      " --usage " + (kFixtures / "use_cases_usage.json").string() +
      " --out " + (out_dir / "b").string());
  pass = pass && without_policy.exit_code == 2;

  report(3, pass,
         "extending the registry with the fuzzy family selects it on the "
         "second iteration; an empty policy exits 2");
  std::filesystem::remove_all(out_dir);
}

// --- criterion 4: matching monotonicity under requirement removal ---

MethodRequirements random_requirements(std::mt19937& rng) {
  MethodRequirements r;
  auto flip = [&] { return rng() % 2 == 0; };
  if (flip()) r.problem = static_cast<ProblemKind>(rng() % 3);
  if (flip()) r.count_bucket = static_cast<CountBucket>(rng() % 3);
  if (flip()) r.nature = static_cast<SetNature>(rng() % 2);
  if (flip()) r.incompatibility = flip();
  if (flip()) {
    std::set<DataType> types;
    do {
      types.insert(static_cast<DataType>(rng() % 3));
    } while (flip());
    r.data_type_required = std::move(types);
  }
  if (flip()) r.measure_scale_needed = flip();
  if (flip()) r.weighting_type = static_cast<WeightingType>(rng() % 2);
  if (flip()) r.usage.tool_required = flip();
  if (flip()) r.usage.easiness_required = static_cast<EasinessLevel>(rng() % 3);
  if (flip()) r.usage.skills_available = static_cast<SkillLevel>(rng() % 3);
  return r;
}

void unexpress_one(MethodRequirements& r, ReqAttribute attribute) {
  switch (attribute) {
    case ReqAttribute::Problem: r.problem.reset(); break;
    case ReqAttribute::Count: r.count_bucket.reset(); break;
    case ReqAttribute::Nature: r.nature.reset(); break;
    case ReqAttribute::Incompatibility: r.incompatibility.reset(); break;
    case ReqAttribute::DataType: r.data_type_required.reset(); break;
    case ReqAttribute::Scale: r.measure_scale_needed.reset(); break;
    case ReqAttribute::Weighting: r.weighting_type.reset(); break;
    case ReqAttribute::Tool: r.usage.tool_required.reset(); break;
    case ReqAttribute::Easiness: r.usage.easiness_required.reset(); break;
    case ReqAttribute::Skills: r.usage.skills_available.reset(); break;
  }
}

void criterion_4() {
  const Registry registry = Registry::builtin();
  std::mt19937 rng(424243);
  int violations = 0;
  const int documents = 1200;
  for (int trial = 0; trial < documents; ++trial) {
    const MethodRequirements base = random_requirements(rng);
    const SelectionReport before = match_methods(base, registry);
    for (ReqAttribute attribute : kAllReqAttributes) {
      MethodRequirements relaxed = base;
      unexpress_one(relaxed, attribute);
      const SelectionReport after = match_methods(relaxed, registry);
      for (const auto& candidate : before.candidates)
        if (std::find(after.candidates.begin(), after.candidates.end(),
                      candidate) == after.candidates.end())
          ++violations;
    }
  }
  report(4, violations == 0,
         "removing any expressed attribute never shrank the candidate set "
         "over " +
             std::to_string(documents) + " random requirement documents");
}

// --- criterion 5: flow conservation and the exhaustive pairwise oracle ---

void criterion_5() {
  const auto start = Clock::now();
  std::mt19937 rng(5150);
  int conservation_failures = 0;
  int oracle_failures = 0;
  int small_tables = 0;
  const int tables = 1200;
  for (int trial = 0; trial < tables; ++trial) {
    const auto table = testing::random_table(rng, 9, 5);
    const DecisionSituation situation =
        testing::table_situation(table.values, table.directions, table.weights);
    std::vector<PreferenceFunction> prefs;
    for (std::size_t j = 0; j < table.directions.size(); ++j) {
      switch (rng() % 3) {
        case 0: prefs.push_back(PreferenceFunction::usual()); break;
        case 1: prefs.push_back(PreferenceFunction::vshape(8.0)); break;
        default: prefs.push_back(PreferenceFunction::linear(1.0, 10.0));
      }
    }
    const Flows flows = promethee_flows(situation, prefs);
    const double net_sum =
        std::accumulate(flows.net.begin(), flows.net.end(), 0.0);
    if (std::abs(net_sum) > 1e-12) ++conservation_failures;

    if (table.values.size() <= 4) {
      ++small_tables;
      const auto oracle = testing::oracle_flows(
          table.values, table.directions, table.weights, prefs);
      for (std::size_t i = 0; i < flows.net.size(); ++i)
        if (std::abs(flows.plus[i] - oracle.plus[i]) > 1e-12 ||
            std::abs(flows.minus[i] - oracle.minus[i]) > 1e-12 ||
            std::abs(flows.net[i] - oracle.net[i]) > 1e-12)
          ++oracle_failures;
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           Clock::now() - start)
                           .count();
  report(5,
         conservation_failures == 0 && oracle_failures == 0 &&
             small_tables > 0 && elapsed < 30000,
         "net flows sum to zero on " + std::to_string(tables) +
             " random tables and match the brute-force oracle on " +
             std::to_string(small_tables) + " small ones (" +
             std::to_string(elapsed) + " ms)");
}

// --- criterion 6: priority recovery from consistent matrices ---

void criterion_6() {
  std::mt19937 rng(606);
  std::uniform_real_distribution<double> dist(0.02, 1.0);
  int failures = 0;
  const int matrices = 600;
  for (int trial = 0; trial < matrices; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);  // 3..9
    std::vector<double> generator(n);
    double total = 0.0;
    for (double& w : generator) total += (w = dist(rng));
    for (double& w : generator) w /= total;

    const PairwiseMatrix matrix = PairwiseMatrix::from_weights(generator);
    for (PriorityMode mode :
         {PriorityMode::GeometricMean, PriorityMode::Eigenvector}) {
      const PriorityResult result = ahp_priorities(matrix, mode);
      for (int i = 0; i < n; ++i)
        if (std::abs(result.weights[i] - generator[i]) > 1e-9) ++failures;
    }
    if (std::abs(ahp_consistency(matrix).cr) > 1e-9) ++failures;
  }
  report(6, failures == 0,
         "both priority modes recover the generator within 1e-9 and CR "
         "stays 0 over " +
             std::to_string(matrices) + " consistent matrices (n=3..9)");
}

// --- criterion 7: cross-method equivalences ---

void criterion_7() {
  std::mt19937 rng(707);
  int failures = 0;
  int tables_used = 0;
  while (tables_used < 600) {
    const auto table = testing::random_table(rng);
    bool degenerate = false;
    std::vector<UtilityFunction> utilities;
    for (std::size_t j = 0; j < table.directions.size(); ++j) {
      double lo = table.values[0][j], hi = table.values[0][j];
      for (const auto& row : table.values) {
        lo = std::min(lo, row[j]);
        hi = std::max(hi, row[j]);
      }
      if (lo == hi) {
        degenerate = true;
        break;
      }
      utilities.push_back(
          UtilityFunction::linear_span(lo, hi, table.directions[j]));
    }
    if (degenerate) continue;
    ++tables_used;

    const DecisionSituation situation =
        testing::table_situation(table.values, table.directions, table.weights);
    const Ranking saw = saw_rank(situation);
    const Ranking maut = maut_rank(situation, utilities, MautForm::Additive);
    if (saw.order != maut.order) ++failures;
    for (std::size_t i = 0; i < saw.scores.size(); ++i)
      if (std::abs(saw.scores[i] - maut.scores[i]) > 1e-9) ++failures;

    const Ranking fuzzy = fuzzy_saw_rank(situation);
    if (fuzzy.order != saw.order) ++failures;
    for (std::size_t i = 0; i < saw.scores.size(); ++i)
      if (fuzzy.scores[i] != saw.scores[i]) ++failures;  // exact
  }
  report(7, failures == 0,
         "additive utility aggregation with spanning linear utilities "
         "matches the weighted sum within 1e-9, and the fuzzy path reduces "
         "exactly on crisp inputs (600 tables)");
}

// --- criterion 8: order invariance under positive affine transforms ---

void criterion_8() {
  std::mt19937 rng(808);
  std::uniform_real_distribution<double> scale_dist(0.05, 25.0);
  std::uniform_real_distribution<double> shift_dist(-200.0, 200.0);
  int failures = 0;
  const int tables = 600;
  for (int trial = 0; trial < tables; ++trial) {
    const auto table = testing::random_table(rng);
    const Ranking before = saw_rank(testing::table_situation(
        table.values, table.directions, table.weights));

    auto transformed = table.values;
    const std::size_t column = rng() % table.directions.size();
    const double a = scale_dist(rng);
    const double b = shift_dist(rng);
    for (auto& row : transformed) row[column] = a * row[column] + b;
    const Ranking after = saw_rank(testing::table_situation(
        transformed, table.directions, table.weights));
    if (before.order != after.order) ++failures;
  }
  report(8, failures == 0,
         "positive affine transforms of single columns left the weighted-sum "
         "order unchanged on " +
             std::to_string(tables) + " tables");
}

// --- criterion 9: byte-identical runs ---

void criterion_9() {
  const auto out_root = fresh_dir("determinism");
  std::string reference_report, reference_matrix;
  bool pass = true;
  for (int repetition = 0; repetition < 10; ++repetition) {
    const auto out_dir = out_root / ("rep" + std::to_string(repetition));
    const CommandResult run_result = run_cli(
        "run --situation " + (kFixtures / "tools.json").string() +
        " --usage " + (kFixtures / "tools_usage.json").string() + " --out " +
        out_dir.string());
    if (run_result.exit_code != 0) pass = false;
    const std::string report_text = slurp(out_dir / "report.json");
    const std::string matrix_text = slurp(out_dir / "matrix.csv");
    if (repetition == 0) {
      reference_report = report_text;
      reference_matrix = matrix_text;
      if (report_text.empty() || matrix_text.empty()) pass = false;
    } else if (report_text != reference_report ||
               matrix_text != reference_matrix) {
      pass = false;
    }
  }
  report(9, pass, "10 repeated runs produced byte-identical reports and "
                  "matrices");
  std::filesystem::remove_all(out_root);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed\n";
  return 1;
}
