// pandora: generate instances, solve them, benchmark against the
// scenario-aware optimum, learn from samples and check the tree lemma.
//
// Exit codes: 0 ok, 1 invalid instance, 2 usage or parse error,
// 3 a theoretical bound was violated.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pandora/benchmarks.hpp"
#include "pandora/generators.hpp"
#include "pandora/json_io.hpp"
#include "pandora/learning.hpp"
#include "pandora/model.hpp"
#include "pandora/solver.hpp"
#include "pandora/tree_analysis.hpp"

#ifndef PANDORA_VERSION
#define PANDORA_VERSION "unknown"
#endif

namespace {

using namespace pandora;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string output = "-";
  bool wall_time = false;
};

struct Run {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

std::uint64_t effective_seed(std::uint64_t flag) {
  const char* env = std::getenv("PANDORA_SEED");
  if (env == nullptr || *env == '\0') return flag;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("PANDORA_SEED is not an unsigned integer: ") + env);
  }
}

Json manifest(const Run& run, const Common& common) {
  Json m;
  m["command"] = run.command;
  m["inputs"] = run.inputs;
  m["seed"] = run.seed ? Json(*run.seed) : Json(nullptr);
  m["version"] = PANDORA_VERSION;
  m["output"] = common.output;
  if (common.wall_time) {
    m["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - run.start).count();
  }
  return m;
}

void emit(const Json& doc, const Common& common) {
  const std::string text = doc.dump(2) + "\n";
  if (common.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + common.output);
  out << text;
}

Json with_manifest(const Run& run, const Common& common, const Json& body) {
  Json doc;
  doc["manifest"] = manifest(run, common);
  for (const auto& [key, value] : body.items()) doc[key] = value;
  return doc;
}

Instance load_valid(const std::string& path) {
  Instance instance = read_instance(path);
  require_valid(instance);
  return instance;
}

// gen -----------------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::size_t n = 3;
  std::size_t m = 5;
  std::uint64_t seed = 0;
  std::string supports;
  std::vector<double> costs;
  double scale = 100.0;
  double zero_probability = 0.3;
};

int cmd_gen(const GenArgs& args, const Common& common) {
  Run run{"gen " + args.kind, {}, std::nullopt};
  Instance instance;
  if (args.kind == "random") {
    run.seed = effective_seed(args.seed);
    instance = random_instance(args.n, args.m, *run.seed);
  } else if (args.kind == "mssc") {
    run.seed = effective_seed(args.seed);
    instance = mssc_instance(args.n, args.m, *run.seed, args.zero_probability);
  } else if (args.kind == "product") {
    if (args.supports.empty()) throw UsageError("gen product needs --supports");
    const auto supports = parse_supports(args.supports);
    std::vector<double> costs = args.costs;
    if (costs.empty()) costs.assign(supports.size(), 1.0);
    instance = product_instance(supports, costs);
  } else {
    run.seed = effective_seed(args.seed);
    instance = adversarial_cost_instance(args.n, args.m, args.scale, *run.seed);
  }
  require_valid(instance);
  emit(with_manifest(run, common, instance_to_json(instance)), common);
  return kExitOk;
}

// solve ---------------------------------------------------------------------

int cmd_solve(const std::string& path, const std::string& variant, const Common& common) {
  const Run run{"solve --variant " + variant, {path}, std::nullopt};
  const Instance instance = load_valid(path);
  Json body;
  body["variant"] = variant;
  if (variant == "partial") {
    const auto result = run_partial(instance);
    body["cost"] = to_json(result.cost);
    Json trace = Json::array();
    for (const auto& step : result.trace) trace.push_back(to_json(step));
    body["trace"] = std::move(trace);
    body["policy"] = to_json(result.policy);
  } else {
    const auto result = run_full(instance);
    body["cost"] = to_json(result.cost);
    body["tree"] = to_json(result.tree);
  }
  emit(with_manifest(run, common, body), common);
  return kExitOk;
}

// bench ---------------------------------------------------------------------

int cmd_bench(const std::string& path, const Common& common) {
  const Run run{"bench", {path}, std::nullopt};
  const Instance instance = load_valid(path);
  if (instance.box_count() > kDefaultMaxBruteForceBoxes) {
    throw UsageError("bench supports at most " + std::to_string(kDefaultMaxBruteForceBoxes) +
                     " boxes, instance has " + std::to_string(instance.box_count()));
  }
  const auto report = benchmark_report(instance);
  emit(with_manifest(run, common, to_json(report)), common);
  if (!report.within_bounds()) {
    std::cerr << "approximation bound exceeded\n";
    return kExitBound;
  }
  return kExitOk;
}

// learn ---------------------------------------------------------------------

struct LearnArgs {
  std::string path;
  std::size_t m = 100;
  double eps = 0.25;
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> repeats;
  std::vector<std::size_t> m_list;
  std::vector<std::uint64_t> seeds;
  std::string csv;
};

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "m,seed,empirical_cost,true_cost,ratio\n";
  for (const auto& r : rows) {
    out << r.sample_count << ',' << r.seed << ',' << r.empirical_cost << ',' << r.true_cost
        << ',' << r.ratio << '\n';
  }
  return out.str();
}

int cmd_learn(const LearnArgs& args, const Common& common) {
  Run run{"learn", {args.path}, effective_seed(args.seed)};
  const Instance source = load_valid(args.path);
  LearningConfig config;
  config.sample_count = args.m;
  config.epsilon = args.eps;
  config.delta = args.delta;
  config.repeat_override = args.repeats;
  config.seed = *run.seed;
  config.check();

  const std::string warning = cost_spread_warning(source);
  if (!warning.empty()) std::cerr << "warning: " << warning << "\n";

  if (args.m_list.empty()) {
    const auto report = learn(source, config);
    Json body = to_json(report);
    body["config"] = {{"m", args.m},
                      {"epsilon", args.eps},
                      {"delta", args.delta},
                      {"repeats", config.repeat_count()}};
    emit(with_manifest(run, common, body), common);
    return kExitOk;
  }

  std::vector<std::uint64_t> seeds = args.seeds;
  if (seeds.empty()) seeds.push_back(*run.seed);
  run.command = "learn --m-list";
  run.seed.reset();
  const auto rows = learning_sweep(source, config, args.m_list, seeds);
  const std::string csv = sweep_csv(rows);
  if (!args.csv.empty()) {
    std::ofstream out(args.csv, std::ios::binary);
    if (!out) throw UsageError("cannot write " + args.csv);
    out << "# pandora " << PANDORA_VERSION << " learn sweep on " << args.path << "\n" << csv;
  }
  Json body;
  body["config"] = {{"m_list", args.m_list},
                    {"seeds", seeds},
                    {"epsilon", args.eps},
                    {"delta", args.delta},
                    {"repeats", config.repeat_count()}};
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"m", r.sample_count},
                     {"seed", r.seed},
                     {"empirical_cost", value_to_json(r.empirical_cost)},
                     {"true_cost", value_to_json(r.true_cost)},
                     {"ratio", value_to_json(r.ratio)}});
  }
  body["rows"] = std::move(table);
  if (!args.csv.empty()) body["csv"] = args.csv;
  emit(with_manifest(run, common, body), common);
  return kExitOk;
}

// check-lemma ---------------------------------------------------------------

struct LemmaArgs {
  std::size_t trees = 500;
  std::uint64_t seed = 1;
  std::vector<double> rho_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::string tree_path;
};

int cmd_check_lemma(const LemmaArgs& args, const Common& common) {
  Run run{"check-lemma", {}, std::nullopt};
  for (double rho : args.rho_grid) {
    if (!(rho > 0.0 && rho <= 1.0)) throw UsageError("rho must lie in (0, 1]");
  }

  std::vector<WeightedTree> trees;
  if (!args.tree_path.empty()) {
    run.inputs.push_back(args.tree_path);
    trees.push_back(weighted_tree_from_json(read_json(args.tree_path)));
    if (!trees.back().well_formed()) throw ParseError(args.tree_path + ": not a tree");
  } else {
    run.seed = effective_seed(args.seed);
    std::mt19937_64 rng(*run.seed);
    for (std::size_t i = 0; i < args.trees; ++i) trees.push_back(random_tree(rng));
  }

  std::size_t checks = 0;
  Json violation;
  for (std::size_t t = 0; t < trees.size() && violation.is_null(); ++t) {
    for (double rho : args.rho_grid) {
      const auto check = lemma_check(trees[t], rho);
      ++checks;
      if (!check.holds) {
        violation = {{"tree_index", t}, {"rho", rho}, {"check", to_json(check)},
                     {"tree", to_json(trees[t])}};
        break;
      }
    }
  }

  Json body;
  body["trees"] = trees.size();
  body["rho_grid"] = args.rho_grid;
  body["checks"] = checks;
  body["status"] = violation.is_null() ? "pass" : "fail";
  if (trees.size() == 1) {
    Json results = Json::array();
    for (double rho : args.rho_grid) {
      Json row = to_json(lemma_check(trees[0], rho));
      row["rho"] = rho;
      results.push_back(std::move(row));
    }
    body["results"] = std::move(results);
  }
  if (!violation.is_null()) body["violation"] = violation;
  emit(with_manifest(run, common, body), common);
  return violation.is_null() ? kExitOk : kExitBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pandora's box with correlated values: solvers and experiments"};
  app.set_version_flag("--version", std::string(PANDORA_VERSION));
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", common.output, "Output file ('-' for stdout)");
    sub->add_flag("--wall-time", common.wall_time,
                  "Record wall time in the manifest (output is then not reproducible)");
  };

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen.kind, "Instance family")
      ->required()
      ->check(CLI::IsMember({"random", "mssc", "product", "adversarial-cost"}));
  gen_cmd->add_option("--n", gen.n, "Number of boxes");
  gen_cmd->add_option("--m", gen.m, "Number of scenarios");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--supports", gen.supports, "Product supports, e.g. \"0:0.5,2:0.5;1:1\"");
  gen_cmd->add_option("--costs", gen.costs, "Product box costs")->delimiter(',');
  gen_cmd->add_option("--H", gen.scale, "Cost scale for adversarial-cost")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--zero-prob", gen.zero_probability, "Zero density for mssc")
      ->check(CLI::Range(0.0, 1.0));
  add_common(gen_cmd);

  std::string solve_path;
  std::string variant = "partial";
  auto* solve_cmd = app.add_subcommand("solve", "Run the reservation-value rule");
  solve_cmd->add_option("instance", solve_path, "Instance JSON")->required();
  solve_cmd->add_option("--variant", variant, "Posterior updates")
      ->check(CLI::IsMember({"partial", "full"}));
  add_common(solve_cmd);

  std::string bench_path;
  auto* bench_cmd = app.add_subcommand("bench", "Compare both variants with the SA optimum");
  bench_cmd->add_option("instance", bench_path, "Instance JSON")->required();
  add_common(bench_cmd);

  LearnArgs learn_args;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a threshold policy from samples");
  learn_cmd->add_option("instance", learn_args.path, "Source instance JSON")->required();
  learn_cmd->add_option("--m", learn_args.m, "Samples per repeat")->check(CLI::PositiveNumber);
  learn_cmd->add_option("--eps", learn_args.eps, "Accuracy epsilon");
  learn_cmd->add_option("--delta", learn_args.delta, "Failure probability delta");
  learn_cmd->add_option("--seed", learn_args.seed, "Random seed");
  learn_cmd->add_option("--repeats", learn_args.repeats, "Override the repeat count");
  learn_cmd->add_option("--m-list", learn_args.m_list, "Sweep over sample counts")
      ->delimiter(',');
  learn_cmd->add_option("--seeds", learn_args.seeds, "Seeds for the sweep")->delimiter(',');
  learn_cmd->add_option("--csv", learn_args.csv, "Write the sweep as CSV");
  add_common(learn_cmd);

  LemmaArgs lemma;
  auto* lemma_cmd = app.add_subcommand("check-lemma", "Check the tree percentile lemma");
  lemma_cmd->add_option("--trees", lemma.trees, "Number of random trees");
  lemma_cmd->add_option("--seed", lemma.seed, "Random seed");
  lemma_cmd->add_option("--rho-grid", lemma.rho_grid, "Percentiles to check")->delimiter(',');
  lemma_cmd->add_option("--tree", lemma.tree_path, "Check one tree from a JSON file");
  add_common(lemma_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, common);
    if (*solve_cmd) return cmd_solve(solve_path, variant, common);
    if (*bench_cmd) return cmd_bench(bench_path, common);
    if (*learn_cmd) return cmd_learn(learn_args, common);
    if (*lemma_cmd) return cmd_check_lemma(lemma, common);
  } catch (const ValidationError& e) {
    Json report;
    report["error"] = "invalid instance";
    report["violations"] = e.violations();
    std::cerr << report.dump(2) << "\n";
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
