#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process with captured streams.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input (malformed JSON,
// bad field, failed validation), 3 term budget exceeded, 4 verification failed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sfcrel/sfcrel.hpp"

namespace sfcrel::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kInvalidInput = 2,
  kBudgetExceeded = 3,
  kVerifyFailed = 4,
};

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::uint64_t kDefaultTrials = 1'000'000;

struct CliConfig {
  std::string subcommand;
  std::string scenario_path;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t budget = kDefaultTermBudget;
  std::string format = "text";
  std::string out_path;
  int case_id = 1;
  int table = 2;
  unsigned workers = 0;
  bool timing = false;
};

namespace detail {

inline std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("SFCREL_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("SFCREL_BUDGET: not an integer: ") + env);
  }
}

inline std::string render(const ReliabilityReport& report, const CliConfig& cfg) {
  if (cfg.format == "json") return report_to_json(report, cfg.timing).dump(2) + "\n";
  if (cfg.format == "csv") return report_to_csv(report);
  return report_to_text(report);
}

inline int emit(const std::string& text, const CliConfig& cfg, std::ostream& out,
                std::ostream& err) {
  if (cfg.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write output file '" << cfg.out_path << "'\n";
    return kIoError;
  }
  file << text;
  return kOk;
}

inline int run_subcommand(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.subcommand == "sweep") {
    SweepSpec spec = SweepSpec::defaults(cfg.table, cfg.case_id);
    spec.term_budget = cfg.budget;
    return emit(run_sweep_csv(spec), cfg, out, err);
  }

  const Scenario scenario = load_scenario(cfg.scenario_path);
  require_valid(scenario);

  ReliabilityReport report;
  report.scenario = scenario;
  report.engine = cfg.subcommand;
  int code = kOk;
  if (cfg.subcommand == "analyze") {
    EvalOptions options;
    options.term_budget = cfg.budget;
    report.engine = "analytic";
    report.analytic = reliability_general(scenario, options);
  } else if (cfg.subcommand == "exact") {
    report.engine = "exhaustive";
    report.exhaustive = exhaustive_reliability(instantiate_tree(scenario), scenario.demand);
  } else if (cfg.subcommand == "simulate") {
    report.engine = "monte_carlo";
    report.monte_carlo = monte_carlo_estimate(instantiate_tree(scenario), scenario.demand,
                                              cfg.trials, cfg.seed, cfg.workers);
    report.seed = cfg.seed;
  } else if (cfg.subcommand == "verify") {
    VerifyOptions options;
    options.trials = cfg.trials;
    options.seed = cfg.seed;
    options.term_budget = cfg.budget;
    options.workers = cfg.workers;
    const VerifyReport v = verify(scenario, options);
    report = make_report(scenario, v, cfg.seed);
    if (!v.passed()) code = kVerifyFailed;
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  const int emitted = emit(render(report, cfg), cfg, out, err);
  return emitted != kOk ? emitted : code;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"SFC reliability over hierarchical data-center placements"};
  app.require_subcommand(1);
  CliConfig cfg;
  bool budget_given = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
    sub->add_flag("--timing", cfg.timing, "Include elapsed time in JSON output");
  };
  auto add_scenario = [&](CLI::App* sub) {
    sub->add_option("scenario", cfg.scenario_path, "Scenario JSON file")->required();
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--budget",
        [&](const std::uint64_t& b) {
          cfg.budget = b;
          budget_given = true;
        },
        "Leaf-term cap for the analytic engine (env SFCREL_BUDGET)");
  };
  auto add_mc = [&](CLI::App* sub) {
    sub->add_option("--trials", cfg.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Monte-Carlo seed (default 42)");
    sub->add_option("--workers", cfg.workers, "Worker threads (0 = hardware concurrency)");
  };

  auto* analyze = app.add_subcommand("analyze", "Closed-form reliability of a scenario");
  add_scenario(analyze);
  add_budget(analyze);
  add_common(analyze);

  auto* exact = app.add_subcommand("exact", "Exhaustive enumeration over the component tree");
  add_scenario(exact);
  add_common(exact);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo estimate with 95% CI");
  add_scenario(simulate);
  add_mc(simulate);
  add_common(simulate);

  auto* verify_cmd = app.add_subcommand("verify", "Compare analytic, exhaustive and Monte-Carlo");
  add_scenario(verify_cmd);
  add_mc(verify_cmd);
  add_budget(verify_cmd);
  add_common(verify_cmd);

  auto* sweep = app.add_subcommand("sweep", "Regenerate a reliability table as CSV");
  sweep->add_option("--table", cfg.table, "Table to regenerate")
      ->check(CLI::IsMember({2, 3, 4}));
  sweep->add_option("--case", cfg.case_id, "Reliability profile")->check(CLI::IsMember({1, 2}));
  sweep->add_option("--out", cfg.out_path, "Write CSV to this file instead of stdout");
  add_budget(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    if (!budget_given) cfg.budget = detail::budget_from_env(cfg.budget);
    return detail::run_subcommand(cfg, out, err);
  } catch (const ScenarioReadError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ScenarioFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const TermBudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget or SFCREL_BUDGET)\n";
    return kBudgetExceeded;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace sfcrel::cli
