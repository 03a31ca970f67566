#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "seating/seating.hpp"

namespace seating::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Scenario load_scenario(const std::string& path) {
  try {
    return parse_scenario(read_file(path));
  } catch (const LocatedError& e) {
    throw LocatedError(e.line(), e.column(), path + ": " + std::string(e.what()));
  }
}

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Seat-selection simulator for rectangular auditoria"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string policy_arg = "all";
  std::size_t runs = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string out_path;
  std::vector<std::string> policy_names{"all"};
  for (Policy p : kAllPolicies) policy_names.emplace_back(keyword(p));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo entropy trajectories per policy, as CSV");
  simulate->add_option("--scenario", scenario_path, "Scenario file")->required();
  simulate->add_option("--policy", policy_arg, "Policy keyword or 'all'")->check(CLI::IsMember(policy_names));
  simulate->add_option("--runs", runs, "Runs per policy")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", seed, "Master seed");
  simulate->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  simulate->add_option("--out", out_path, "Output CSV file (default: stdout)");

  auto* replay = app.add_subcommand("replay", "Entropy trajectory of the observed placements, as CSV");
  replay->add_option("--scenario", scenario_path, "Scenario file")->required();

  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy of the scenario's initial grid");
  entropy_cmd->add_option("--scenario", scenario_path, "Scenario file")->required();

  std::string choices_path;
  std::string metric;
  int min_groups = 2;
  auto* analyze = app.add_subcommand("analyze", "Distance histogram of questionnaire choices, as CSV");
  analyze->add_option("--choices", choices_path, "Choices file")->required();
  analyze->add_option("--metric", metric, "nearest | center")->required()->check(CLI::IsMember({"nearest", "center"}));
  analyze->add_option("--min-groups", min_groups, "Minimum seated groups for the center metric")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*simulate) {
      const Scenario sc = load_scenario(scenario_path);
      std::vector<LabeledSeries> series;
      for (Policy p : kAllPolicies) {
        if (policy_arg != "all" && policy_arg != keyword(p)) continue;
        series.push_back({std::string(keyword(p)), run_many(sc, p, runs, seed, threads)});
      }
      if (sc.observed) series.push_back({"real", replay_observed(sc)});
      const std::string csv = emit_trajectories_csv(series);
      if (out_path.empty()) {
        out << csv;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << csv)) throw Error("cannot write " + out_path);
      }
    } else if (*replay) {
      const Scenario sc = load_scenario(scenario_path);
      out << emit_trajectories_csv({{"real", replay_observed(sc)}});
    } else if (*entropy_cmd) {
      out << entropy(load_scenario(scenario_path).initial_auditorium()) << "\n";
    } else if (*analyze) {
      const auto records = parse_choices(read_file(choices_path));
      const Histogram h = metric == "nearest" ? nearest_distance_histogram(records)
                                              : center_distance_histogram(records, min_groups);
      out << emit_histogram_csv(h);
    }
  } catch (const EmptyInput& e) {
    err << "error: EmptyInput: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace seating::cli
