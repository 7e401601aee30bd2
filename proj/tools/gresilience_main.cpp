// Copyright 2026 The GResilience Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gresilience/errors.hpp"
#include "gresilience/harness.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

gresilience::WeightVector parse_weights(const std::string& text) {
  std::istringstream stream(text);
  std::vector<double> parts;
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      parts.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw gresilience::ConfigError("weights must be three comma-separated numbers");
    }
  }
  if (parts.size() != 3) {
    throw gresilience::ConfigError("weights must be three comma-separated numbers");
  }
  gresilience::WeightVector weights{parts[0], parts[1], parts[2]};
  weights.validate();
  return weights;
}

ordered_json weights_json(const gresilience::WeightVector& w) {
  return ordered_json{{"w_t", w.w_t}, {"w_h", w.w_h}, {"w_co2", w.w_co2}};
}

struct RunCliOptions {
  std::string scenario_path;
  std::string technique = "wsm";
  std::string wsm_mode = "fixed";
  std::string weights;
  std::optional<std::int64_t> seed;
  int max_iterations = 100;
  std::string out_dir = ".";
  std::string format = "json";
};

gresilience::RunOptions build_run_options(const RunCliOptions& cli,
                                          gresilience::Technique technique) {
  gresilience::RunOptions options;
  options.technique = technique;
  options.max_iterations = cli.max_iterations;
  if (cli.wsm_mode == "search") {
    if (!cli.weights.empty()) {
      throw gresilience::ConfigError("--weights only applies to --wsm-mode fixed");
    }
    options.wsm_mode = gresilience::WeightSearch{};
  } else if (cli.wsm_mode == "fixed") {
    options.wsm_mode = gresilience::FixedWeights{
        cli.weights.empty() ? gresilience::WeightVector::equal() : parse_weights(cli.weights)};
  } else {
    throw gresilience::ConfigError("--wsm-mode must be 'fixed' or 'search'");
  }
  if (cli.seed) {
    if (*cli.seed < 0) throw gresilience::ConfigError("--seed must be non-negative");
    options.seed_override = static_cast<std::uint64_t>(*cli.seed);
  }
  return options;
}

std::string extension(gresilience::EmitFormat format) {
  return format == gresilience::EmitFormat::Csv ? ".csv" : ".json";
}

int run_command(const RunCliOptions& cli) {
  const auto cfg = gresilience::ScenarioConfig::load(cli.scenario_path);
  const auto format = gresilience::emit_format_from_string(cli.format);
  fs::create_directories(cli.out_dir);

  const auto run_one = [&](gresilience::Technique technique) {
    const auto log = gresilience::run_experiment(cfg, build_run_options(cli, technique));
    fs::path out = fs::path(cli.out_dir) /
                   (technique == gresilience::Technique::Wsm ? "wsm" : "game");
    out += extension(format);
    gresilience::emit(log, format, out);
    std::cout << gresilience::to_string(technique) << ": "
              << (log.summary.recovered ? "recovered" : "not recovered") << " in "
              << log.summary.iterations_to_recover << " iteration(s) -> " << out.string()
              << "\n";
    return log;
  };

  if (cli.technique == "wsm") {
    run_one(gresilience::Technique::Wsm);
  } else if (cli.technique == "game") {
    run_one(gresilience::Technique::Game);
  } else if (cli.technique == "both") {
    const auto wsm_log = run_one(gresilience::Technique::Wsm);
    const auto game_log = run_one(gresilience::Technique::Game);
    const auto report = gresilience::compare({wsm_log, game_log});
    fs::path out = fs::path(cli.out_dir) / "comparison";
    out += extension(format);
    gresilience::emit(report, format, out);
    std::cout << "comparison -> " << out.string() << "\n";
  } else {
    throw gresilience::ConfigError("--technique must be 'wsm', 'game' or 'both'");
  }
  return 0;
}

int compare_command(const std::vector<std::string>& log_paths, const std::string& out_path) {
  std::vector<gresilience::ExperimentLog> logs;
  logs.reserve(log_paths.size());
  for (const std::string& path : log_paths) logs.push_back(gresilience::load_log(path));
  const auto report = gresilience::compare(logs);
  const auto format = fs::path(out_path).extension() == ".csv" ? gresilience::EmitFormat::Csv
                                                               : gresilience::EmitFormat::Json;
  gresilience::emit(report, format, out_path);
  std::cout << "comparison -> " << out_path << "\n";
  return 0;
}

int solve_game_command(const std::string& attrs_path, double epsilon) {
  const auto actions = gresilience::load_actions(attrs_path);
  if (actions.size() != 2) {
    throw gresilience::ConfigError("solve-game requires exactly two actions");
  }
  const gresilience::Confidence confidence(epsilon);
  const auto matrix = gresilience::build_payoff_matrix(actions[0], actions[1], confidence);
  const auto solution = gresilience::solve_game(matrix);

  ordered_json cells = ordered_json::array();
  for (int row = 0; row < 2; ++row) {
    ordered_json row_json = ordered_json::array();
    for (int col = 0; col < 2; ++col) {
      row_json.push_back(ordered_json{{"resilience", matrix.at(row, col).resilience},
                                      {"greenness", matrix.at(row, col).greenness}});
    }
    cells.push_back(row_json);
  }
  ordered_json psne = ordered_json::array();
  for (const auto& [row, col] : solution.psne) {
    psne.push_back(ordered_json{{"row", matrix.actions[row].id},
                                {"col", matrix.actions[col].id}});
  }
  ordered_json out;
  out["actions"] = {matrix.actions[0].id, matrix.actions[1].id};
  out["epsilon"] = epsilon;
  out["matrix"] = cells;
  out["psne"] = psne;
  out["msne"] = ordered_json{{"p", solution.mixed.p},
                             {"q", solution.mixed.q},
                             {"interior", solution.mixed.interior}};
  out["expected_payoffs"] =
      ordered_json{{"resilience", {solution.expected.resilience_a1,
                                   solution.expected.resilience_a2}},
                   {"greenness", {solution.expected.greenness_a1,
                                  solution.expected.greenness_a2}}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int solve_score_command(const std::string& attrs_path, double epsilon,
                        const std::string& weights_text) {
  const auto actions = gresilience::load_actions(attrs_path);
  const gresilience::Confidence confidence(epsilon);
  const gresilience::WsmMode mode =
      weights_text.empty()
          ? gresilience::WsmMode(gresilience::WeightSearch{})
          : gresilience::WsmMode(gresilience::FixedWeights{parse_weights(weights_text)});
  const auto decision = gresilience::select_action(actions, confidence, mode);

  ordered_json scores = ordered_json::array();
  for (const auto& scored : decision.scored) {
    scores.push_back(ordered_json{{"id", scored.id},
                                  {"score", scored.score},
                                  {"weights", weights_json(scored.weights)}});
  }
  ordered_json out;
  out["epsilon"] = epsilon;
  out["mode"] = gresilience::to_string(decision.mode);
  out["selected"] = decision.selected_id;
  out["scores"] = scores;
  if (decision.tie_break_note) out["tie_break"] = *decision.tie_break_note;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recovery-action selection trading off greenness against resilience"};
  app.require_subcommand(1);

  RunCliOptions run_cli;
  CLI::App* run = app.add_subcommand("run", "Run a recovery experiment on a scenario");
  run->add_option("--scenario", run_cli.scenario_path, "Scenario JSON file")->required();
  run->add_option("--technique", run_cli.technique, "wsm, game or both")->required();
  run->add_option("--wsm-mode", run_cli.wsm_mode, "fixed or search (default fixed)");
  run->add_option("--weights", run_cli.weights, "w_t,w_h,w_co2 for fixed mode");
  run->add_option("--seed", run_cli.seed, "Override the scenario seed");
  run->add_option("--max-iterations", run_cli.max_iterations, "Iteration cap (default 100)");
  run->add_option("--out", run_cli.out_dir, "Output directory (default .)");
  run->add_option("--format", run_cli.format, "csv or json (default json)");

  std::vector<std::string> compare_logs;
  std::string compare_out = "comparison.json";
  CLI::App* cmp = app.add_subcommand("compare", "Compare emitted JSON experiment logs");
  cmp->add_option("--logs", compare_logs, "Paths of JSON logs to compare")
      ->required()
      ->expected(2, -1);
  cmp->add_option("--out", compare_out, "Report path (.csv or .json)");

  std::string attrs_path;
  double epsilon = 0.0;
  CLI::App* solve_game = app.add_subcommand("solve-game", "Solve the 2x2 coordination game");
  solve_game->add_option("--attrs", attrs_path, "Actions JSON file")->required();
  solve_game->add_option("--epsilon", epsilon, "AI confidence in [0, 1]")->required();

  std::string score_attrs_path;
  double score_epsilon = 0.0;
  std::string score_weights;
  CLI::App* solve_score = app.add_subcommand("solve-score", "Score actions with weighted sums");
  solve_score->add_option("--attrs", score_attrs_path, "Actions JSON file")->required();
  solve_score->add_option("--epsilon", score_epsilon, "AI confidence in [0, 1]")->required();
  solve_score->add_option("--weights", score_weights,
                          "w_t,w_h,w_co2; omit to search per action");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run->parsed()) return run_command(run_cli);
    if (cmp->parsed()) return compare_command(compare_logs, compare_out);
    if (solve_game->parsed()) return solve_game_command(attrs_path, epsilon);
    if (solve_score->parsed()) {
      return solve_score_command(score_attrs_path, score_epsilon, score_weights);
    }
    return 1;
  } catch (const gresilience::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const gresilience::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
