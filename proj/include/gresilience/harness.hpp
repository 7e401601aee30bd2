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

#ifndef GRESILIENCE_HARNESS_HPP
#define GRESILIENCE_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gresilience/game.hpp"
#include "gresilience/measurement.hpp"
#include "gresilience/recovery_fsm.hpp"
#include "gresilience/simulator.hpp"
#include "gresilience/wsm.hpp"

namespace gresilience {

enum class Technique { Wsm, Game };

std::string_view to_string(Technique technique);
Technique technique_from_string(std::string_view name);

struct WsmIterationDetail {
  WeightVector weights;  // weights behind the selected score
  std::vector<ScoredAction> scores;
  double score_selected = 0.0;

  friend bool operator==(const WsmIterationDetail&, const WsmIterationDetail&) = default;
};

struct GameIterationDetail {
  double p = 0.0;
  double q = 0.0;
  int rounds = 0;
  bool psne_fallback = false;

  friend bool operator==(const GameIterationDetail&, const GameIterationDetail&) = default;
};

// One decide-act-measure pass of the recovery loop.
struct IterationRecord {
  Technique technique = Technique::Wsm;
  int iteration = 0;  // 1-based
  RecoveryState state_before = RecoveryState::Steady;
  RecoveryState state_after = RecoveryState::Steady;
  std::string action_id;
  ActionKind action_kind = ActionKind::Learning;
  double perf_start = 0.0;
  double perf_end = 0.0;
  AttributeVector estimate;  // estimates the decision used, for the selected action
  double epsilon = 0.0;
  std::variant<WsmIterationDetail, GameIterationDetail> detail;
  double clock_start_s = 0.0;
  double clock_end_s = 0.0;
  double co2_cum_g = 0.0;
  std::int64_t human_cum = 0;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct EpisodeSummary {
  int iterations_to_recover = 0;
  double total_elapsed_s = 0.0;
  double total_co2_g = 0.0;
  std::int64_t total_human_interactions = 0;
  bool recovered = false;
  EpisodeTimeline timeline;

  friend bool operator==(const EpisodeSummary&, const EpisodeSummary&) = default;
};

// Everything one episode produced: per-iteration records plus the summary
// aggregates over them.
struct ExperimentLog {
  std::string scenario;
  std::uint64_t seed = 0;
  Technique technique = Technique::Wsm;
  std::vector<IterationRecord> records;
  EpisodeSummary summary;
  // Disruption times scheduled after the episode's event; not simulated here.
  std::vector<double> deferred_disruptions;

  friend bool operator==(const ExperimentLog&, const ExperimentLog&) = default;
};

struct TechniqueSummary {
  int iterations = 0;
  double total_elapsed_s = 0.0;
  double total_co2_g = 0.0;
  std::int64_t total_human_interactions = 0;
  bool recovered = false;

  friend bool operator==(const TechniqueSummary&, const TechniqueSummary&) = default;
};

// Side-by-side episode summaries with field-wise deltas (WSM minus Game) and
// the fraction of common iteration indices on which both techniques picked
// the same action kind.
struct ComparisonReport {
  std::string scenario;
  std::uint64_t seed = 0;
  TechniqueSummary wsm;
  TechniqueSummary game;
  int delta_iterations = 0;
  double delta_elapsed_s = 0.0;
  double delta_co2_g = 0.0;
  std::int64_t delta_human_interactions = 0;
  double action_agreement_rate = 0.0;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

struct RunOptions {
  Technique technique = Technique::Wsm;
  WsmMode wsm_mode = FixedWeights{WeightVector::equal()};
  int max_iterations = 100;
  double smoothing = 0.5;  // EWMA factor for attribute re-estimation
  int game_max_rounds = 10;
  std::optional<std::uint64_t> seed_override;
};

// Drives one full episode: steady stepping until the first scheduled
// disruption, detection, then the decide-act-measure loop under the chosen
// technique until recovery or max_iterations. Fully deterministic given the
// seed. Attribute estimates start from the scenario's action definitions and
// are refreshed after each execution by EWMA over the observed values.
ExperimentLog run_experiment(const ScenarioConfig& cfg, const RunOptions& options);

// Builds the report from one WSM log and one Game log sharing scenario and
// seed (DomainError otherwise). The agreement rate over an empty common index
// range is 1.
ComparisonReport compare(const std::vector<ExperimentLog>& logs);

enum class EmitFormat { Csv, Json };

EmitFormat emit_format_from_string(std::string_view name);

// CSV columns, in order: technique, iteration, state_before, state_after,
// action_id, action_kind, perf_start, perf_end, e_t_est, e_co2_est, h_est,
// epsilon, p, q, rounds, w_t, w_h, w_co2, score_selected, clock_start_s,
// clock_end_s, co2_cum_g, human_cum. Fields not applicable to the record's
// technique stay empty. Numbers are written as the shortest decimal that
// parses back to the same value, so emission is byte-stable.
inline constexpr std::string_view kLogCsvHeader =
    "technique,iteration,state_before,state_after,action_id,action_kind,"
    "perf_start,perf_end,e_t_est,e_co2_est,h_est,epsilon,p,q,rounds,"
    "w_t,w_h,w_co2,score_selected,clock_start_s,clock_end_s,co2_cum_g,human_cum";

void emit_csv(const ExperimentLog& log, std::ostream& os);
void emit_json(const ExperimentLog& log, std::ostream& os);
void emit_csv(const ComparisonReport& report, std::ostream& os);
void emit_json(const ComparisonReport& report, std::ostream& os);

void emit(const ExperimentLog& log, EmitFormat format, const std::filesystem::path& path);
void emit(const ComparisonReport& report, EmitFormat format, const std::filesystem::path& path);

// Reads back a JSON log emitted by emit_json; the result compares equal to
// the emitted value.
ExperimentLog load_log(const std::filesystem::path& path);

// Candidate actions from a JSON file of the form
//   {"actions": [{"id": ..., "kind": ..., "e_t": ..., "h": ..., "e_co2": ...}, ...]}
std::vector<CandidateAction> load_actions(const std::filesystem::path& path);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace gresilience

#endif  // GRESILIENCE_HARNESS_HPP
