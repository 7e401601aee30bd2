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

#include "gresilience/harness.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "gresilience/errors.hpp"

namespace gresilience {

std::string_view to_string(Technique technique) {
  return technique == Technique::Wsm ? "WSM" : "Game";
}

Technique technique_from_string(std::string_view name) {
  if (name == "WSM") return Technique::Wsm;
  if (name == "Game") return Technique::Game;
  throw DomainError("unknown technique '" + std::string(name) + "'");
}

namespace {

// Prior attribute estimates derived from the scenario's action definition:
// run time is the configured duration, CO2 the energy the action would draw
// times the carbon intensity, labor the configured interaction count.
AttributeVector initial_estimate(const ScenarioConfig& cfg, ActionKind kind) {
  const ActionSpec& act = cfg.action(kind);
  return {act.duration_s, act.power_w * act.duration_s / 3600.0 * cfg.carbon_intensity,
          static_cast<double>(act.human_interactions)};
}

struct Decision {
  std::string action_id;
  ActionKind kind = ActionKind::Learning;
  std::variant<WsmIterationDetail, GameIterationDetail> detail;
};

Decision decide(const std::array<CandidateAction, 2>& candidates, double epsilon,
                const RunOptions& options, Rng& rng) {
  const Confidence confidence(epsilon);
  Decision decision;
  if (options.technique == Technique::Wsm) {
    WsmDecision wsm = select_action(candidates, confidence, options.wsm_mode);
    const auto selected =
        std::find_if(wsm.scored.begin(), wsm.scored.end(),
                     [&](const ScoredAction& s) { return s.id == wsm.selected_id; });
    const auto chosen =
        std::find_if(candidates.begin(), candidates.end(),
                     [&](const CandidateAction& c) { return c.id == wsm.selected_id; });
    decision.action_id = wsm.selected_id;
    decision.kind = chosen->kind;
    decision.detail =
        WsmIterationDetail{selected->weights, std::move(wsm.scored), selected->score};
  } else {
    const PayoffMatrix matrix = build_payoff_matrix(candidates[0], candidates[1], confidence);
    const MixedStrategy mixed = solve_msne(matrix);
    const PlayResult outcome = play(matrix, mixed, rng, options.game_max_rounds);
    decision.action_id = outcome.action_id;
    decision.kind = outcome.kind;
    decision.detail =
        GameIterationDetail{mixed.p, mixed.q, outcome.rounds, outcome.psne_fallback};
  }
  return decision;
}

}  // namespace

ExperimentLog run_experiment(const ScenarioConfig& cfg, const RunOptions& options) {
  cfg.validate();
  if (options.max_iterations < 1) {
    throw DomainError("max_iterations must be >= 1");
  }
  if (!(options.smoothing >= 0.0 && options.smoothing <= 1.0)) {
    throw DomainError("smoothing must lie in [0, 1]");
  }
  if (options.technique == Technique::Game && options.game_max_rounds < 1) {
    throw DomainError("game_max_rounds must be >= 1");
  }
  if (const auto* fixed = std::get_if<FixedWeights>(&options.wsm_mode)) {
    fixed->weights.validate();
  }
  ScenarioConfig scenario = cfg;
  if (options.seed_override) scenario.seed = *options.seed_override;

  ExperimentLog log;
  log.scenario = scenario.name;
  log.seed = scenario.seed;
  log.technique = options.technique;

  // Nothing scheduled: the episode is trivially healthy.
  if (scenario.disruptions.empty()) {
    log.summary.recovered = true;
    return log;
  }

  SimState sim = SimState::initial(scenario);
  RecoveryState state = RecoveryState::Steady;

  const Disruption& event = scenario.disruptions.front();
  for (std::size_t i = 1; i < scenario.disruptions.size(); ++i) {
    log.deferred_disruptions.push_back(scenario.disruptions[i].time_s);
  }

  // Steady monitoring until the event fires.
  while (sim.clock_s < event.time_s) {
    sim.clock_s += scenario.tick_s;
    (void)measure(sim, scenario);
  }
  log.summary.timeline.t_e = event.time_s;
  inject_disruption(sim, event);

  const double post_event_sample = measure(sim, scenario);
  if (!detect_degradation(post_event_sample, scenario)) {
    // The event never pushed performance out of the steady band.
    log.summary.recovered = true;
    return log;
  }
  state = transition(state, RecoveryEvent::degradation_detected());
  log.summary.timeline.t_d = sim.clock_s;
  state = transition(state, RecoveryEvent::trade_off_requested());

  AttributeVector learning_estimate = initial_estimate(scenario, ActionKind::Learning);
  AttributeVector operating_estimate = initial_estimate(scenario, ActionKind::Operating);

  bool recovered = false;
  for (int iteration = 1; iteration <= options.max_iterations && !recovered; ++iteration) {
    IterationRecord record;
    record.technique = options.technique;
    record.iteration = iteration;
    record.state_before = state;
    record.perf_start = sim.perf;
    record.clock_start_s = sim.clock_s;
    record.epsilon = sim.epsilon;

    // Re-decide every pass with the refreshed estimates.
    const std::array<CandidateAction, 2> candidates = {
        CandidateAction{"a1", ActionKind::Learning, learning_estimate},
        CandidateAction{"a2", ActionKind::Operating, operating_estimate},
    };
    Decision decision = decide(candidates, sim.epsilon, options, sim.rng);
    record.action_id = decision.action_id;
    record.action_kind = decision.kind;
    record.estimate =
        decision.kind == ActionKind::Learning ? learning_estimate : operating_estimate;
    record.detail = std::move(decision.detail);

    state = transition(state, state == RecoveryState::TradeOff
                                  ? RecoveryEvent::action_selected(decision.kind)
                                  : RecoveryEvent::perf_not_acceptable(decision.kind));

    const AttributeVector observed = execute_action(sim, decision.kind, scenario);
    state = transition(state, RecoveryEvent::measurement_taken());

    const double sample = measure(sim, scenario);
    record.perf_end = sample;
    record.clock_end_s = sim.clock_s;
    record.co2_cum_g = sim.co2_g;
    record.human_cum = sim.human_interactions;

    AttributeVector& estimate =
        decision.kind == ActionKind::Learning ? learning_estimate : operating_estimate;
    estimate.e_t = update_estimate(estimate.e_t, observed.e_t, options.smoothing);
    estimate.e_co2 = update_estimate(estimate.e_co2, observed.e_co2, options.smoothing);
    estimate.h = update_estimate(estimate.h, observed.h, options.smoothing);

    if (sample >= scenario.recovery_threshold) {
      state = transition(state, RecoveryEvent::perf_acceptable());
      log.summary.timeline.t_r = sim.clock_s;
      recovered = true;
    }
    record.state_after = state;
    log.records.push_back(std::move(record));
  }

  log.summary.recovered = recovered;
  log.summary.iterations_to_recover = static_cast<int>(log.records.size());
  if (!log.records.empty()) {
    log.summary.total_elapsed_s =
        log.records.back().clock_end_s - log.records.front().clock_start_s;
    log.summary.total_co2_g = log.records.back().co2_cum_g;
    log.summary.total_human_interactions = log.records.back().human_cum;
  }
  log.summary.timeline.validate();
  return log;
}

namespace {

TechniqueSummary technique_summary(const ExperimentLog& log) {
  return {log.summary.iterations_to_recover, log.summary.total_elapsed_s,
          log.summary.total_co2_g, log.summary.total_human_interactions,
          log.summary.recovered};
}

}  // namespace

ComparisonReport compare(const std::vector<ExperimentLog>& logs) {
  if (logs.size() < 2) {
    throw DomainError("compare requires at least two logs");
  }
  for (const ExperimentLog& log : logs) {
    if (log.scenario != logs.front().scenario || log.seed != logs.front().seed) {
      throw DomainError("compare requires logs sharing scenario and seed");
    }
  }
  const ExperimentLog* wsm = nullptr;
  const ExperimentLog* game = nullptr;
  for (const ExperimentLog& log : logs) {
    if (log.technique == Technique::Wsm && wsm == nullptr) wsm = &log;
    if (log.technique == Technique::Game && game == nullptr) game = &log;
  }
  if (wsm == nullptr || game == nullptr) {
    throw DomainError("compare requires one WSM log and one Game log");
  }

  ComparisonReport report;
  report.scenario = logs.front().scenario;
  report.seed = logs.front().seed;
  report.wsm = technique_summary(*wsm);
  report.game = technique_summary(*game);
  report.delta_iterations = report.wsm.iterations - report.game.iterations;
  report.delta_elapsed_s = report.wsm.total_elapsed_s - report.game.total_elapsed_s;
  report.delta_co2_g = report.wsm.total_co2_g - report.game.total_co2_g;
  report.delta_human_interactions =
      report.wsm.total_human_interactions - report.game.total_human_interactions;

  const std::size_t common = std::min(wsm->records.size(), game->records.size());
  std::size_t agreements = 0;
  for (std::size_t i = 0; i < common; ++i) {
    if (wsm->records[i].action_kind == game->records[i].action_kind) ++agreements;
  }
  report.action_agreement_rate =
      common == 0 ? 1.0 : static_cast<double>(agreements) / static_cast<double>(common);
  return report;
}

}  // namespace gresilience
