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

#ifndef GRESILIENCE_SIMULATOR_HPP
#define GRESILIENCE_SIMULATOR_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "gresilience/measurement.hpp"
#include "gresilience/rng.hpp"

namespace gresilience {

enum class DisruptionKind { LightLoss, ExtraHuman };

std::string_view to_string(DisruptionKind kind);
DisruptionKind disruption_kind_from_string(std::string_view name);

struct Disruption {
  double time_s = 0.0;
  DisruptionKind kind = DisruptionKind::LightLoss;
  double perf_drop = 0.0;
  double epsilon_drop = 0.0;

  friend bool operator==(const Disruption&, const Disruption&) = default;
};

// Execution model of one recovery action: wall time, electrical draw, human
// involvement and the confidence gained (only Learning consumes the gain).
struct ActionSpec {
  double duration_s = 1.0;
  double power_w = 0.0;
  int human_interactions = 0;
  double learning_gain = 0.0;

  friend bool operator==(const ActionSpec&, const ActionSpec&) = default;
};

// Declarative scenario: initial conditions, detection/recovery thresholds,
// the disruption schedule and the two action definitions. Loaded from a JSON
// file with these exact field names; unknown fields are rejected.
struct ScenarioConfig {
  std::string name = "scenario";
  double initial_perf = 1.0;
  double steady_threshold = 0.0;
  double recovery_threshold = 0.0;
  double initial_epsilon = 1.0;
  double tick_s = 1.0;
  std::vector<Disruption> disruptions;
  ActionSpec learning;
  ActionSpec operating;
  double carbon_intensity = 0.0;  // grams CO2 per watt-hour
  double noise_amplitude = 0.0;
  std::uint64_t seed = 0;

  const ActionSpec& action(ActionKind kind) const {
    return kind == ActionKind::Learning ? learning : operating;
  }

  void validate() const;  // ConfigError naming the offending field

  static ScenarioConfig from_json_text(std::string_view text,
                                       std::string_view fallback_name = "scenario");
  static ScenarioConfig load(const std::filesystem::path& path);

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Evolving simulation state. CO2 is kept exactly proportional to the energy
// counter, so the accounting identity co2_g == energy_wh * carbon_intensity
// holds at every step.
struct SimState {
  double clock_s = 0.0;
  double perf = 0.0;
  double epsilon = 0.0;
  double energy_wh = 0.0;
  double co2_g = 0.0;
  std::int64_t human_interactions = 0;
  Rng rng;

  static SimState initial(const ScenarioConfig& cfg);

  friend bool operator==(const SimState&, const SimState&) = default;
};

// Applies the performance and confidence drops (clamped at 0); clock and
// counters are untouched.
void inject_disruption(SimState& s, const Disruption& d);

// Runs one action: advances the clock by its duration, accumulates energy,
// CO2 and human interactions, raises epsilon by the learning gain (Learning
// only) and sets perf to epsilon plus bounded noise. Returns the observed
// attribute vector (duration, emitted CO2, interactions) for estimator
// updates.
AttributeVector execute_action(SimState& s, ActionKind kind, const ScenarioConfig& cfg);

// Samples the current performance with bounded noise, clamped to [0, 1].
double measure(SimState& s, const ScenarioConfig& cfg);

// True iff the sample sits strictly below the steady threshold.
bool detect_degradation(double sample, const ScenarioConfig& cfg);

}  // namespace gresilience

#endif  // GRESILIENCE_SIMULATOR_HPP
