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

#include "gresilience/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gresilience/errors.hpp"

namespace gresilience {

std::string_view to_string(DisruptionKind kind) {
  return kind == DisruptionKind::LightLoss ? "LightLoss" : "ExtraHuman";
}

DisruptionKind disruption_kind_from_string(std::string_view name) {
  if (name == "LightLoss") return DisruptionKind::LightLoss;
  if (name == "ExtraHuman") return DisruptionKind::ExtraHuman;
  throw ConfigError("unknown disruption kind '" + std::string(name) + "'");
}

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& context, const std::string& message) {
  throw ConfigError(context.empty() ? message : context + ": " + message);
}

void reject_unknown_fields(const json& obj, std::initializer_list<std::string_view> known,
                           const std::string& context) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end()) {
      fail(context, "unknown field '" + it.key() + "'");
    }
  }
}

const json& require_field(const json& obj, const char* field, const std::string& context) {
  if (!obj.contains(field)) fail(context, std::string("missing field '") + field + "'");
  return obj.at(field);
}

double require_number(const json& obj, const char* field, const std::string& context) {
  const json& v = require_field(obj, field, context);
  if (!v.is_number()) fail(context, std::string("field '") + field + "' must be a number");
  return v.get<double>();
}

std::int64_t require_integer(const json& obj, const char* field, const std::string& context) {
  const json& v = require_field(obj, field, context);
  if (!v.is_number_integer()) {
    fail(context, std::string("field '") + field + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

std::string require_string(const json& obj, const char* field, const std::string& context) {
  const json& v = require_field(obj, field, context);
  if (!v.is_string()) fail(context, std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

ActionSpec parse_action_spec(const json& obj, const std::string& context) {
  if (!obj.is_object()) fail(context, "must be an object");
  reject_unknown_fields(obj, {"duration", "power", "human_interactions", "learning_gain"},
                        context);
  ActionSpec spec;
  spec.duration_s = require_number(obj, "duration", context);
  spec.power_w = require_number(obj, "power", context);
  spec.human_interactions = static_cast<int>(require_integer(obj, "human_interactions", context));
  spec.learning_gain = require_number(obj, "learning_gain", context);
  return spec;
}

Disruption parse_disruption(const json& obj, const std::string& context) {
  if (!obj.is_object()) fail(context, "must be an object");
  reject_unknown_fields(obj, {"time", "kind", "perf_drop", "epsilon_drop"}, context);
  Disruption d;
  d.time_s = require_number(obj, "time", context);
  d.kind = disruption_kind_from_string(require_string(obj, "kind", context));
  d.perf_drop = require_number(obj, "perf_drop", context);
  d.epsilon_drop = require_number(obj, "epsilon_drop", context);
  return d;
}

void validate_action_spec(const ActionSpec& spec, const std::string& prefix) {
  if (!std::isfinite(spec.duration_s) || spec.duration_s <= 0.0) {
    throw ConfigError(prefix + ".duration must be positive");
  }
  if (!std::isfinite(spec.power_w) || spec.power_w < 0.0) {
    throw ConfigError(prefix + ".power must be non-negative");
  }
  if (spec.human_interactions < 0) {
    throw ConfigError(prefix + ".human_interactions must be non-negative");
  }
  if (!std::isfinite(spec.learning_gain) || spec.learning_gain < 0.0 ||
      spec.learning_gain > 1.0) {
    throw ConfigError(prefix + ".learning_gain must lie in [0, 1]");
  }
}

bool in_unit_interval(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

}  // namespace

void ScenarioConfig::validate() const {
  if (!in_unit_interval(initial_perf)) throw ConfigError("initial_perf must lie in [0, 1]");
  if (!in_unit_interval(steady_threshold)) {
    throw ConfigError("steady_threshold must lie in [0, 1]");
  }
  if (!in_unit_interval(recovery_threshold)) {
    throw ConfigError("recovery_threshold must lie in [0, 1]");
  }
  if (recovery_threshold > steady_threshold) {
    throw ConfigError("recovery_threshold must not exceed steady_threshold");
  }
  if (!in_unit_interval(initial_epsilon)) throw ConfigError("initial_epsilon must lie in [0, 1]");
  if (!std::isfinite(tick_s) || tick_s <= 0.0) throw ConfigError("tick must be positive");
  if (!std::isfinite(carbon_intensity) || carbon_intensity < 0.0) {
    throw ConfigError("carbon_intensity must be non-negative");
  }
  if (!std::isfinite(noise_amplitude) || noise_amplitude < 0.0) {
    throw ConfigError("noise_amplitude must be non-negative");
  }
  validate_action_spec(learning, "actions.learning");
  validate_action_spec(operating, "actions.operating");
  double previous_time = -1.0;
  for (const Disruption& d : disruptions) {
    if (!std::isfinite(d.time_s) || d.time_s < 0.0) {
      throw ConfigError("disruptions.time must be non-negative");
    }
    if (d.time_s <= previous_time) {
      throw ConfigError("disruptions must have strictly increasing times");
    }
    previous_time = d.time_s;
    if (!in_unit_interval(d.perf_drop)) throw ConfigError("disruptions.perf_drop must lie in [0, 1]");
    if (!in_unit_interval(d.epsilon_drop)) {
      throw ConfigError("disruptions.epsilon_drop must lie in [0, 1]");
    }
  }
}

ScenarioConfig ScenarioConfig::from_json_text(std::string_view text,
                                              std::string_view fallback_name) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("scenario must be a JSON object");
  reject_unknown_fields(root,
                        {"name", "initial_perf", "steady_threshold", "recovery_threshold",
                         "initial_epsilon", "tick", "disruptions", "actions",
                         "carbon_intensity", "noise_amplitude", "seed"},
                        "");
  ScenarioConfig cfg;
  cfg.name = root.contains("name") ? require_string(root, "name", "") : std::string(fallback_name);
  cfg.initial_perf = require_number(root, "initial_perf", "");
  cfg.steady_threshold = require_number(root, "steady_threshold", "");
  cfg.recovery_threshold = require_number(root, "recovery_threshold", "");
  cfg.initial_epsilon = require_number(root, "initial_epsilon", "");
  cfg.tick_s = require_number(root, "tick", "");
  cfg.carbon_intensity = require_number(root, "carbon_intensity", "");
  cfg.noise_amplitude =
      root.contains("noise_amplitude") ? require_number(root, "noise_amplitude", "") : 0.0;
  const std::int64_t seed = require_integer(root, "seed", "");
  if (seed < 0) throw ConfigError("seed must be non-negative");
  cfg.seed = static_cast<std::uint64_t>(seed);

  const json& actions = require_field(root, "actions", "");
  if (!actions.is_object()) throw ConfigError("actions must be an object");
  reject_unknown_fields(actions, {"learning", "operating"}, "actions");
  cfg.learning = parse_action_spec(require_field(actions, "learning", "actions"),
                                   "actions.learning");
  cfg.operating = parse_action_spec(require_field(actions, "operating", "actions"),
                                    "actions.operating");

  if (root.contains("disruptions")) {
    const json& disruptions = root.at("disruptions");
    if (!disruptions.is_array()) throw ConfigError("disruptions must be an array");
    for (std::size_t i = 0; i < disruptions.size(); ++i) {
      cfg.disruptions.push_back(
          parse_disruption(disruptions.at(i), "disruptions[" + std::to_string(i) + "]"));
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open scenario file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return from_json_text(buffer.str(), path.stem().string());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

SimState SimState::initial(const ScenarioConfig& cfg) {
  SimState s;
  s.perf = cfg.initial_perf;
  s.epsilon = cfg.initial_epsilon;
  s.rng = Rng(cfg.seed);
  return s;
}

void inject_disruption(SimState& s, const Disruption& d) {
  if (!in_unit_interval(d.perf_drop) || !in_unit_interval(d.epsilon_drop)) {
    throw DomainError("disruption drops must lie in [0, 1]");
  }
  s.perf = std::max(0.0, s.perf - d.perf_drop);
  s.epsilon = std::max(0.0, s.epsilon - d.epsilon_drop);
}

AttributeVector execute_action(SimState& s, ActionKind kind, const ScenarioConfig& cfg) {
  const ActionSpec& act = cfg.action(kind);
  s.clock_s += act.duration_s;
  if (kind == ActionKind::Learning) {
    s.epsilon = std::min(1.0, s.epsilon + act.learning_gain);
  }
  const double energy_wh = act.power_w * act.duration_s / 3600.0;
  s.energy_wh += energy_wh;
  s.co2_g = s.energy_wh * cfg.carbon_intensity;
  s.human_interactions += act.human_interactions;

  // Performance tracks confidence, up to bounded sensing noise.
  const double noise = s.rng.uniform(-cfg.noise_amplitude, cfg.noise_amplitude);
  s.perf = std::clamp(s.epsilon + noise, 0.0, 1.0);

  return {act.duration_s, energy_wh * cfg.carbon_intensity,
          static_cast<double>(act.human_interactions)};
}

double measure(SimState& s, const ScenarioConfig& cfg) {
  const double noise = s.rng.uniform(-cfg.noise_amplitude, cfg.noise_amplitude);
  return std::clamp(s.perf + noise, 0.0, 1.0);
}

bool detect_degradation(double sample, const ScenarioConfig& cfg) {
  return sample < cfg.steady_threshold;
}

}  // namespace gresilience
