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

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "gresilience/errors.hpp"
#include "gresilience/harness.hpp"

namespace gresilience {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer;
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), ptr);
}

EmitFormat emit_format_from_string(std::string_view name) {
  if (name == "csv") return EmitFormat::Csv;
  if (name == "json") return EmitFormat::Json;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

void emit_csv(const ExperimentLog& log, std::ostream& os) {
  os << kLogCsvHeader << '\n';
  for (const IterationRecord& r : log.records) {
    std::string p, q, rounds, w_t, w_h, w_co2, score_selected;
    if (const auto* game = std::get_if<GameIterationDetail>(&r.detail)) {
      p = format_double(game->p);
      q = format_double(game->q);
      rounds = std::to_string(game->rounds);
    } else {
      const auto& wsm = std::get<WsmIterationDetail>(r.detail);
      w_t = format_double(wsm.weights.w_t);
      w_h = format_double(wsm.weights.w_h);
      w_co2 = format_double(wsm.weights.w_co2);
      score_selected = format_double(wsm.score_selected);
    }
    os << to_string(r.technique) << ',' << r.iteration << ',' << to_string(r.state_before)
       << ',' << to_string(r.state_after) << ',' << r.action_id << ','
       << to_string(r.action_kind) << ',' << format_double(r.perf_start) << ','
       << format_double(r.perf_end) << ',' << format_double(r.estimate.e_t) << ','
       << format_double(r.estimate.e_co2) << ',' << format_double(r.estimate.h) << ','
       << format_double(r.epsilon) << ',' << p << ',' << q << ',' << rounds << ',' << w_t
       << ',' << w_h << ',' << w_co2 << ',' << score_selected << ','
       << format_double(r.clock_start_s) << ',' << format_double(r.clock_end_s) << ','
       << format_double(r.co2_cum_g) << ',' << r.human_cum << '\n';
  }
}

namespace {

ordered_json weights_to_json(const WeightVector& w) {
  return ordered_json{{"w_t", w.w_t}, {"w_h", w.w_h}, {"w_co2", w.w_co2}};
}

ordered_json record_to_json(const IterationRecord& r) {
  ordered_json j;
  j["technique"] = to_string(r.technique);
  j["iteration"] = r.iteration;
  j["state_before"] = to_string(r.state_before);
  j["state_after"] = to_string(r.state_after);
  j["action_id"] = r.action_id;
  j["action_kind"] = to_string(r.action_kind);
  j["perf_start"] = r.perf_start;
  j["perf_end"] = r.perf_end;
  j["e_t_est"] = r.estimate.e_t;
  j["e_co2_est"] = r.estimate.e_co2;
  j["h_est"] = r.estimate.h;
  j["epsilon"] = r.epsilon;
  if (const auto* game = std::get_if<GameIterationDetail>(&r.detail)) {
    j["game"] = ordered_json{{"p", game->p},
                             {"q", game->q},
                             {"rounds", game->rounds},
                             {"psne_fallback", game->psne_fallback}};
  } else {
    const auto& wsm = std::get<WsmIterationDetail>(r.detail);
    ordered_json scores = ordered_json::array();
    for (const ScoredAction& s : wsm.scores) {
      scores.push_back(ordered_json{
          {"id", s.id}, {"score", s.score}, {"weights", weights_to_json(s.weights)}});
    }
    j["wsm"] = ordered_json{{"weights", weights_to_json(wsm.weights)},
                            {"scores", scores},
                            {"score_selected", wsm.score_selected}};
  }
  j["clock_start_s"] = r.clock_start_s;
  j["clock_end_s"] = r.clock_end_s;
  j["co2_cum_g"] = r.co2_cum_g;
  j["human_cum"] = r.human_cum;
  return j;
}

ordered_json log_to_json(const ExperimentLog& log) {
  ordered_json j;
  j["scenario"] = log.scenario;
  j["seed"] = log.seed;
  j["technique"] = to_string(log.technique);
  ordered_json records = ordered_json::array();
  for (const IterationRecord& r : log.records) records.push_back(record_to_json(r));
  j["records"] = records;
  ordered_json timeline = ordered_json::object();
  if (log.summary.timeline.t_e) timeline["t_e"] = *log.summary.timeline.t_e;
  if (log.summary.timeline.t_d) timeline["t_d"] = *log.summary.timeline.t_d;
  if (log.summary.timeline.t_r) timeline["t_r"] = *log.summary.timeline.t_r;
  j["summary"] = ordered_json{{"iterations_to_recover", log.summary.iterations_to_recover},
                              {"total_elapsed_s", log.summary.total_elapsed_s},
                              {"total_co2_g", log.summary.total_co2_g},
                              {"total_human_interactions", log.summary.total_human_interactions},
                              {"recovered", log.summary.recovered},
                              {"timeline", timeline}};
  j["deferred_disruptions"] = log.deferred_disruptions;
  return j;
}

}  // namespace

void emit_json(const ExperimentLog& log, std::ostream& os) {
  os << log_to_json(log).dump(2) << '\n';
}

void emit_csv(const ComparisonReport& report, std::ostream& os) {
  os << "scenario,seed,wsm_iterations,wsm_elapsed_s,wsm_co2_g,wsm_human,wsm_recovered,"
        "game_iterations,game_elapsed_s,game_co2_g,game_human,game_recovered,"
        "delta_iterations,delta_elapsed_s,delta_co2_g,delta_human,agreement_rate\n";
  const auto bool_text = [](bool b) { return b ? "true" : "false"; };
  os << report.scenario << ',' << report.seed << ',' << report.wsm.iterations << ','
     << format_double(report.wsm.total_elapsed_s) << ',' << format_double(report.wsm.total_co2_g)
     << ',' << report.wsm.total_human_interactions << ',' << bool_text(report.wsm.recovered)
     << ',' << report.game.iterations << ',' << format_double(report.game.total_elapsed_s) << ','
     << format_double(report.game.total_co2_g) << ',' << report.game.total_human_interactions
     << ',' << bool_text(report.game.recovered) << ',' << report.delta_iterations << ','
     << format_double(report.delta_elapsed_s) << ',' << format_double(report.delta_co2_g) << ','
     << report.delta_human_interactions << ',' << format_double(report.action_agreement_rate)
     << '\n';
}

namespace {

ordered_json technique_summary_to_json(const TechniqueSummary& s) {
  return ordered_json{{"iterations", s.iterations},
                      {"total_elapsed_s", s.total_elapsed_s},
                      {"total_co2_g", s.total_co2_g},
                      {"total_human_interactions", s.total_human_interactions},
                      {"recovered", s.recovered}};
}

}  // namespace

void emit_json(const ComparisonReport& report, std::ostream& os) {
  ordered_json j;
  j["scenario"] = report.scenario;
  j["seed"] = report.seed;
  j["wsm"] = technique_summary_to_json(report.wsm);
  j["game"] = technique_summary_to_json(report.game);
  j["deltas"] = ordered_json{{"iterations", report.delta_iterations},
                             {"elapsed_s", report.delta_elapsed_s},
                             {"co2_g", report.delta_co2_g},
                             {"human_interactions", report.delta_human_interactions}};
  j["action_agreement_rate"] = report.action_agreement_rate;
  os << j.dump(2) << '\n';
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write to '" + path.string() + "'");
  }
  return out;
}

}  // namespace

void emit(const ExperimentLog& log, EmitFormat format, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  format == EmitFormat::Csv ? emit_csv(log, out) : emit_json(log, out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

void emit(const ComparisonReport& report, EmitFormat format,
          const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  format == EmitFormat::Csv ? emit_csv(report, out) : emit_json(report, out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

namespace {

using nlohmann::json;

[[noreturn]] void load_fail(const std::filesystem::path& path, const std::string& message) {
  throw ConfigError(path.string() + ": " + message);
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) load_fail(path, "cannot open file");
  json root;
  try {
    in >> root;
  } catch (const json::parse_error& e) {
    load_fail(path, std::string("invalid JSON: ") + e.what());
  }
  return root;
}

WeightVector weights_from_json(const json& j) {
  return {j.at("w_t").get<double>(), j.at("w_h").get<double>(), j.at("w_co2").get<double>()};
}

IterationRecord record_from_json(const json& j) {
  IterationRecord r;
  r.technique = technique_from_string(j.at("technique").get<std::string>());
  r.iteration = j.at("iteration").get<int>();
  r.state_before = recovery_state_from_string(j.at("state_before").get<std::string>());
  r.state_after = recovery_state_from_string(j.at("state_after").get<std::string>());
  r.action_id = j.at("action_id").get<std::string>();
  r.action_kind = action_kind_from_string(j.at("action_kind").get<std::string>());
  r.perf_start = j.at("perf_start").get<double>();
  r.perf_end = j.at("perf_end").get<double>();
  r.estimate = {j.at("e_t_est").get<double>(), j.at("e_co2_est").get<double>(),
                j.at("h_est").get<double>()};
  r.epsilon = j.at("epsilon").get<double>();
  if (j.contains("game")) {
    const json& g = j.at("game");
    r.detail = GameIterationDetail{g.at("p").get<double>(), g.at("q").get<double>(),
                                   g.at("rounds").get<int>(),
                                   g.at("psne_fallback").get<bool>()};
  } else {
    const json& w = j.at("wsm");
    WsmIterationDetail detail;
    detail.weights = weights_from_json(w.at("weights"));
    for (const json& s : w.at("scores")) {
      detail.scores.push_back({s.at("id").get<std::string>(), s.at("score").get<double>(),
                               weights_from_json(s.at("weights"))});
    }
    detail.score_selected = w.at("score_selected").get<double>();
    r.detail = std::move(detail);
  }
  r.clock_start_s = j.at("clock_start_s").get<double>();
  r.clock_end_s = j.at("clock_end_s").get<double>();
  r.co2_cum_g = j.at("co2_cum_g").get<double>();
  r.human_cum = j.at("human_cum").get<std::int64_t>();
  return r;
}

}  // namespace

ExperimentLog load_log(const std::filesystem::path& path) {
  const json root = parse_file(path);
  try {
    ExperimentLog log;
    log.scenario = root.at("scenario").get<std::string>();
    log.seed = root.at("seed").get<std::uint64_t>();
    log.technique = technique_from_string(root.at("technique").get<std::string>());
    for (const json& r : root.at("records")) log.records.push_back(record_from_json(r));
    const json& summary = root.at("summary");
    log.summary.iterations_to_recover = summary.at("iterations_to_recover").get<int>();
    log.summary.total_elapsed_s = summary.at("total_elapsed_s").get<double>();
    log.summary.total_co2_g = summary.at("total_co2_g").get<double>();
    log.summary.total_human_interactions =
        summary.at("total_human_interactions").get<std::int64_t>();
    log.summary.recovered = summary.at("recovered").get<bool>();
    const json& timeline = summary.at("timeline");
    if (timeline.contains("t_e")) log.summary.timeline.t_e = timeline.at("t_e").get<double>();
    if (timeline.contains("t_d")) log.summary.timeline.t_d = timeline.at("t_d").get<double>();
    if (timeline.contains("t_r")) log.summary.timeline.t_r = timeline.at("t_r").get<double>();
    for (const json& t : root.at("deferred_disruptions")) {
      log.deferred_disruptions.push_back(t.get<double>());
    }
    return log;
  } catch (const json::exception& e) {
    load_fail(path, std::string("not a valid experiment log: ") + e.what());
  }
}

std::vector<CandidateAction> load_actions(const std::filesystem::path& path) {
  const json root = parse_file(path);
  if (!root.is_object() || !root.contains("actions") || !root.at("actions").is_array()) {
    load_fail(path, "expected an object with an 'actions' array");
  }
  std::vector<CandidateAction> actions;
  std::unordered_set<std::string> ids;
  for (const json& entry : root.at("actions")) {
    if (!entry.is_object()) load_fail(path, "actions entries must be objects");
    for (auto it = entry.begin(); it != entry.end(); ++it) {
      static const std::unordered_set<std::string> known = {"id", "kind", "e_t", "h", "e_co2"};
      if (!known.contains(it.key())) {
        load_fail(path, "unknown field '" + it.key() + "' in actions entry");
      }
    }
    try {
      CandidateAction action;
      action.id = entry.at("id").get<std::string>();
      action.kind = action_kind_from_string(entry.at("kind").get<std::string>());
      action.attrs = {entry.at("e_t").get<double>(), entry.at("e_co2").get<double>(),
                      entry.at("h").get<double>()};
      action.attrs.validate();
      if (!ids.insert(action.id).second) {
        load_fail(path, "duplicate action id '" + action.id + "'");
      }
      actions.push_back(std::move(action));
    } catch (const json::exception& e) {
      load_fail(path, std::string("invalid actions entry: ") + e.what());
    } catch (const DomainError& e) {
      load_fail(path, std::string("invalid actions entry: ") + e.what());
    }
  }
  if (actions.empty()) load_fail(path, "'actions' must not be empty");
  return actions;
}

}  // namespace gresilience
