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

#ifndef GRESILIENCE_RECOVERY_FSM_HPP
#define GRESILIENCE_RECOVERY_FSM_HPP

#include <optional>
#include <string>
#include <string_view>

#include "gresilience/measurement.hpp"

namespace gresilience {

enum class RecoveryState {
  Steady,
  Disruptive,
  TradeOff,
  Learning,
  Operating,
  Measuring,
  Recovered,
};

std::string_view to_string(RecoveryState state);
RecoveryState recovery_state_from_string(std::string_view name);

// Events driving the recovery machine. ActionSelected and PerfNotAcceptable
// carry the action kind to move to (for the latter, the kind the measure-act
// loop goes back to).
class RecoveryEvent {
 public:
  enum class Type {
    DegradationDetected,
    PolicyRecovered,
    TradeOffRequested,
    ActionSelected,
    MeasurementTaken,
    PerfAcceptable,
    PerfNotAcceptable,
  };

  static RecoveryEvent degradation_detected() { return RecoveryEvent(Type::DegradationDetected); }
  static RecoveryEvent policy_recovered() { return RecoveryEvent(Type::PolicyRecovered); }
  static RecoveryEvent trade_off_requested() { return RecoveryEvent(Type::TradeOffRequested); }
  static RecoveryEvent action_selected(ActionKind kind) {
    return RecoveryEvent(Type::ActionSelected, kind);
  }
  static RecoveryEvent measurement_taken() { return RecoveryEvent(Type::MeasurementTaken); }
  static RecoveryEvent perf_acceptable() { return RecoveryEvent(Type::PerfAcceptable); }
  static RecoveryEvent perf_not_acceptable(ActionKind loop_back) {
    return RecoveryEvent(Type::PerfNotAcceptable, loop_back);
  }

  Type type() const { return type_; }

  // Kind payload; DomainError for events that carry none.
  ActionKind action_kind() const;

  std::string to_string() const;

 private:
  explicit RecoveryEvent(Type type, std::optional<ActionKind> kind = std::nullopt)
      : type_(type), kind_(kind) {}

  Type type_;
  std::optional<ActionKind> kind_;
};

// Single-step transition relation:
//
//   Steady     --DegradationDetected-->   Disruptive
//   Disruptive --PolicyRecovered-->       Recovered
//   Disruptive --TradeOffRequested-->     TradeOff
//   TradeOff   --ActionSelected(k)-->     k
//   Learning   --MeasurementTaken-->      Measuring
//   Operating  --MeasurementTaken-->      Measuring
//   Measuring  --PerfAcceptable-->        Recovered
//   Measuring  --PerfNotAcceptable(k)-->  k
//
// Any other event is absorbed in Steady (the system stays put while nothing
// degrades) and rejected everywhere else with InvalidTransitionError naming
// the state and the event.
RecoveryState transition(RecoveryState state, const RecoveryEvent& event);

// True iff the episode is finished (Recovered).
bool is_terminal(RecoveryState state);

// Disruption instant, disruptive-state entry and recovery completion, in
// simulation seconds; monotone non-decreasing when present.
struct EpisodeTimeline {
  std::optional<double> t_e;
  std::optional<double> t_d;
  std::optional<double> t_r;

  void validate() const;

  friend bool operator==(const EpisodeTimeline&, const EpisodeTimeline&) = default;
};

}  // namespace gresilience

#endif  // GRESILIENCE_RECOVERY_FSM_HPP
