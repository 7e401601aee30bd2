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

#include "gresilience/recovery_fsm.hpp"

#include "gresilience/errors.hpp"

namespace gresilience {

std::string_view to_string(RecoveryState state) {
  switch (state) {
    case RecoveryState::Steady: return "Steady";
    case RecoveryState::Disruptive: return "Disruptive";
    case RecoveryState::TradeOff: return "TradeOff";
    case RecoveryState::Learning: return "Learning";
    case RecoveryState::Operating: return "Operating";
    case RecoveryState::Measuring: return "Measuring";
    case RecoveryState::Recovered: return "Recovered";
  }
  throw DomainError("unknown recovery state");
}

RecoveryState recovery_state_from_string(std::string_view name) {
  for (RecoveryState state : {RecoveryState::Steady, RecoveryState::Disruptive,
                              RecoveryState::TradeOff, RecoveryState::Learning,
                              RecoveryState::Operating, RecoveryState::Measuring,
                              RecoveryState::Recovered}) {
    if (to_string(state) == name) return state;
  }
  throw DomainError("unknown recovery state '" + std::string(name) + "'");
}

ActionKind RecoveryEvent::action_kind() const {
  if (!kind_.has_value()) {
    throw DomainError("event '" + to_string() + "' carries no action kind");
  }
  return *kind_;
}

std::string RecoveryEvent::to_string() const {
  switch (type_) {
    case Type::DegradationDetected: return "DegradationDetected";
    case Type::PolicyRecovered: return "PolicyRecovered";
    case Type::TradeOffRequested: return "TradeOffRequested";
    case Type::ActionSelected:
      return "ActionSelected(" + std::string(gresilience::to_string(*kind_)) + ")";
    case Type::MeasurementTaken: return "MeasurementTaken";
    case Type::PerfAcceptable: return "PerfAcceptable";
    case Type::PerfNotAcceptable:
      return "PerfNotAcceptable(" + std::string(gresilience::to_string(*kind_)) + ")";
  }
  throw DomainError("unknown recovery event");
}

namespace {

RecoveryState state_for_kind(ActionKind kind) {
  return kind == ActionKind::Learning ? RecoveryState::Learning : RecoveryState::Operating;
}

}  // namespace

RecoveryState transition(RecoveryState state, const RecoveryEvent& event) {
  using Type = RecoveryEvent::Type;
  switch (state) {
    case RecoveryState::Steady:
      return event.type() == Type::DegradationDetected ? RecoveryState::Disruptive
                                                       : RecoveryState::Steady;
    case RecoveryState::Disruptive:
      if (event.type() == Type::PolicyRecovered) return RecoveryState::Recovered;
      if (event.type() == Type::TradeOffRequested) return RecoveryState::TradeOff;
      break;
    case RecoveryState::TradeOff:
      if (event.type() == Type::ActionSelected) return state_for_kind(event.action_kind());
      break;
    case RecoveryState::Learning:
    case RecoveryState::Operating:
      if (event.type() == Type::MeasurementTaken) return RecoveryState::Measuring;
      break;
    case RecoveryState::Measuring:
      if (event.type() == Type::PerfAcceptable) return RecoveryState::Recovered;
      if (event.type() == Type::PerfNotAcceptable) return state_for_kind(event.action_kind());
      break;
    case RecoveryState::Recovered:
      break;
  }
  throw InvalidTransitionError("no transition from state '" + std::string(to_string(state)) +
                               "' on event '" + event.to_string() + "'");
}

bool is_terminal(RecoveryState state) { return state == RecoveryState::Recovered; }

void EpisodeTimeline::validate() const {
  if (t_e && t_d && *t_e > *t_d) {
    throw DomainError("timeline requires t_e <= t_d");
  }
  if (t_d && t_r && *t_d > *t_r) {
    throw DomainError("timeline requires t_d <= t_r");
  }
  if (t_e && t_r && *t_e > *t_r) {
    throw DomainError("timeline requires t_e <= t_r");
  }
}

}  // namespace gresilience
