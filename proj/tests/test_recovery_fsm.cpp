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

#include <doctest.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gresilience/errors.hpp"
#include "gresilience/recovery_fsm.hpp"

using namespace gresilience;

namespace {

const std::vector<RecoveryState> kAllStates = {
    RecoveryState::Steady,    RecoveryState::Disruptive, RecoveryState::TradeOff,
    RecoveryState::Learning,  RecoveryState::Operating,  RecoveryState::Measuring,
    RecoveryState::Recovered,
};

std::vector<RecoveryEvent> all_events() {
  return {
      RecoveryEvent::degradation_detected(),
      RecoveryEvent::policy_recovered(),
      RecoveryEvent::trade_off_requested(),
      RecoveryEvent::action_selected(ActionKind::Learning),
      RecoveryEvent::action_selected(ActionKind::Operating),
      RecoveryEvent::measurement_taken(),
      RecoveryEvent::perf_acceptable(),
      RecoveryEvent::perf_not_acceptable(ActionKind::Learning),
      RecoveryEvent::perf_not_acceptable(ActionKind::Operating),
  };
}

std::optional<RecoveryState> try_transition(RecoveryState state, const RecoveryEvent& event) {
  try {
    return transition(state, event);
  } catch (const InvalidTransitionError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_SUITE("recovery_fsm") {

TEST_CASE("degradation moves the steady system to disruptive") {
  CHECK(transition(RecoveryState::Steady, RecoveryEvent::degradation_detected()) ==
        RecoveryState::Disruptive);
}

TEST_CASE("steady absorbs every other event") {
  for (const RecoveryEvent& event : all_events()) {
    if (event.type() == RecoveryEvent::Type::DegradationDetected) continue;
    CHECK(transition(RecoveryState::Steady, event) == RecoveryState::Steady);
  }
}

TEST_CASE("disruptive splits into policy recovery or the trade-off") {
  CHECK(transition(RecoveryState::Disruptive, RecoveryEvent::policy_recovered()) ==
        RecoveryState::Recovered);
  CHECK(transition(RecoveryState::Disruptive, RecoveryEvent::trade_off_requested()) ==
        RecoveryState::TradeOff);
}

TEST_CASE("the selected action kind names the next state") {
  CHECK(transition(RecoveryState::TradeOff,
                   RecoveryEvent::action_selected(ActionKind::Learning)) ==
        RecoveryState::Learning);
  CHECK(transition(RecoveryState::TradeOff,
                   RecoveryEvent::action_selected(ActionKind::Operating)) ==
        RecoveryState::Operating);
}

TEST_CASE("the measure-act loop") {
  CHECK(transition(RecoveryState::Learning, RecoveryEvent::measurement_taken()) ==
        RecoveryState::Measuring);
  CHECK(transition(RecoveryState::Operating, RecoveryEvent::measurement_taken()) ==
        RecoveryState::Measuring);
  const RecoveryState back = transition(RecoveryState::Measuring,
                                        RecoveryEvent::perf_not_acceptable(ActionKind::Learning));
  CHECK(back == RecoveryState::Learning);
  CHECK(transition(back, RecoveryEvent::measurement_taken()) == RecoveryState::Measuring);
  CHECK(transition(RecoveryState::Measuring, RecoveryEvent::perf_acceptable()) ==
        RecoveryState::Recovered);
}

TEST_CASE("illegal pairs raise errors naming state and event") {
  try {
    transition(RecoveryState::Measuring, RecoveryEvent::degradation_detected());
    FAIL("expected InvalidTransitionError");
  } catch (const InvalidTransitionError& e) {
    const std::string message = e.what();
    CHECK(message.find("Measuring") != std::string::npos);
    CHECK(message.find("DegradationDetected") != std::string::npos);
  }
  CHECK_THROWS_AS(transition(RecoveryState::Recovered, RecoveryEvent::measurement_taken()),
                  InvalidTransitionError);
  CHECK_THROWS_AS(transition(RecoveryState::TradeOff, RecoveryEvent::perf_acceptable()),
                  InvalidTransitionError);
  CHECK_THROWS_AS(transition(RecoveryState::Disruptive, RecoveryEvent::degradation_detected()),
                  InvalidTransitionError);
}

TEST_CASE("every state-event pair either transitions or rejects") {
  int legal = 0;
  int rejected = 0;
  for (RecoveryState state : kAllStates) {
    for (const RecoveryEvent& event : all_events()) {
      if (try_transition(state, event).has_value()) {
        ++legal;
      } else {
        ++rejected;
      }
    }
  }
  // Accepted pairs per state: Steady 9 (absorption), Disruptive 2,
  // TradeOff 2, Learning 1, Operating 1, Measuring 3, Recovered 0.
  CHECK(legal == 18);
  CHECK(rejected == 63 - 18);
}

TEST_CASE("recovery is reachable from every state") {
  for (RecoveryState start : kAllStates) {
    std::set<RecoveryState> seen = {start};
    std::vector<RecoveryState> frontier = {start};
    while (!frontier.empty()) {
      const RecoveryState current = frontier.back();
      frontier.pop_back();
      for (const RecoveryEvent& event : all_events()) {
        // Skip the Steady absorption self-loop; it cannot help reachability.
        const auto next = try_transition(current, event);
        if (next && !seen.contains(*next)) {
          seen.insert(*next);
          frontier.push_back(*next);
        }
      }
    }
    CHECK(seen.contains(RecoveryState::Recovered));
  }
}

TEST_CASE("all cycles pass through the measuring state") {
  // Drop Measuring (and the Steady self-loop) from the transition graph and
  // verify what remains is acyclic by depth-first search.
  std::map<RecoveryState, std::vector<RecoveryState>> graph;
  for (RecoveryState state : kAllStates) {
    if (state == RecoveryState::Measuring) continue;
    for (const RecoveryEvent& event : all_events()) {
      const auto next = try_transition(state, event);
      if (!next || *next == state || *next == RecoveryState::Measuring) continue;
      graph[state].push_back(*next);
    }
  }
  std::set<RecoveryState> done;
  std::set<RecoveryState> in_progress;
  bool cycle = false;
  auto dfs = [&](auto&& self, RecoveryState node) -> void {
    if (done.contains(node) || cycle) return;
    if (in_progress.contains(node)) {
      cycle = true;
      return;
    }
    in_progress.insert(node);
    for (RecoveryState next : graph[node]) self(self, next);
    in_progress.erase(node);
    done.insert(node);
  };
  for (RecoveryState state : kAllStates) {
    if (state != RecoveryState::Measuring) dfs(dfs, state);
  }
  CHECK_FALSE(cycle);

  // With Measuring present, the measure-act loop is a genuine cycle.
  RecoveryState s = RecoveryState::Learning;
  s = transition(s, RecoveryEvent::measurement_taken());
  s = transition(s, RecoveryEvent::perf_not_acceptable(ActionKind::Learning));
  CHECK(s == RecoveryState::Learning);
}

TEST_CASE("terminal state") {
  CHECK(is_terminal(RecoveryState::Recovered));
  CHECK_FALSE(is_terminal(RecoveryState::Steady));
  CHECK_FALSE(is_terminal(RecoveryState::Measuring));
}

TEST_CASE("event payloads") {
  CHECK(RecoveryEvent::action_selected(ActionKind::Learning).action_kind() ==
        ActionKind::Learning);
  CHECK(RecoveryEvent::perf_not_acceptable(ActionKind::Operating).action_kind() ==
        ActionKind::Operating);
  CHECK_THROWS_AS(RecoveryEvent::measurement_taken().action_kind(), DomainError);
  CHECK(RecoveryEvent::action_selected(ActionKind::Learning).to_string() ==
        "ActionSelected(Learning)");
}

TEST_CASE("state names round-trip") {
  for (RecoveryState state : kAllStates) {
    CHECK(recovery_state_from_string(to_string(state)) == state);
  }
  CHECK_THROWS_AS(recovery_state_from_string("Broken"), DomainError);
}

TEST_CASE("timeline monotonicity") {
  EpisodeTimeline ok{5.0, 5.0, 85.0};
  CHECK_NOTHROW(ok.validate());
  EpisodeTimeline partial{5.0, std::nullopt, std::nullopt};
  CHECK_NOTHROW(partial.validate());
  EpisodeTimeline bad{10.0, 5.0, 85.0};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  EpisodeTimeline bad2{5.0, 50.0, 40.0};
  CHECK_THROWS_AS(bad2.validate(), DomainError);
}

}  // TEST_SUITE("recovery_fsm")
