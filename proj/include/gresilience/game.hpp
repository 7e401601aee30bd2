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

#ifndef GRESILIENCE_GAME_HPP
#define GRESILIENCE_GAME_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gresilience/measurement.hpp"
#include "gresilience/rng.hpp"

namespace gresilience {

// One cell of the bimatrix: payoffs to the resilience player and to the
// greenness player.
struct PayoffCell {
  double resilience = 0.0;
  double greenness = 0.0;

  friend bool operator==(const PayoffCell&, const PayoffCell&) = default;
};

// 2x2 coordination-game bimatrix. Rows index the resilience player's action,
// columns the greenness player's; index 0 is the first action. Matched
// actions carry matching factor 2, mismatched 1, so each player's diagonal
// payoff for an action is exactly twice that player's off-diagonal payoff
// for the same action.
struct PayoffMatrix {
  std::array<CandidateAction, 2> actions;
  std::array<std::array<PayoffCell, 2>, 2> cells;

  const PayoffCell& at(int row, int col) const { return cells[row][col]; }
};

struct MixedStrategy {
  double p = 0.5;  // probability that the greenness player picks the first action
  double q = 0.5;  // probability that the resilience player picks the first action
  bool interior = false;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
};

// The four expected-payoff margins of the bimatrix: row expectations for the
// resilience player under p, column expectations for the greenness player
// under q.
struct ExpectedPayoffs {
  double resilience_a1 = 0.0;
  double resilience_a2 = 0.0;
  double greenness_a1 = 0.0;
  double greenness_a2 = 0.0;
};

struct GameSolution {
  std::vector<std::pair<int, int>> psne;  // (row, col) cells, row-major order
  MixedStrategy mixed;
  ExpectedPayoffs expected;
};

struct PlayResult {
  std::string action_id;
  ActionKind kind = ActionKind::Operating;
  int rounds = 0;
  bool psne_fallback = false;
};

// Resilience player's payoff: eps * alpha / e_t. alpha must be 1 or 2.
double resilience_payoff(const CandidateAction& action, const Confidence& epsilon, int alpha);

// Greenness player's payoff: (1 - eps) * alpha * (1/h) * (1/e_co2), with a
// zero h or e_co2 floored first so an all-automatic or zero-emission action
// stays finite.
double greenness_payoff(const CandidateAction& action, const Confidence& epsilon, int alpha);

// Assembles the bimatrix: diagonal cells pair each player's matched payoff
// (alpha = 2) for that action, off-diagonal cells pair the row action's
// resilience payoff with the column action's greenness payoff (alpha = 1).
PayoffMatrix build_payoff_matrix(const CandidateAction& a1, const CandidateAction& a2,
                                 const Confidence& epsilon);

// All cells from which neither player strictly gains by unilateral deviation
// (weak best response).
std::vector<std::pair<int, int>> find_psne(const PayoffMatrix& m);

// Indifference mix: q equalizes the greenness player's expected payoffs
// across its two actions, p the resilience player's. With the matched payoff
// doubling the unmatched one, the closed forms in terms of the unmatched
// payoffs g_i and r_i are
//
//   q = (2*g2 - g1) / (g1 + g2),   p = (2*r2 - r1) / (r1 + r2)
//
// clamped to [0, 1]. `interior` is false when clamping occurred or a
// denominator vanished (one action dominates, or a player is indifferent
// everywhere); a vanished denominator yields the symmetric mix 0.5.
MixedStrategy solve_msne(const PayoffMatrix& m);

ExpectedPayoffs expected_payoffs(const PayoffMatrix& m, const MixedStrategy& s);

// PSNE enumeration, mixed strategy and its expected payoffs in one call.
GameSolution solve_game(const PayoffMatrix& m);

// Repeated independent draws from the mixed strategy until both players land
// on the same action; that action and the round count are returned. After
// max_rounds mismatches the matched-equilibrium action with the largest
// payoff sum wins (ties: smaller e_t, then smaller id). Each round consumes
// two draws from rng: the resilience player's, then the greenness player's.
PlayResult play(const PayoffMatrix& m, const MixedStrategy& s, Rng& rng, int max_rounds);

}  // namespace gresilience

#endif  // GRESILIENCE_GAME_HPP
