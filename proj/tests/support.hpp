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
//
// Test helpers and independent oracles. The oracles deliberately use brute
// force (grid scans, exhaustive best-response enumeration) rather than the
// library's closed forms, so they can vouch for them.

#ifndef GRESILIENCE_TESTS_SUPPORT_HPP
#define GRESILIENCE_TESTS_SUPPORT_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gresilience/game.hpp"
#include "gresilience/measurement.hpp"
#include "gresilience/rng.hpp"
#include "gresilience/wsm.hpp"

namespace gresilience::testing {

// Attribute ranges used for randomized checks: e_t in [1, 100] s, h in
// [0, 10] interactions, e_co2 in [0.1, 50] g, epsilon in [0.05, 0.95].
inline CandidateAction random_action(Rng& rng, const std::string& id, ActionKind kind) {
  return {id, kind,
          {rng.uniform(1.0, 100.0), rng.uniform(0.1, 50.0),
           static_cast<double>(rng.uniform_int(0, 10))}};
}

inline std::pair<CandidateAction, CandidateAction> random_action_pair(Rng& rng) {
  return {random_action(rng, "a1", ActionKind::Learning),
          random_action(rng, "a2", ActionKind::Operating)};
}

// Absolute expected-payoff gap of the greenness player between its two
// actions when the resilience player mixes with q, read straight off the
// matrix margins.
inline double greenness_gap(const PayoffMatrix& m, double q) {
  const double a1 = q * m.at(0, 0).greenness + (1.0 - q) * m.at(1, 0).greenness;
  const double a2 = q * m.at(0, 1).greenness + (1.0 - q) * m.at(1, 1).greenness;
  return std::abs(a1 - a2);
}

// Resilience player's gap between its two actions when the greenness player
// mixes with p.
inline double resilience_gap(const PayoffMatrix& m, double p) {
  const double a1 = p * m.at(0, 0).resilience + (1.0 - p) * m.at(0, 1).resilience;
  const double a2 = p * m.at(1, 0).resilience + (1.0 - p) * m.at(1, 1).resilience;
  return std::abs(a1 - a2);
}

// Grid scan minimizing the indifference gap; the independent route to the
// mixed strategy.
inline double grid_argmin_q(const PayoffMatrix& m, double step = 0.001) {
  double best_q = 0.0;
  double best_gap = greenness_gap(m, 0.0);
  for (double q = step; q <= 1.0 + step / 2.0; q += step) {
    const double clamped = std::min(q, 1.0);
    const double gap = greenness_gap(m, clamped);
    if (gap < best_gap) {
      best_gap = gap;
      best_q = clamped;
    }
  }
  return best_q;
}

inline double grid_argmin_p(const PayoffMatrix& m, double step = 0.001) {
  double best_p = 0.0;
  double best_gap = resilience_gap(m, 0.0);
  for (double p = step; p <= 1.0 + step / 2.0; p += step) {
    const double clamped = std::min(p, 1.0);
    const double gap = resilience_gap(m, clamped);
    if (gap < best_gap) {
      best_gap = gap;
      best_p = clamped;
    }
  }
  return best_p;
}

// Exhaustive best-response enumeration: per column the resilience player's
// best rows, per row the greenness player's best columns, intersected.
inline std::vector<std::pair<int, int>> psne_by_enumeration(const PayoffMatrix& m) {
  bool row_best[2][2];  // [row][col]: row is a best response in this column
  bool col_best[2][2];  // [row][col]: col is a best response in this row
  for (int col = 0; col < 2; ++col) {
    const double top = std::max(m.at(0, col).resilience, m.at(1, col).resilience);
    for (int row = 0; row < 2; ++row) row_best[row][col] = m.at(row, col).resilience == top;
  }
  for (int row = 0; row < 2; ++row) {
    const double top = std::max(m.at(row, 0).greenness, m.at(row, 1).greenness);
    for (int col = 0; col < 2; ++col) col_best[row][col] = m.at(row, col).greenness == top;
  }
  std::vector<std::pair<int, int>> cells;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      if (row_best[row][col] && col_best[row][col]) cells.emplace_back(row, col);
    }
  }
  return cells;
}

// Simplex grid search for the best fixed weights of one action; the
// independent route best_weights is checked against.
inline double best_score_by_grid(const CandidateAction& action, const Confidence& epsilon,
                                 const NormalizationContext& ctx, int steps = 20) {
  double best = 0.0;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j + i <= steps; ++j) {
      const int k = steps - i - j;
      const WeightVector w{static_cast<double>(i) / steps, static_cast<double>(j) / steps,
                           static_cast<double>(k) / steps};
      best = std::max(best, score(action, epsilon, w, ctx));
    }
  }
  return best;
}

}  // namespace gresilience::testing

#endif  // GRESILIENCE_TESTS_SUPPORT_HPP
