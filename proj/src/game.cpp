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

#include "gresilience/game.hpp"

#include <algorithm>
#include <cmath>

#include "gresilience/errors.hpp"

namespace gresilience {

namespace {

void validate_alpha(int alpha) {
  if (alpha != 1 && alpha != 2) {
    throw DomainError("matching factor alpha must be 1 or 2");
  }
}

// Probability that makes the opponent indifferent between the two matched
// cells, given this player's unmatched payoffs x1 and x2. Degenerate when
// both payoffs vanish; the symmetric mix is returned and flagged.
double indifference_mix(double x1, double x2, bool& degenerate) {
  const double denom = x1 + x2;
  if (denom <= 1e-12) {
    degenerate = true;
    return 0.5;
  }
  return std::clamp((2.0 * x2 - x1) / denom, 0.0, 1.0);
}

}  // namespace

double resilience_payoff(const CandidateAction& action, const Confidence& epsilon, int alpha) {
  validate_alpha(alpha);
  action.attrs.validate();
  return epsilon.value() * static_cast<double>(alpha) * inverse_attr(action.attrs.e_t);
}

double greenness_payoff(const CandidateAction& action, const Confidence& epsilon, int alpha) {
  validate_alpha(alpha);
  action.attrs.validate();
  const double h = floor_human_labor(action.attrs.h);
  const double co2 = floor_co2(action.attrs.e_co2);
  return (1.0 - epsilon.value()) * static_cast<double>(alpha) * inverse_attr(h) *
         inverse_attr(co2);
}

PayoffMatrix build_payoff_matrix(const CandidateAction& a1, const CandidateAction& a2,
                                 const Confidence& epsilon) {
  if (a1.id == a2.id) {
    throw DomainError("payoff matrix requires two distinct action ids");
  }
  PayoffMatrix m;
  m.actions = {a1, a2};
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      const int alpha = row == col ? 2 : 1;
      m.cells[row][col] = {resilience_payoff(m.actions[row], epsilon, alpha),
                           greenness_payoff(m.actions[col], epsilon, alpha)};
    }
  }
  return m;
}

std::vector<std::pair<int, int>> find_psne(const PayoffMatrix& m) {
  std::vector<std::pair<int, int>> cells;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < 2; ++col) {
      const bool row_stays = m.at(row, col).resilience >= m.at(1 - row, col).resilience;
      const bool col_stays = m.at(row, col).greenness >= m.at(row, 1 - col).greenness;
      if (row_stays && col_stays) cells.emplace_back(row, col);
    }
  }
  return cells;
}

MixedStrategy solve_msne(const PayoffMatrix& m) {
  // Off-diagonal cells carry the unmatched payoffs: P_r's in its own row,
  // P_g's in its own column.
  const double r1 = m.at(0, 1).resilience;
  const double r2 = m.at(1, 0).resilience;
  const double g1 = m.at(1, 0).greenness;
  const double g2 = m.at(0, 1).greenness;

  MixedStrategy s;
  bool degenerate = false;
  s.q = indifference_mix(g1, g2, degenerate);
  s.p = indifference_mix(r1, r2, degenerate);
  s.interior = !degenerate && s.p > 0.0 && s.p < 1.0 && s.q > 0.0 && s.q < 1.0;
  return s;
}

ExpectedPayoffs expected_payoffs(const PayoffMatrix& m, const MixedStrategy& s) {
  ExpectedPayoffs e;
  e.resilience_a1 = s.p * m.at(0, 0).resilience + (1.0 - s.p) * m.at(0, 1).resilience;
  e.resilience_a2 = s.p * m.at(1, 0).resilience + (1.0 - s.p) * m.at(1, 1).resilience;
  e.greenness_a1 = s.q * m.at(0, 0).greenness + (1.0 - s.q) * m.at(1, 0).greenness;
  e.greenness_a2 = s.q * m.at(0, 1).greenness + (1.0 - s.q) * m.at(1, 1).greenness;
  return e;
}

GameSolution solve_game(const PayoffMatrix& m) {
  GameSolution solution;
  solution.psne = find_psne(m);
  solution.mixed = solve_msne(m);
  solution.expected = expected_payoffs(m, solution.mixed);
  return solution;
}

namespace {

// Index of the matched cell the play fallback settles on: the matched
// equilibrium with the largest payoff sum, or, when opposed dominance leaves
// no matched equilibrium, the better of the two matched cells outright.
int fallback_action_index(const PayoffMatrix& m) {
  std::vector<int> matched;
  for (const auto& [row, col] : find_psne(m)) {
    if (row == col) matched.push_back(row);
  }
  if (matched.empty()) matched = {0, 1};

  int best = matched.front();
  for (std::size_t k = 1; k < matched.size(); ++k) {
    const int i = matched[k];
    const double sum_i = m.at(i, i).resilience + m.at(i, i).greenness;
    const double sum_best = m.at(best, best).resilience + m.at(best, best).greenness;
    if (sum_i > sum_best) {
      best = i;
    } else if (sum_i == sum_best) {
      const auto& a = m.actions[i].attrs;
      const auto& b = m.actions[best].attrs;
      if (a.e_t < b.e_t || (a.e_t == b.e_t && m.actions[i].id < m.actions[best].id)) {
        best = i;
      }
    }
  }
  return best;
}

}  // namespace

PlayResult play(const PayoffMatrix& m, const MixedStrategy& s, Rng& rng, int max_rounds) {
  if (max_rounds < 1) {
    throw DomainError("play requires max_rounds >= 1");
  }
  for (double prob : {s.p, s.q}) {
    if (!(prob >= 0.0 && prob <= 1.0)) {
      throw DomainError("mixed-strategy probabilities must lie in [0, 1]");
    }
  }
  for (int round = 1; round <= max_rounds; ++round) {
    const bool resilience_first = rng.bernoulli(s.q);
    const bool greenness_first = rng.bernoulli(s.p);
    if (resilience_first == greenness_first) {
      const CandidateAction& agreed = m.actions[resilience_first ? 0 : 1];
      return {agreed.id, agreed.kind, round, false};
    }
  }
  const CandidateAction& settled = m.actions[fallback_action_index(m)];
  return {settled.id, settled.kind, max_rounds, true};
}

}  // namespace gresilience
