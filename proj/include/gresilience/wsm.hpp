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

#ifndef GRESILIENCE_WSM_HPP
#define GRESILIENCE_WSM_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gresilience/measurement.hpp"

namespace gresilience {

// Non-negative attribute weights on the unit simplex (sum 1 within 1e-9).
struct WeightVector {
  double w_t = 0.0;
  double w_h = 0.0;
  double w_co2 = 0.0;

  void validate() const;

  static WeightVector equal() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

struct ScoredAction {
  std::string id;
  double score = 0.0;
  WeightVector weights;  // the weights that produced the score

  friend bool operator==(const ScoredAction&, const ScoredAction&) = default;
};

struct FixedWeights {
  WeightVector weights;
};
struct WeightSearch {};
using WsmMode = std::variant<FixedWeights, WeightSearch>;

enum class WsmModeKind { Fixed, WeightSearch };

std::string_view to_string(WsmModeKind mode);

struct WsmDecision {
  std::string selected_id;
  std::vector<ScoredAction> scored;
  WsmModeKind mode = WsmModeKind::Fixed;
  std::optional<std::string> tie_break_note;  // set only when a score tie occurred
};

// Global score of one action: the resilience term is weighted by the
// confidence, the greenness terms by its complement, with every attribute
// max-normalized over the candidate set:
//
//   S(a) = w_t * eps * N(1/e_t) + (1 - eps) * (w_h * N(h) + w_co2 * N(1/e_co2))
//
// Note that human labor enters un-inverted: a larger share of human work
// counts toward greenness here.
double score(const CandidateAction& action, const Confidence& epsilon,
             const WeightVector& weights, const NormalizationContext& ctx);

// Weight vector maximizing the action's score. The score is linear in the
// weights, so the optimum is attained at a simplex vertex: the best of
// eps*N(1/e_t), (1-eps)*N(h) and (1-eps)*N(1/e_co2), with ties resolved in
// the order w_t, w_h, w_co2.
std::pair<WeightVector, double> best_weights(const CandidateAction& action,
                                             const Confidence& epsilon,
                                             const NormalizationContext& ctx);

// Scores every candidate (with the fixed weights, or each action's own best
// vertex in search mode) and returns the argmax. Ties break toward the
// smaller e_t, then the lexicographically smaller id. Requires at least two
// candidates.
WsmDecision select_action(std::span<const CandidateAction> candidates,
                          const Confidence& epsilon, const WsmMode& mode);

}  // namespace gresilience

#endif  // GRESILIENCE_WSM_HPP
