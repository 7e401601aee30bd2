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

#include "gresilience/wsm.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "gresilience/errors.hpp"

namespace gresilience {

void WeightVector::validate() const {
  for (double w : {w_t, w_h, w_co2}) {
    if (!std::isfinite(w) || w < 0.0 || w > 1.0) {
      throw DomainError("weights must be finite values in [0, 1]");
    }
  }
  if (std::abs(w_t + w_h + w_co2 - 1.0) > 1e-9) {
    throw DomainError("weights must sum to 1");
  }
}

std::string_view to_string(WsmModeKind mode) {
  return mode == WsmModeKind::Fixed ? "fixed" : "search";
}

double score(const CandidateAction& action, const Confidence& epsilon,
             const WeightVector& weights, const NormalizationContext& ctx) {
  weights.validate();
  const std::size_t i = ctx.index_of(action.id);
  const double eps = epsilon.value();
  return weights.w_t * eps * ctx.norm_inv_run_time(i) +
         (1.0 - eps) * (weights.w_h * ctx.norm_human_labor(i) +
                        weights.w_co2 * ctx.norm_inv_co2(i));
}

std::pair<WeightVector, double> best_weights(const CandidateAction& action,
                                             const Confidence& epsilon,
                                             const NormalizationContext& ctx) {
  const std::size_t i = ctx.index_of(action.id);
  const double eps = epsilon.value();
  const std::array<double, 3> vertex_scores = {
      eps * ctx.norm_inv_run_time(i),
      (1.0 - eps) * ctx.norm_human_labor(i),
      (1.0 - eps) * ctx.norm_inv_co2(i),
  };
  static constexpr std::array<WeightVector, 3> kVertices = {
      WeightVector{1.0, 0.0, 0.0},
      WeightVector{0.0, 1.0, 0.0},
      WeightVector{0.0, 0.0, 1.0},
  };
  // Strict comparison keeps the first maximum: tie order w_t, w_h, w_co2.
  std::size_t best = 0;
  for (std::size_t k = 1; k < vertex_scores.size(); ++k) {
    if (vertex_scores[k] > vertex_scores[best]) best = k;
  }
  return {kVertices[best], vertex_scores[best]};
}

namespace {

// True when `challenger` beats `incumbent` under the tie-break order:
// smaller e_t first, then lexicographically smaller id.
bool tie_break_prefers(const CandidateAction& challenger, const CandidateAction& incumbent) {
  if (challenger.attrs.e_t != incumbent.attrs.e_t) {
    return challenger.attrs.e_t < incumbent.attrs.e_t;
  }
  return challenger.id < incumbent.id;
}

}  // namespace

WsmDecision select_action(std::span<const CandidateAction> candidates,
                          const Confidence& epsilon, const WsmMode& mode) {
  if (candidates.size() < 2) {
    throw DomainError("select_action requires at least two candidate actions");
  }
  NormalizationContext ctx({candidates.begin(), candidates.end()});

  WsmDecision decision;
  decision.mode = std::holds_alternative<FixedWeights>(mode) ? WsmModeKind::Fixed
                                                             : WsmModeKind::WeightSearch;
  decision.scored.reserve(ctx.size());
  for (const CandidateAction& action : ctx.actions()) {
    if (const auto* fixed = std::get_if<FixedWeights>(&mode)) {
      decision.scored.push_back(
          {action.id, score(action, epsilon, fixed->weights, ctx), fixed->weights});
    } else {
      auto [weights, best] = best_weights(action, epsilon, ctx);
      decision.scored.push_back({action.id, best, weights});
    }
  }

  std::size_t best = 0;
  bool tie = false;
  for (std::size_t k = 1; k < decision.scored.size(); ++k) {
    if (decision.scored[k].score > decision.scored[best].score) {
      best = k;
      tie = false;
    } else if (decision.scored[k].score == decision.scored[best].score) {
      tie = true;
      if (tie_break_prefers(ctx.actions()[k], ctx.actions()[best])) best = k;
    }
  }
  decision.selected_id = decision.scored[best].id;
  if (tie) {
    decision.tie_break_note =
        "score tie resolved toward smaller e_t, then lexicographic id; selected '" +
        decision.selected_id + "'";
  }
  return decision;
}

}  // namespace gresilience
