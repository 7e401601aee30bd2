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

#include "gresilience/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "gresilience/errors.hpp"

namespace gresilience {

std::string_view to_string(ActionKind kind) {
  return kind == ActionKind::Learning ? "Learning" : "Operating";
}

ActionKind action_kind_from_string(std::string_view name) {
  if (name == "Learning") return ActionKind::Learning;
  if (name == "Operating") return ActionKind::Operating;
  throw DomainError("unknown action kind '" + std::string(name) + "'");
}

void AttributeVector::validate() const {
  if (!std::isfinite(e_t) || e_t <= 0.0) {
    throw DomainError("e_t must be a finite positive number of seconds");
  }
  if (!std::isfinite(e_co2) || e_co2 < 0.0) {
    throw DomainError("e_co2 must be a finite non-negative number of grams");
  }
  if (!std::isfinite(h) || h < 0.0) {
    throw DomainError("h must be a finite non-negative interaction count");
  }
}

Confidence::Confidence(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw DomainError("confidence must lie in [0, 1]");
  }
}

std::vector<double> normalize(std::span<const double> values) {
  if (values.empty()) {
    throw DomainError("normalize: input sequence is empty");
  }
  double max_value = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("normalize: input contains a non-finite value");
    if (v < 0.0) throw DomainError("normalize: input contains a negative value");
    max_value = std::max(max_value, v);
  }
  if (max_value <= 0.0) {
    throw DegenerateInputError("normalize: every input value is zero");
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / max_value;
  return out;
}

double inverse_attr(double x) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("inverse_attr: input must be finite and positive");
  }
  return 1.0 / x;
}

double floor_human_labor(double h) { return std::max(h, kHumanLaborFloor); }

double floor_co2(double grams) { return std::max(grams, kCo2FloorGrams); }

double update_estimate(double prev, double observed, double smoothing) {
  if (!std::isfinite(prev) || prev < 0.0) {
    throw DomainError("update_estimate: prev must be finite and non-negative");
  }
  if (!std::isfinite(observed) || observed < 0.0) {
    throw DomainError("update_estimate: observed must be finite and non-negative");
  }
  if (!(smoothing >= 0.0 && smoothing <= 1.0)) {
    throw DomainError("update_estimate: smoothing must lie in [0, 1]");
  }
  return prev + smoothing * (observed - prev);
}

NormalizationContext::NormalizationContext(std::vector<CandidateAction> actions)
    : actions_(std::move(actions)) {
  if (actions_.empty()) {
    throw DomainError("normalization context requires at least one action");
  }
  std::unordered_set<std::string> ids;
  std::vector<double> inv_run_time;
  std::vector<double> human_labor;
  std::vector<double> inv_co2;
  inv_run_time.reserve(actions_.size());
  human_labor.reserve(actions_.size());
  inv_co2.reserve(actions_.size());
  for (const CandidateAction& action : actions_) {
    action.attrs.validate();
    if (!ids.insert(action.id).second) {
      throw DomainError("duplicate action id '" + action.id + "' in candidate set");
    }
    inv_run_time.push_back(inverse_attr(action.attrs.e_t));
    human_labor.push_back(action.attrs.h);
    inv_co2.push_back(inverse_attr(floor_co2(action.attrs.e_co2)));
  }
  n_inv_run_time_ = normalize(inv_run_time);
  n_human_labor_ = normalize(human_labor);
  n_inv_co2_ = normalize(inv_co2);
}

std::size_t NormalizationContext::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].id == id) return i;
  }
  throw DomainError("action '" + std::string(id) + "' is not part of the normalization context");
}

}  // namespace gresilience
