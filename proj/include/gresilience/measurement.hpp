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

#ifndef GRESILIENCE_MEASUREMENT_HPP
#define GRESILIENCE_MEASUREMENT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gresilience {

// Floors substituted before an inverse greenness term is formed. A zero
// human-labor count inverts as if one interaction had been needed; a zero
// CO2 footprint inverts against a negligible positive mass.
inline constexpr double kHumanLaborFloor = 1.0;
inline constexpr double kCo2FloorGrams = 1e-6;

// The two recovery options: retrain the AI component with human
// demonstrations, or keep operating at the current confidence.
enum class ActionKind { Learning, Operating };

std::string_view to_string(ActionKind kind);
ActionKind action_kind_from_string(std::string_view name);

// Per-action measurements: estimated run time (seconds), estimated CO2
// footprint (grams CO2e) and human labor cost (interaction count; fractional
// values occur once online estimates are blended in).
struct AttributeVector {
  double e_t = 1.0;
  double e_co2 = 0.0;
  double h = 0.0;

  void validate() const;

  friend bool operator==(const AttributeVector&, const AttributeVector&) = default;
};

// AI-model confidence in [0, 1]; construction rejects anything else.
class Confidence {
 public:
  explicit Confidence(double epsilon);
  double value() const { return epsilon_; }

  friend bool operator==(const Confidence&, const Confidence&) = default;

 private:
  double epsilon_;
};

struct CandidateAction {
  std::string id;
  ActionKind kind = ActionKind::Operating;
  AttributeVector attrs;

  friend bool operator==(const CandidateAction&, const CandidateAction&) = default;
};

// Max-normalization: divides by the maximum, mapping into [0, 1] with the
// best element at exactly 1 and relative order preserved. Throws DomainError
// on empty, negative or non-finite input and DegenerateInputError when every
// entry is zero.
std::vector<double> normalize(std::span<const double> values);

// 1/x for x > 0 (apply the floors above first when the raw value may be 0).
double inverse_attr(double x);

double floor_human_labor(double h);
double floor_co2(double grams);

// One exponentially-weighted moving-average step:
//   prev + smoothing * (observed - prev)
// The incremental form keeps the result inside
// [min(prev, observed), max(prev, observed)] even after rounding.
double update_estimate(double prev, double observed, double smoothing);

// Fixes the candidate set a decision is scored against and precomputes the
// normalized attribute terms: N(1/e_t), N(h) and N(1/e_co2), each normalized
// over this set. Construction validates every action, requires unique ids
// and fails with DegenerateInputError when an attribute has no positive
// value to normalize against.
class NormalizationContext {
 public:
  explicit NormalizationContext(std::vector<CandidateAction> actions);

  const std::vector<CandidateAction>& actions() const { return actions_; }
  std::size_t size() const { return actions_.size(); }

  // Index of the action with the given id; DomainError if absent.
  std::size_t index_of(std::string_view id) const;

  double norm_inv_run_time(std::size_t index) const { return n_inv_run_time_[index]; }
  double norm_human_labor(std::size_t index) const { return n_human_labor_[index]; }
  double norm_inv_co2(std::size_t index) const { return n_inv_co2_[index]; }

 private:
  std::vector<CandidateAction> actions_;
  std::vector<double> n_inv_run_time_;
  std::vector<double> n_human_labor_;
  std::vector<double> n_inv_co2_;
};

}  // namespace gresilience

#endif  // GRESILIENCE_MEASUREMENT_HPP
