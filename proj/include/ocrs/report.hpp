// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCRS_REPORT_HPP
#define OCRS_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocrs/analysis.hpp"
#include "ocrs/instance.hpp"
#include "ocrs/scheme.hpp"

namespace ocrs {

enum class Method { closed_form, brute_force, monte_carlo };
const char* to_string(Method method);

enum class AdversaryKind {
  fixed_order,          // arrivals in index order
  element_last,         // the tracked element arrives after everyone else
  almighty_exhaustive,  // success means joining every feasible active subset
};
const char* to_string(AdversaryKind kind);
AdversaryKind adversary_from_string(const std::string& name);

// Wilson score interval for a binomial proportion at z standard deviations.
struct WilsonInterval {
  double center = 0.0;
  double half_width = 0.0;
  double lower() const { return center - half_width; }
  double upper() const { return center + half_width; }
};
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z);

struct ElementResult {
  int element = 0;
  double x = 0.0;
  double probability = 0.0;       // exact value or frequency estimate
  double half_width = 0.0;        // Wilson half-width; 0 for exact methods
  std::uint64_t successes = 0;    // Monte Carlo only
};

struct SelectabilityReport {
  Method method = Method::closed_form;
  SchemeKind scheme = SchemeKind::linear;
  std::optional<AdversaryKind> adversary;  // Monte Carlo only
  std::string instance_id;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double z = 0.0;
  double threshold = 0.0;  // guarantee the probabilities are compared against
  std::vector<ElementResult> elements;

  // Exact methods: the value itself. Monte Carlo: the Wilson lower bound.
  double lower_bound(const ElementResult& element) const;
  bool element_passes(const ElementResult& element, double tolerance) const;
  bool all_pass(double tolerance) const;
};

SelectabilityReport make_value_report(const Instance& instance,
                                      SchemeKind scheme, Method method,
                                      const std::vector<double>& values,
                                      double threshold);

std::string report_to_json(const SelectabilityReport& report);
// One row per element: index, x, probability, half_width, threshold, pass.
std::string report_to_csv(const SelectabilityReport& report,
                          double tolerance = 1e-9);

struct TightnessReport {
  int n = 0;
  SchemeKind scheme = SchemeKind::linear;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> beta_sampled;    // size-profile estimate, k = 0..n
  std::vector<double> beta_closed;     // exact profile for the product family
  std::vector<double> bound_sampled;   // per-element worst-order bound
  std::vector<double> bound_closed;
  double min_bound_sampled = 0.0;
  double min_bound_closed = 0.0;
  double ceiling = 0.0;                // (1 - 1/n)^(n-1)
  double residual_sampled = 0.0;       // mass-balance identity residual
  double residual_closed = 0.0;
  double min_bound_gap_to_inv_e = 0.0;  // min_bound_closed - 1/e
  double ceiling_gap_to_inv_e = 0.0;    // ceiling - 1/e
};

std::string tightness_to_json(const TightnessReport& report);
// One row per element: index, bound_sampled, bound_closed, ceiling.
std::string tightness_to_csv(const TightnessReport& report);

}  // namespace ocrs

#endif  // OCRS_REPORT_HPP
