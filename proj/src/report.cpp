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

#include "ocrs/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ocrs/error.hpp"

namespace ocrs {

const char* to_string(Method method) {
  switch (method) {
    case Method::closed_form:
      return "closed-form";
    case Method::brute_force:
      return "brute-force";
    case Method::monte_carlo:
      return "monte-carlo";
  }
  return "?";
}

const char* to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::fixed_order:
      return "fixed-order";
    case AdversaryKind::element_last:
      return "element-last";
    case AdversaryKind::almighty_exhaustive:
      return "almighty-exhaustive";
  }
  return "?";
}

AdversaryKind adversary_from_string(const std::string& name) {
  if (name == "fixed-order") return AdversaryKind::fixed_order;
  if (name == "element-last") return AdversaryKind::element_last;
  if (name == "almighty-exhaustive") return AdversaryKind::almighty_exhaustive;
  throw Error(ErrorCode::parse,
              "unknown adversary \"" + name +
                  "\" (expected fixed-order, element-last, or "
                  "almighty-exhaustive)");
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z) {
  if (trials == 0)
    throw Error(ErrorCode::invalid_argument, "trials must be >= 1");
  double t = static_cast<double>(trials);
  double p = static_cast<double>(successes) / t;
  double zz = z * z;
  double denom = 1.0 + zz / t;
  WilsonInterval w;
  w.center = (p + zz / (2.0 * t)) / denom;
  w.half_width =
      z * std::sqrt(p * (1.0 - p) / t + zz / (4.0 * t * t)) / denom;
  return w;
}

double SelectabilityReport::lower_bound(const ElementResult& element) const {
  if (method != Method::monte_carlo) return element.probability;
  return wilson_interval(element.successes, trials, z).lower();
}

bool SelectabilityReport::element_passes(const ElementResult& element,
                                         double tolerance) const {
  return lower_bound(element) >= threshold - tolerance;
}

bool SelectabilityReport::all_pass(double tolerance) const {
  for (const auto& e : elements)
    if (!element_passes(e, tolerance)) return false;
  return true;
}

SelectabilityReport make_value_report(const Instance& instance,
                                      SchemeKind scheme, Method method,
                                      const std::vector<double>& values,
                                      double threshold) {
  SelectabilityReport report;
  report.method = method;
  report.scheme = scheme;
  report.threshold = threshold;
  report.elements.reserve(values.size());
  for (std::size_t e = 0; e < values.size(); ++e)
    report.elements.push_back(
        {static_cast<int>(e), instance.point.x[e], values[e], 0.0, 0});
  return report;
}

std::string report_to_json(const SelectabilityReport& report) {
  nlohmann::ordered_json j;
  j["method"] = to_string(report.method);
  j["scheme"] = to_string(report.scheme);
  if (report.adversary) j["adversary"] = to_string(*report.adversary);
  if (!report.instance_id.empty()) j["instance"] = report.instance_id;
  if (report.method == Method::monte_carlo) {
    j["trials"] = report.trials;
    j["seed"] = report.seed;
    j["z"] = report.z;
  }
  j["threshold"] = report.threshold;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : report.elements) {
    nlohmann::ordered_json row;
    row["element"] = e.element;
    row["x"] = e.x;
    row["probability"] = e.probability;
    if (report.method == Method::monte_carlo) {
      row["half_width"] = e.half_width;
      row["successes"] = e.successes;
      row["lower_bound"] = report.lower_bound(e);
    }
    rows.push_back(std::move(row));
  }
  j["elements"] = std::move(rows);
  return j.dump(2);
}

std::string report_to_csv(const SelectabilityReport& report,
                          double tolerance) {
  std::ostringstream os;
  os.precision(17);
  os << "index,x,probability,half_width,threshold,pass\n";
  for (const auto& e : report.elements) {
    os << e.element << "," << e.x << "," << e.probability << ",";
    if (report.method == Method::monte_carlo) os << e.half_width;
    os << "," << report.threshold << ","
       << (report.element_passes(e, tolerance) ? "pass" : "fail") << "\n";
  }
  return os.str();
}

std::string tightness_to_json(const TightnessReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["scheme"] = to_string(report.scheme);
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["beta_sampled"] = report.beta_sampled;
  j["beta_closed"] = report.beta_closed;
  j["bound_sampled"] = report.bound_sampled;
  j["bound_closed"] = report.bound_closed;
  j["min_bound_sampled"] = report.min_bound_sampled;
  j["min_bound_closed"] = report.min_bound_closed;
  j["ceiling"] = report.ceiling;
  j["residual_sampled"] = report.residual_sampled;
  j["residual_closed"] = report.residual_closed;
  j["min_bound_gap_to_inv_e"] = report.min_bound_gap_to_inv_e;
  j["ceiling_gap_to_inv_e"] = report.ceiling_gap_to_inv_e;
  return j.dump(2);
}

std::string tightness_to_csv(const TightnessReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "index,bound_sampled,bound_closed,ceiling\n";
  for (std::size_t e = 0; e < report.bound_sampled.size(); ++e)
    os << e << "," << report.bound_sampled[e] << "," << report.bound_closed[e]
       << "," << report.ceiling << "\n";
  return os.str();
}

}  // namespace ocrs
