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

#ifndef OCRS_ANALYSIS_HPP
#define OCRS_ANALYSIS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ocrs/instance.hpp"
#include "ocrs/scheme.hpp"

namespace ocrs {

// Enumeration budget for the exact oracle: activity patterns times family
// coin patterns must stay within 2^24 outcomes.
inline constexpr std::uint64_t kBruteForceOutcomeCap = std::uint64_t{1} << 24;

// Exact probability that each element can join every feasible subset of the
// active set (equivalently, survives the worst arrival order), for a
// single-coin family with keep probabilities q:
//   r_e = q_e * prod_{j != e} (1 - x_j q_j).
std::vector<double> exact_selectability_rank1(std::span<const double> x,
                                              std::span<const double> q);

// Same quantity for any single-coin scheme on rank-1 or partition
// constraints (the product runs within e's part). Transversal constraints
// have no closed form here; use brute force or Monte Carlo.
std::vector<double> exact_selectability(const Instance& instance,
                                        SchemeKind scheme);

struct BruteForceResult {
  // Pr[e joins every feasible subset of the active set | e active].
  std::vector<double> conditional;
  // Pr[same event and e active]; activation independence makes this
  // x_e * conditional_e, which tests verify rather than assume.
  std::vector<double> joint_with_active;
};

// Independent oracle: sums Pr[activity] * Pr[family coins] * 1{event} over
// the full product space of outcomes. Refuses instances whose outcome count
// exceeds kBruteForceOutcomeCap with a size report.
BruteForceResult brute_force_selectability_full(const Instance& instance,
                                                SchemeKind scheme);
std::vector<double> brute_force_selectability(const Instance& instance,
                                              SchemeKind scheme);
double brute_force_selectability(const Instance& instance, SchemeKind scheme,
                                 int element);

// Both sides of the log inequality underlying the linear scheme's 1/e
// guarantee, for a in [0,1]^k:
//   lhs = ln(1 - a_k/2) + sum_{j<k} ln(1 - a_j + a_j^2/2),  rhs = -sum a_j.
// Callers assert lhs >= rhs.
struct LogInequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};
LogInequalitySides selection_log_inequality(std::span<const double> a);

// Pointwise certificates for the log inequality: f(x) = e^x (1 - x/2) and
// g(x) = e^x (1 - x + x^2/2), both >= 1 and nondecreasing on [0,1].
struct CertificateValues {
  double f = 0.0;
  double g = 0.0;
};
CertificateValues certificate_functions(double x);

// Closed-form floor for a transversal element with degree k:
//   (1 - e^-x)/x * (1 - (1 - e^(-1+x))^k), the x = 0 case taking the limit.
double degree_selectability_floor(int k, double x);

// The three closed-form quantities from the transversal scheme's analysis.
// The activation probability is exact; the blocking bound and the floor
// come from the scheme's per-neighborhood analysis and are heuristic: they
// are not valid pointwise on every graph (see the regression tests), while
// the 1/e and 1 - 1/e guarantees themselves hold.
struct TransversalElementBounds {
  double activation_probability = 0.0;   // Pr[e appears in some sampled set]
  double blocking_upper_bound = 0.0;     // (1 - e^(-1+x_u))^{|N(u)|}
  double selectability_lower_bound = 0.0;  // activation * (1 - blocking)
};
TransversalElementBounds transversal_element_bounds(
    const TransversalConstraint& constraint, const FractionalPoint& point,
    int element);

// Mass the family-sampling distribution puts on each support size, overall
// (beta[k]) and per element (mass[e][k] = Pr[e in support and |support|=k]).
struct AlphaSummary {
  int n = 0;
  bool exact = false;          // closed form vs sampled
  std::uint64_t samples = 0;   // 0 when exact
  std::vector<double> beta;                // index k = 0..n
  std::vector<std::vector<double>> mass;   // [element][k], k = 0..n
};

// Exact summary for a single-coin family with keep probabilities q
// (Poisson-binomial over independent memberships).
AlphaSummary product_family_alpha(std::span<const double> q);

// Per-element upper bound on worst-order selection for any family with this
// size profile: sum_k (1 - 1/n)^{k-1} * mass(e, k). Rejects summaries whose
// per-element masses exceed 1 beyond tolerance.
std::vector<double> worst_order_bound(const AlphaSummary& summary);

// No greedy scheme beats this on the uniform instance: (1 - 1/n)^{n-1}.
double greedy_ceiling(std::int64_t n);

// |sum_e worst_order_bound(e) - sum_k beta_k * k * (1 - 1/n)^{k-1}|; both
// sides count each (element, support) incidence once, so the residual is
// rounding noise for exact and integer-count summaries alike.
double mass_balance_residual(const AlphaSummary& summary);

}  // namespace ocrs

#endif  // OCRS_ANALYSIS_HPP
