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

#ifndef OCRS_SCHEME_HPP
#define OCRS_SCHEME_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ocrs/instance.hpp"
#include "ocrs/rng.hpp"

namespace ocrs {

// Exhaustive paths over feasible subsets of the active set refuse to run
// above this many active elements unless the caller raises the cap.
inline constexpr int kDefaultEnumerationCap = 20;

enum class SchemeKind {
  halving,                // keep each element with probability 1/2
  linear,                 // keep with probability 1 - x/2
  exponential,            // keep with probability (1 - e^-x)/x
  partition_linear,       // linear sampler, one-per-part acceptance
  partition_exponential,  // exponential sampler, one-per-part acceptance
  transversal,            // per-right-vertex coins, matching acceptance
};

const char* to_string(SchemeKind kind);
SchemeKind scheme_from_string(const std::string& name);

bool scheme_compatible(SchemeKind scheme, ConstraintKind constraint);
// Throws Error(kind_mismatch) naming both kinds when incompatible.
void require_compatible(const Instance& instance, SchemeKind scheme);

// The selectability guarantee the scheme is checked against: 1/4 for the
// halving baseline, 1/e otherwise, raised to 1 - 1/e for transversal
// instances in which every neighborhood has size >= 3.
double guarantee_threshold(const Instance& instance, SchemeKind scheme);

double linear_keep_probability(double x);
double exponential_keep_probability(double x);  // x = 0 uses the limit 1
// Per-coin probability q such that 1 - (1-q)^degree equals the exponential
// keep probability; x = 0 uses the limit 1.
double transversal_keep_probability(double x, int degree);

// Per-element keep probabilities for the single-coin-per-element schemes
// (everything except transversal).
std::vector<double> kept_probabilities(const Instance& instance,
                                       SchemeKind scheme);

// All of a scheme's randomness, drawn before any arrival. The online loop is
// a deterministic function of this object.
struct FamilyRealization {
  ConstraintKind kind = ConstraintKind::rank1;
  ElementSet kept;                      // rank-1 / partition variants
  std::vector<ElementSet> per_right;    // transversal: per right vertex, the
                                        // sampled subset of its neighborhood
};

FamilyRealization sample_family(const Instance& instance, SchemeKind scheme,
                                SplitRng& rng);
// In-place variant for tight simulation loops.
void sample_family_into(FamilyRealization& out, const Instance& instance,
                        SchemeKind scheme, SplitRng& rng);

// Single-coin samplers over a rank-1 point. Coins are consumed in element
// index order, one per element, regardless of the probability value.
FamilyRealization sample_family_halving(const FractionalPoint& point,
                                        SplitRng& rng);
FamilyRealization sample_family_linear(const FractionalPoint& point,
                                       SplitRng& rng);
FamilyRealization sample_family_exponential(const FractionalPoint& point,
                                            SplitRng& rng);
// Applies the base single-item sampler within each part; base must be
// linear or exponential.
FamilyRealization sample_family_partition(const FractionalPoint& point,
                                          const PartitionConstraint& partition,
                                          SplitRng& rng, SchemeKind base);
// Coins are consumed element by element, then neighbor by neighbor in
// adjacency order.
FamilyRealization sample_family_transversal(
    const FractionalPoint& point, const TransversalConstraint& transversal,
    SplitRng& rng);

// Membership of S in the realized family: empty set or kept singletons
// (one per part for partitions); for transversal constraints, a matching
// saturating S that uses only sampled edges.
bool family_contains(const Constraint& constraint,
                     const FamilyRealization& family, const ElementSet& s);

// Scans elements in `order`, accepting an active element whenever the
// selected set stays inside the family. Decisions are irrevocable and made
// before later arrivals are inspected.
ElementSet run_online(const Constraint& constraint,
                      const FamilyRealization& family,
                      const ElementSet& active, std::span<const int> order);

// Whether e joins every feasible subset of `active` — the event that e is
// selected no matter how the adversary orders arrivals. Exact for all three
// constraint classes; the transversal case refuses active sets larger than
// `enumeration_cap` (Error(too_large)).
bool can_always_add(const Constraint& constraint,
                    const FamilyRealization& family, const ElementSet& active,
                    int e, int enumeration_cap = kDefaultEnumerationCap);

// Literal form of the same event: enumerates every feasible subset of the
// active set. Returns nullopt when the active set exceeds `cap`. Kept as an
// independent cross-check for the structural fast paths above.
std::optional<bool> can_always_add_enumerated(
    const Constraint& constraint, const FamilyRealization& family,
    const ElementSet& active, int e, int cap = kDefaultEnumerationCap);

// {"kept": [int,...]} or {"per_right": [[int,...],...]} for replay/debugging.
std::string realization_to_json(const FamilyRealization& family);
FamilyRealization realization_from_json(const std::string& text,
                                        const Constraint& constraint);

}  // namespace ocrs

#endif  // OCRS_SCHEME_HPP
