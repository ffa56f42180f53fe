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

#ifndef OCRS_CONSTRAINT_HPP
#define OCRS_CONSTRAINT_HPP

#include <string>
#include <variant>
#include <vector>

#include "ocrs/element_set.hpp"

namespace ocrs {

// Absolute slack allowed on every linear feasibility inequality; absorbs
// round-off from parsing and generator rescaling.
inline constexpr double kFeasibilityTolerance = 1e-9;

// Enumeration paths (brute force, exhaustive adversaries) require the ground
// set to fit one bitset word; Monte Carlo paths accept larger instances.
inline constexpr int kEnumerationGroundCap = 64;

enum class ConstraintKind { rank1, partition, transversal };

const char* to_string(ConstraintKind kind);

struct GroundSet {
  int size = 0;  // elements are 0..size-1
};

// At most one element may be selected; relaxation { x : sum_i x_i <= 1 }.
struct RankOneConstraint {
  GroundSet ground;
};

// At most one element per part; relaxation bounds each part's sum by 1.
struct PartitionConstraint {
  GroundSet ground;
  std::vector<std::vector<int>> parts;
  std::vector<int> part_of;  // element index -> part index

  // Validates that parts are disjoint, in range, and cover the ground set.
  static PartitionConstraint make(int ground_size,
                                  std::vector<std::vector<int>> parts);
};

// Elements are left vertices of a bipartite graph; a set is independent when
// some matching saturates it. The input domain used by the schemes bounds
// each right vertex's neighborhood sum by 1 (see validate_point); this is
// narrower than the matroid polytope and is the domain the transversal
// scheme's guarantee is stated for.
struct TransversalConstraint {
  GroundSet left;
  int right_count = 0;
  std::vector<std::vector<int>> adjacency;  // sorted, duplicate-free; |N(u)| >= 1

  static TransversalConstraint make(int left_count, int right_count,
                                    std::vector<std::vector<int>> adjacency);
};

using Constraint =
    std::variant<RankOneConstraint, PartitionConstraint, TransversalConstraint>;

ConstraintKind constraint_kind(const Constraint& constraint);
int ground_size(const Constraint& constraint);

struct FractionalPoint {
  std::vector<double> x;

  int size() const { return static_cast<int>(x.size()); }
};

struct PointValidation {
  bool ok = false;
  std::string message;  // empty when ok; otherwise first violation + slack
};

// Accepts iff x is within [0,1]^n and every constraint-class inequality
// holds to kFeasibilityTolerance. A dimension mismatch is a structural
// error (throws) rather than an infeasibility.
PointValidation validate_point(const Constraint& constraint,
                               const FractionalPoint& point);

// rank-1: |S| <= 1; partition: at most one element per part; transversal:
// some matching saturates S.
bool is_independent(const Constraint& constraint, const ElementSet& s);

}  // namespace ocrs

#endif  // OCRS_CONSTRAINT_HPP
