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

#ifndef OCRS_INSTANCE_HPP
#define OCRS_INSTANCE_HPP

#include <cstdint>
#include <string>

#include "ocrs/constraint.hpp"

namespace ocrs {

// A constraint paired with a fractional point in its relaxation.
struct Instance {
  Constraint constraint;
  FractionalPoint point;

  int size() const { return ground_size(constraint); }
  ConstraintKind kind() const { return constraint_kind(constraint); }
};

// Schema:
//   {"kind": "rank1"|"partition"|"transversal", "n": int, "x": [float,...],
//    "parts": [[int,...],...]            (partition only),
//    "right_count": int, "adjacency": [[int,...],...]  (transversal only)}
// Malformed input raises Error(parse) with a position/field diagnostic.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

// Generators. All are pure functions of their arguments; instances they
// return are accepted by validate_point.

// x_i = 1/n on a rank-1 constraint.
Instance gen_uniform_rank1(int n);

// x drawn uniformly from the simplex scaled by (1 - slack), via sorted
// uniform spacings.
Instance gen_random_rank1(int n, std::uint64_t seed, double slack);

// Random balanced partition into `parts` parts; per-part x drawn from the
// simplex scaled by a per-part uniform slack.
Instance gen_random_partition(int n, int parts, std::uint64_t seed);

// Each element receives a uniformly random neighbor set of size >= min_deg;
// x is drawn uniformly then rescaled so every right-vertex neighborhood sum
// is at most 1.
Instance gen_random_transversal(int n_left, int n_right, int min_deg,
                                std::uint64_t seed);

}  // namespace ocrs

#endif  // OCRS_INSTANCE_HPP
