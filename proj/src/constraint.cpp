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

#include "ocrs/constraint.hpp"

#include <algorithm>
#include <sstream>

#include "ocrs/error.hpp"
#include "ocrs/matching.hpp"

namespace ocrs {

const char* to_string(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::rank1:
      return "rank1";
    case ConstraintKind::partition:
      return "partition";
    case ConstraintKind::transversal:
      return "transversal";
  }
  return "?";
}

PartitionConstraint PartitionConstraint::make(
    int ground_size, std::vector<std::vector<int>> parts) {
  if (ground_size < 1)
    throw Error(ErrorCode::invalid_argument, "ground set must be nonempty");
  std::vector<int> part_of(ground_size, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int e : parts[p]) {
      if (e < 0 || e >= ground_size) {
        std::ostringstream os;
        os << "parts[" << p << "] contains out-of-range element " << e;
        throw Error(ErrorCode::invalid_argument, os.str());
      }
      if (part_of[e] != -1) {
        std::ostringstream os;
        os << "element " << e << " appears in parts " << part_of[e] << " and "
           << p;
        throw Error(ErrorCode::invalid_argument, os.str());
      }
      part_of[e] = static_cast<int>(p);
    }
  }
  for (int e = 0; e < ground_size; ++e) {
    if (part_of[e] == -1) {
      std::ostringstream os;
      os << "element " << e << " is not covered by any part";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }
  PartitionConstraint c;
  c.ground.size = ground_size;
  c.parts = std::move(parts);
  c.part_of = std::move(part_of);
  return c;
}

TransversalConstraint TransversalConstraint::make(
    int left_count, int right_count, std::vector<std::vector<int>> adjacency) {
  if (left_count < 1)
    throw Error(ErrorCode::invalid_argument, "ground set must be nonempty");
  if (right_count < 1)
    throw Error(ErrorCode::invalid_argument, "right_count must be >= 1");
  if (static_cast<int>(adjacency.size()) != left_count)
    throw Error(ErrorCode::invalid_argument,
                "adjacency must list one neighbor set per element");
  for (int u = 0; u < left_count; ++u) {
    auto& nbrs = adjacency[u];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (nbrs.empty()) {
      std::ostringstream os;
      os << "element " << u << " has an empty neighbor set";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
    if (nbrs.front() < 0 || nbrs.back() >= right_count) {
      std::ostringstream os;
      os << "adjacency[" << u << "] has a neighbor outside [0, " << right_count
         << ")";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }
  TransversalConstraint c;
  c.left.size = left_count;
  c.right_count = right_count;
  c.adjacency = std::move(adjacency);
  return c;
}

ConstraintKind constraint_kind(const Constraint& constraint) {
  if (std::holds_alternative<RankOneConstraint>(constraint))
    return ConstraintKind::rank1;
  if (std::holds_alternative<PartitionConstraint>(constraint))
    return ConstraintKind::partition;
  return ConstraintKind::transversal;
}

int ground_size(const Constraint& constraint) {
  return std::visit(
      [](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>,
                                     TransversalConstraint>)
          return c.left.size;
        else
          return c.ground.size;
      },
      constraint);
}

namespace {

PointValidation reject_sum(const char* scope, int index, double sum) {
  std::ostringstream os;
  os << "sum of x over " << scope;
  if (index >= 0) os << " " << index;
  os << " is " << sum << " (exceeds 1 by " << sum - 1.0 << ")";
  return {false, os.str()};
}

PointValidation check_box(const FractionalPoint& point) {
  for (int i = 0; i < point.size(); ++i) {
    double v = point.x[i];
    if (!(v >= -kFeasibilityTolerance && v <= 1.0 + kFeasibilityTolerance)) {
      std::ostringstream os;
      os << "x[" << i << "] = " << v << " is outside [0, 1]";
      return {false, os.str()};
    }
  }
  return {true, ""};
}

}  // namespace

PointValidation validate_point(const Constraint& constraint,
                               const FractionalPoint& point) {
  int n = ground_size(constraint);
  if (point.size() != n) {
    std::ostringstream os;
    os << "point has dimension " << point.size() << ", constraint expects "
       << n;
    throw Error(ErrorCode::invalid_argument, os.str());
  }
  PointValidation box = check_box(point);
  if (!box.ok) return box;

  if (const auto* r = std::get_if<RankOneConstraint>(&constraint)) {
    (void)r;
    double sum = 0.0;
    for (double v : point.x) sum += v;
    if (sum > 1.0 + kFeasibilityTolerance)
      return reject_sum("the ground set", -1, sum);
    return {true, ""};
  }
  if (const auto* p = std::get_if<PartitionConstraint>(&constraint)) {
    for (std::size_t j = 0; j < p->parts.size(); ++j) {
      double sum = 0.0;
      for (int e : p->parts[j]) sum += point.x[e];
      if (sum > 1.0 + kFeasibilityTolerance)
        return reject_sum("part", static_cast<int>(j), sum);
    }
    return {true, ""};
  }
  const auto& t = std::get<TransversalConstraint>(constraint);
  std::vector<double> right_sum(t.right_count, 0.0);
  for (int u = 0; u < t.left.size; ++u)
    for (int v : t.adjacency[u]) right_sum[v] += point.x[u];
  for (int v = 0; v < t.right_count; ++v)
    if (right_sum[v] > 1.0 + kFeasibilityTolerance)
      return reject_sum("the neighborhood of right vertex", v, right_sum[v]);
  return {true, ""};
}

bool is_independent(const Constraint& constraint, const ElementSet& s) {
  int n = ground_size(constraint);
  if (s.universe() != n)
    throw Error(ErrorCode::invalid_argument,
                "set universe does not match the ground set");

  if (std::holds_alternative<RankOneConstraint>(constraint))
    return s.count() <= 1;

  if (const auto* p = std::get_if<PartitionConstraint>(&constraint)) {
    std::vector<char> seen(p->parts.size(), 0);
    bool ok = true;
    s.for_each([&](int e) {
      int part = p->part_of[e];
      if (seen[part]) ok = false;
      seen[part] = 1;
    });
    return ok;
  }

  const auto& t = std::get<TransversalConstraint>(constraint);
  MatchingResult m = max_matching_if(t.left.size, t.right_count, t.adjacency,
                                     s, [](int, int) { return true; });
  return m.size == s.count();
}

}  // namespace ocrs
