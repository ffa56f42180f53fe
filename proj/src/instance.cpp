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

#include "ocrs/instance.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ocrs/error.hpp"
#include "ocrs/rng.hpp"

namespace ocrs {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::parse, what);
}

std::vector<double> read_x(const ordered_json& j, int n) {
  if (!j.contains("x") || !j["x"].is_array())
    parse_fail("field \"x\" missing or not an array");
  if (static_cast<int>(j["x"].size()) != n) {
    std::ostringstream os;
    os << "field \"x\" has " << j["x"].size() << " entries, expected " << n;
    parse_fail(os.str());
  }
  std::vector<double> x;
  x.reserve(n);
  for (std::size_t i = 0; i < j["x"].size(); ++i) {
    if (!j["x"][i].is_number()) {
      std::ostringstream os;
      os << "field \"x\"[" << i << "] is not a number";
      parse_fail(os.str());
    }
    x.push_back(j["x"][i].get<double>());
  }
  return x;
}

std::vector<std::vector<int>> read_index_lists(const ordered_json& j,
                                               const char* field) {
  if (!j.contains(field) || !j[field].is_array()) {
    std::ostringstream os;
    os << "field \"" << field << "\" missing or not an array";
    parse_fail(os.str());
  }
  std::vector<std::vector<int>> lists;
  for (std::size_t i = 0; i < j[field].size(); ++i) {
    const auto& row = j[field][i];
    if (!row.is_array()) {
      std::ostringstream os;
      os << "field \"" << field << "\"[" << i << "] is not an array";
      parse_fail(os.str());
    }
    std::vector<int> entries;
    for (const auto& v : row) {
      if (!v.is_number_integer()) {
        std::ostringstream os;
        os << "field \"" << field << "\"[" << i << "] has a non-integer entry";
        parse_fail(os.str());
      }
      entries.push_back(v.get<int>());
    }
    lists.push_back(std::move(entries));
  }
  return lists;
}

// Uniform integer in [lo, hi] from a 53-bit uniform double.
int uniform_int(SplitRng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.next_double() * (hi - lo + 1));
}

// Point uniform on { y >= 0 : sum y = scale } via sorted uniform spacings.
std::vector<double> simplex_point(int n, double scale, SplitRng& rng) {
  std::vector<double> cuts(n - 1);
  for (auto& c : cuts) c = rng.next_double();
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> out(n);
  double prev = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    out[i] = (cuts[i] - prev) * scale;
    prev = cuts[i];
  }
  out[n - 1] = (1.0 - prev) * scale;
  return out;
}

}  // namespace

Instance instance_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!j.is_object()) parse_fail("top-level JSON value is not an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    parse_fail("field \"kind\" missing or not a string");
  if (!j.contains("n") || !j["n"].is_number_integer())
    parse_fail("field \"n\" missing or not an integer");
  int n = j["n"].get<int>();
  if (n < 1) parse_fail("field \"n\" must be >= 1");
  std::string kind = j["kind"].get<std::string>();

  Instance inst;
  inst.point.x = read_x(j, n);
  if (kind == "rank1") {
    inst.constraint = RankOneConstraint{GroundSet{n}};
  } else if (kind == "partition") {
    try {
      inst.constraint = PartitionConstraint::make(n, read_index_lists(j, "parts"));
    } catch (const Error& e) {
      parse_fail(std::string("field \"parts\": ") + e.what());
    }
  } else if (kind == "transversal") {
    if (!j.contains("right_count") || !j["right_count"].is_number_integer())
      parse_fail("field \"right_count\" missing or not an integer");
    try {
      inst.constraint = TransversalConstraint::make(
          n, j["right_count"].get<int>(), read_index_lists(j, "adjacency"));
    } catch (const Error& e) {
      parse_fail(std::string("field \"adjacency\": ") + e.what());
    }
  } else {
    parse_fail("field \"kind\" must be rank1, partition, or transversal");
  }
  return inst;
}

std::string instance_to_json(const Instance& instance) {
  ordered_json j;
  j["kind"] = to_string(instance.kind());
  j["n"] = instance.size();
  j["x"] = instance.point.x;
  if (const auto* p = std::get_if<PartitionConstraint>(&instance.constraint))
    j["parts"] = p->parts;
  if (const auto* t = std::get_if<TransversalConstraint>(&instance.constraint)) {
    j["right_count"] = t->right_count;
    j["adjacency"] = t->adjacency;
  }
  return j.dump(2);
}

Instance gen_uniform_rank1(int n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  Instance inst;
  inst.constraint = RankOneConstraint{GroundSet{n}};
  inst.point.x.assign(n, 1.0 / n);
  return inst;
}

Instance gen_random_rank1(int n, std::uint64_t seed, double slack) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (!(slack >= 0.0 && slack <= 1.0))
    throw Error(ErrorCode::invalid_argument, "slack must be in [0, 1]");
  Instance inst;
  inst.constraint = RankOneConstraint{GroundSet{n}};
  SplitRng rng(seed, 0);
  inst.point.x = simplex_point(n, 1.0 - slack, rng);
  return inst;
}

Instance gen_random_partition(int n, int parts, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (parts < 1 || parts > n)
    throw Error(ErrorCode::invalid_argument, "parts must be in [1, n]");

  SplitRng structure(seed, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[uniform_int(structure, 0, i)]);

  // Balanced sizes: the first (n mod parts) parts get one extra element.
  std::vector<std::vector<int>> part_lists(parts);
  int base = n / parts, extra = n % parts, pos = 0;
  for (int p = 0; p < parts; ++p) {
    int len = base + (p < extra ? 1 : 0);
    part_lists[p].assign(order.begin() + pos, order.begin() + pos + len);
    std::sort(part_lists[p].begin(), part_lists[p].end());
    pos += len;
  }

  SplitRng values(seed, 1);
  std::vector<double> x(n, 0.0);
  for (auto& part : part_lists) {
    double slack = values.next_double();
    std::vector<double> y = simplex_point(static_cast<int>(part.size()),
                                          1.0 - slack, values);
    for (std::size_t i = 0; i < part.size(); ++i) x[part[i]] = y[i];
  }

  Instance inst;
  inst.constraint = PartitionConstraint::make(n, std::move(part_lists));
  inst.point.x = std::move(x);
  return inst;
}

Instance gen_random_transversal(int n_left, int n_right, int min_deg,
                                std::uint64_t seed) {
  if (n_left < 1) throw Error(ErrorCode::invalid_argument, "n_left must be >= 1");
  if (n_right < 1)
    throw Error(ErrorCode::invalid_argument, "n_right must be >= 1");
  if (min_deg < 1 || min_deg > n_right)
    throw Error(ErrorCode::invalid_argument, "min_deg must be in [1, n_right]");

  SplitRng structure(seed, 0);
  std::vector<std::vector<int>> adjacency(n_left);
  std::vector<int> pool(n_right);
  for (int u = 0; u < n_left; ++u) {
    int degree = uniform_int(structure, min_deg, n_right);
    for (int v = 0; v < n_right; ++v) pool[v] = v;
    for (int i = 0; i < degree; ++i)
      std::swap(pool[i], pool[uniform_int(structure, i, n_right - 1)]);
    adjacency[u].assign(pool.begin(), pool.begin() + degree);
    std::sort(adjacency[u].begin(), adjacency[u].end());
  }

  SplitRng values(seed, 1);
  std::vector<double> x(n_left);
  for (auto& v : x) v = values.next_double();
  std::vector<double> right_sum(n_right, 0.0);
  for (int u = 0; u < n_left; ++u)
    for (int v : adjacency[u]) right_sum[v] += x[u];
  double worst = 0.0;
  for (double s : right_sum) worst = std::max(worst, s);
  if (worst > 1.0)
    for (auto& v : x) v /= worst;

  Instance inst;
  inst.constraint =
      TransversalConstraint::make(n_left, n_right, std::move(adjacency));
  inst.point.x = std::move(x);
  return inst;
}

}  // namespace ocrs
