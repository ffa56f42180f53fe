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

#include "ocrs/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <sstream>

#include "ocrs/error.hpp"
#include "ocrs/numeric.hpp"

namespace ocrs {

namespace {

void require_unit_range(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
      std::ostringstream os;
      os << what << "[" << i << "] = " << values[i] << " is outside [0, 1]";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }
}

// Selection probability for `element` against the competitors listed in
// `part` (in list order): q_e * prod_{j in part, j != e} (1 - x_j q_j).
double part_product(std::span<const int> part, std::span<const double> x,
                    std::span<const double> q, int element) {
  double r = q[element];
  for (int j : part)
    if (j != element) r *= 1.0 - x[j] * q[j];
  return r;
}

// w[mask] = prod_{i in mask} p_i * prod_{i not in mask} (1 - p_i).
std::vector<double> subset_weights(std::span<const double> p) {
  std::vector<double> w(std::size_t{1} << p.size(), 1.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    std::size_t half = std::size_t{1} << k;
    for (std::size_t mask = 0; mask < half; ++mask) {
      w[mask | half] = w[mask] * p[k];
      w[mask] *= 1.0 - p[k];
    }
  }
  return w;
}

[[noreturn]] void refuse_size(std::uint64_t bits) {
  std::ostringstream os;
  os << "brute force would enumerate 2^" << bits
     << " outcomes, above the cap 2^24 = " << kBruteForceOutcomeCap
     << "; use Monte Carlo instead";
  throw Error(ErrorCode::too_large, os.str());
}

// Single-coin families (rank-1 treated as one part spanning the ground set).
BruteForceResult brute_force_kept(const std::vector<std::vector<int>>& parts,
                                  const std::vector<int>& part_of,
                                  std::span<const double> x,
                                  std::span<const double> q) {
  int n = static_cast<int>(x.size());
  if (static_cast<std::uint64_t>(2 * n) >= 25) refuse_size(2 * n);
  std::uint32_t full = std::uint32_t{1} << n;

  std::vector<double> weight_active = subset_weights(x);
  std::vector<double> weight_kept = subset_weights(q);
  std::vector<std::uint32_t> part_mask(parts.size(), 0);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int e : parts[p]) part_mask[p] |= std::uint32_t{1} << e;

  std::vector<NeumaierSum> conditional(n), joint(n);
  std::vector<int> part_count(parts.size());
  for (std::uint32_t kept = 0; kept < full; ++kept) {
    double wk = weight_kept[kept];
    for (std::uint32_t active = 0; active < full; ++active) {
      double w = wk * weight_active[active];
      std::uint32_t live = kept & active;  // kept elements that came up active
      for (std::size_t p = 0; p < parts.size(); ++p)
        part_count[p] = std::popcount(live & part_mask[p]);
      for (int e = 0; e < n; ++e) {
        if (!((kept >> e) & 1)) continue;
        int rivals = part_count[part_of[e]] - ((live >> e) & 1);
        if (rivals != 0) continue;
        conditional[e].add(w);
        if ((active >> e) & 1) joint[e].add(w);
      }
    }
  }

  BruteForceResult out;
  out.conditional.resize(n);
  out.joint_with_active.resize(n);
  for (int e = 0; e < n; ++e) {
    out.conditional[e] = conditional[e].value();
    out.joint_with_active[e] = joint[e].value();
  }
  return out;
}

// Read-only augmenting machinery over right-neighborhood masks, used at the
// leaves of the transversal enumeration.
class LeafMatcher {
 public:
  void solve(const std::uint32_t* masks, int count) {
    masks_ = masks;
    count_ = count;
    for (int v = 0; v < 32; ++v) owner_[v] = -1;
    size_ = 0;
    for (int i = 0; i < count; ++i) {
      std::uint32_t visited = 0;
      if (augment(i, visited)) ++size_;
    }
  }

  int size() const { return size_; }

  // Whether a new left vertex with neighborhood `vmask` could be matched on
  // top of the current matching. Does not modify state: existence of an
  // augmenting path is enough.
  bool probe(std::uint32_t vmask) const {
    std::uint32_t visited = 0;
    return reachable(vmask, visited);
  }

 private:
  bool augment(int u, std::uint32_t& visited) {
    while (true) {
      std::uint32_t candidates = masks_[u] & ~visited;
      if (!candidates) return false;
      int v = std::countr_zero(candidates);
      visited |= std::uint32_t{1} << v;
      if (owner_[v] < 0 || augment(owner_[v], visited)) {
        owner_[v] = u;
        return true;
      }
    }
  }

  bool reachable(std::uint32_t vmask, std::uint32_t& visited) const {
    while (true) {
      std::uint32_t candidates = vmask & ~visited;
      if (!candidates) return false;
      int v = std::countr_zero(candidates);
      visited |= std::uint32_t{1} << v;
      if (owner_[v] < 0 || reachable(masks_[owner_[v]], visited)) return true;
    }
  }

  const std::uint32_t* masks_ = nullptr;
  int count_ = 0;
  int owner_[32];
  int size_ = 0;
};

struct EdgeCoin {
  int left;       // position within the active list
  int right;
  double keep;    // q of the owning element
};

// Per-element enumeration: activity patterns over the other elements, coin
// patterns over edges incident to the active ones. The element's own coins
// enter in closed form: given the set W of right vertices v where a lone
// edge (e, v) would extend the matching, the event hits with probability
// 1 - (1 - q_e)^|W|. Coins on edges of inactive elements integrate out.
double brute_force_transversal_element(const TransversalConstraint& t,
                                       std::span<const double> x, int e) {
  int n = t.left.size;
  int degree_e = static_cast<int>(t.adjacency[e].size());
  double qe = transversal_keep_probability(x[e], degree_e);
  std::vector<double> hit(degree_e + 1, 0.0);
  for (int j = 1; j <= degree_e; ++j) hit[j] = -std::expm1(j * std::log1p(-qe));

  std::vector<int> others;
  std::vector<double> x_others;
  for (int u = 0; u < n; ++u)
    if (u != e) {
      others.push_back(u);
      x_others.push_back(x[u]);
    }
  std::vector<double> weight_active = subset_weights(x_others);

  std::vector<std::uint32_t> right_mask(n, 0);
  std::vector<std::uint32_t> leaf_masks(n, 0);
  std::vector<EdgeCoin> edges;
  std::vector<int> active_list;
  NeumaierSum total;
  LeafMatcher matcher;

  auto enumerate = [&](auto&& self, std::size_t edge_idx, double weight) -> void {
    if (edge_idx == edges.size()) {
      for (std::size_t i = 0; i < active_list.size(); ++i)
        leaf_masks[i] = right_mask[active_list[i]];
      matcher.solve(leaf_masks.data(), static_cast<int>(active_list.size()));
      int open = 0;
      for (int v : t.adjacency[e])
        if (matcher.probe(std::uint32_t{1} << v)) ++open;
      total.add(weight * hit[open]);
      return;
    }
    const EdgeCoin& edge = edges[edge_idx];
    std::uint32_t bit = std::uint32_t{1} << edge.right;
    right_mask[edge.left] |= bit;
    self(self, edge_idx + 1, weight * edge.keep);
    right_mask[edge.left] &= ~bit;
    self(self, edge_idx + 1, weight * (1.0 - edge.keep));
  };

  std::uint32_t patterns = std::uint32_t{1} << others.size();
  for (std::uint32_t amask = 0; amask < patterns; ++amask) {
    double wa = weight_active[amask];
    if (wa == 0.0) continue;
    active_list.clear();
    edges.clear();
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (!((amask >> i) & 1)) continue;
      int u = others[i];
      active_list.push_back(u);
      double qu = transversal_keep_probability(
          x[u], static_cast<int>(t.adjacency[u].size()));
      for (int v : t.adjacency[u])
        edges.push_back({u, v, qu});
    }
    enumerate(enumerate, 0, wa);
  }
  return total.value();
}

}  // namespace

std::vector<double> exact_selectability_rank1(std::span<const double> x,
                                              std::span<const double> q) {
  if (x.size() != q.size())
    throw Error(ErrorCode::invalid_argument,
                "x and q must have the same length");
  require_unit_range(x, "x");
  require_unit_range(q, "q");
  int n = static_cast<int>(x.size());
  std::vector<int> everyone(n);
  for (int i = 0; i < n; ++i) everyone[i] = i;
  std::vector<double> r(n);
  for (int e = 0; e < n; ++e) r[e] = part_product(everyone, x, q, e);
  return r;
}

std::vector<double> exact_selectability(const Instance& instance,
                                        SchemeKind scheme) {
  require_compatible(instance, scheme);
  if (scheme == SchemeKind::transversal)
    throw Error(ErrorCode::kind_mismatch,
                "no closed form for the transversal scheme; use brute force "
                "or Monte Carlo");
  std::vector<double> q = kept_probabilities(instance, scheme);
  const auto& x = instance.point.x;
  int n = instance.size();
  std::vector<double> r(n);
  if (const auto* p = std::get_if<PartitionConstraint>(&instance.constraint)) {
    for (int e = 0; e < n; ++e)
      r[e] = part_product(p->parts[p->part_of[e]], x, q, e);
  } else {
    std::vector<int> everyone(n);
    for (int i = 0; i < n; ++i) everyone[i] = i;
    for (int e = 0; e < n; ++e) r[e] = part_product(everyone, x, q, e);
  }
  return r;
}

BruteForceResult brute_force_selectability_full(const Instance& instance,
                                                SchemeKind scheme) {
  require_compatible(instance, scheme);
  PointValidation valid = validate_point(instance.constraint, instance.point);
  if (!valid.ok)
    throw Error(ErrorCode::invalid_argument,
                "instance point is infeasible: " + valid.message);
  int n = instance.size();

  if (scheme == SchemeKind::transversal) {
    const auto& t = std::get<TransversalConstraint>(instance.constraint);
    std::uint64_t edge_count = 0;
    for (const auto& nbrs : t.adjacency) edge_count += nbrs.size();
    if (static_cast<std::uint64_t>(n) + edge_count >= 25)
      refuse_size(n + edge_count);
    BruteForceResult out;
    out.conditional.resize(n);
    out.joint_with_active.resize(n);
    for (int e = 0; e < n; ++e) {
      out.conditional[e] =
          brute_force_transversal_element(t, instance.point.x, e);
      // The event never reads e's own activity coin, so the joint factors.
      out.joint_with_active[e] = instance.point.x[e] * out.conditional[e];
    }
    return out;
  }

  std::vector<double> q = kept_probabilities(instance, scheme);
  if (const auto* p = std::get_if<PartitionConstraint>(&instance.constraint))
    return brute_force_kept(p->parts, p->part_of, instance.point.x, q);
  std::vector<std::vector<int>> one_part(1, std::vector<int>(n));
  for (int i = 0; i < n; ++i) one_part[0][i] = i;
  std::vector<int> part_of(n, 0);
  return brute_force_kept(one_part, part_of, instance.point.x, q);
}

std::vector<double> brute_force_selectability(const Instance& instance,
                                              SchemeKind scheme) {
  return brute_force_selectability_full(instance, scheme).conditional;
}

double brute_force_selectability(const Instance& instance, SchemeKind scheme,
                                 int element) {
  if (element < 0 || element >= instance.size())
    throw Error(ErrorCode::invalid_argument, "element index out of range");
  return brute_force_selectability(instance, scheme)[element];
}

LogInequalitySides selection_log_inequality(std::span<const double> a) {
  require_unit_range(a, "a");
  LogInequalitySides sides;
  if (a.empty()) return sides;
  std::size_t k = a.size() - 1;
  NeumaierSum lhs, rhs;
  lhs.add(std::log1p(-a[k] / 2.0));
  for (std::size_t j = 0; j < k; ++j) lhs.add(std::log1p(-a[j] + a[j] * a[j] / 2.0));
  for (double v : a) rhs.add(-v);
  sides.lhs = lhs.value();
  sides.rhs = rhs.value();
  return sides;
}

CertificateValues certificate_functions(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw Error(ErrorCode::invalid_argument, "x must be in [0, 1]");
  double ex = std::exp(x);
  return {ex * (1.0 - x / 2.0), ex * (1.0 - x + x * x / 2.0)};
}

double degree_selectability_floor(int k, double x) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "k must be >= 1");
  if (!(x >= 0.0 && x <= 1.0))
    throw Error(ErrorCode::invalid_argument, "x must be in [0, 1]");
  double activation = exponential_keep_probability(x);
  double blocked = std::pow(-std::expm1(x - 1.0), k);
  return activation * (1.0 - blocked);
}

TransversalElementBounds transversal_element_bounds(
    const TransversalConstraint& constraint, const FractionalPoint& point,
    int element) {
  if (element < 0 || element >= constraint.left.size)
    throw Error(ErrorCode::invalid_argument, "element index out of range");
  if (point.size() != constraint.left.size)
    throw Error(ErrorCode::invalid_argument,
                "point dimension does not match the ground set");
  int k = static_cast<int>(constraint.adjacency[element].size());
  double x = point.x[element];
  TransversalElementBounds out;
  out.activation_probability = exponential_keep_probability(x);
  out.blocking_upper_bound = std::pow(-std::expm1(x - 1.0), k);
  out.selectability_lower_bound = degree_selectability_floor(k, x);
  return out;
}

AlphaSummary product_family_alpha(std::span<const double> q) {
  require_unit_range(q, "q");
  int n = static_cast<int>(q.size());
  if (n < 1) throw Error(ErrorCode::invalid_argument, "q must be nonempty");

  auto poisson_binomial = [](std::span<const double> p) {
    std::vector<double> dist(1, 1.0);
    for (double v : p) {
      dist.push_back(0.0);
      for (std::size_t k = dist.size() - 1; k > 0; --k)
        dist[k] = dist[k] * (1.0 - v) + dist[k - 1] * v;
      dist[0] *= 1.0 - v;
    }
    return dist;
  };

  AlphaSummary summary;
  summary.n = n;
  summary.exact = true;
  summary.beta = poisson_binomial(q);
  summary.mass.assign(n, std::vector<double>(n + 1, 0.0));
  std::vector<double> rest;
  rest.reserve(n - 1);
  for (int e = 0; e < n; ++e) {
    rest.clear();
    for (int j = 0; j < n; ++j)
      if (j != e) rest.push_back(q[j]);
    std::vector<double> dist = poisson_binomial(rest);
    for (int k = 1; k <= n; ++k) summary.mass[e][k] = q[e] * dist[k - 1];
  }
  return summary;
}

namespace {

void require_summary_shape(const AlphaSummary& summary) {
  if (summary.n < 1)
    throw Error(ErrorCode::invalid_argument, "summary has empty ground set");
  if (static_cast<int>(summary.beta.size()) != summary.n + 1 ||
      static_cast<int>(summary.mass.size()) != summary.n)
    throw Error(ErrorCode::invalid_argument, "summary arrays have wrong shape");
  for (const auto& row : summary.mass)
    if (static_cast<int>(row.size()) != summary.n + 1)
      throw Error(ErrorCode::invalid_argument,
                  "summary mass rows have wrong shape");
}

}  // namespace

std::vector<double> worst_order_bound(const AlphaSummary& summary) {
  require_summary_shape(summary);
  int n = summary.n;
  double factor = 1.0 - 1.0 / n;
  std::vector<double> bound(n, 0.0);
  for (int e = 0; e < n; ++e) {
    NeumaierSum mass_total, value;
    for (int k = 0; k <= n; ++k) mass_total.add(summary.mass[e][k]);
    if (mass_total.value() > 1.0 + 1e-9) {
      std::ostringstream os;
      os << "summary masses for element " << e << " sum to "
         << mass_total.value() << " (> 1): invalid summary";
      throw Error(ErrorCode::invalid_argument, os.str());
    }
    for (int k = 1; k <= n; ++k)
      value.add(std::pow(factor, k - 1) * summary.mass[e][k]);
    bound[e] = value.value();
  }
  return bound;
}

double greedy_ceiling(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (n == 1) return 1.0;
  double nd = static_cast<double>(n);
  return std::pow(1.0 - 1.0 / nd, nd - 1.0);
}

double mass_balance_residual(const AlphaSummary& summary) {
  require_summary_shape(summary);
  int n = summary.n;
  NeumaierSum beta_total;
  for (double b : summary.beta) beta_total.add(b);
  if (std::abs(beta_total.value() - 1.0) > 1e-9)
    throw Error(ErrorCode::invalid_argument,
                "summary size masses do not sum to 1");
  double factor = 1.0 - 1.0 / n;
  std::vector<double> bound = worst_order_bound(summary);
  NeumaierSum lhs, rhs;
  for (double b : bound) lhs.add(b);
  for (int k = 1; k <= n; ++k)
    rhs.add(summary.beta[k] * k * std::pow(factor, k - 1));
  return std::abs(lhs.value() - rhs.value());
}

}  // namespace ocrs
