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

#include "ocrs/scheme.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ocrs/error.hpp"
#include "ocrs/matching.hpp"

namespace ocrs {

const char* to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::halving:
      return "halving";
    case SchemeKind::linear:
      return "linear";
    case SchemeKind::exponential:
      return "exponential";
    case SchemeKind::partition_linear:
      return "partition-linear";
    case SchemeKind::partition_exponential:
      return "partition-exponential";
    case SchemeKind::transversal:
      return "transversal";
  }
  return "?";
}

SchemeKind scheme_from_string(const std::string& name) {
  if (name == "halving") return SchemeKind::halving;
  if (name == "linear") return SchemeKind::linear;
  if (name == "exponential") return SchemeKind::exponential;
  if (name == "partition-linear") return SchemeKind::partition_linear;
  if (name == "partition-exponential") return SchemeKind::partition_exponential;
  if (name == "transversal") return SchemeKind::transversal;
  throw Error(ErrorCode::parse, "unknown scheme \"" + name +
                                    "\" (expected halving, linear, "
                                    "exponential, partition-linear, "
                                    "partition-exponential, or transversal)");
}

bool scheme_compatible(SchemeKind scheme, ConstraintKind constraint) {
  switch (scheme) {
    case SchemeKind::halving:
    case SchemeKind::linear:
    case SchemeKind::exponential:
      return constraint == ConstraintKind::rank1;
    case SchemeKind::partition_linear:
    case SchemeKind::partition_exponential:
      return constraint == ConstraintKind::partition;
    case SchemeKind::transversal:
      return constraint == ConstraintKind::transversal;
  }
  return false;
}

void require_compatible(const Instance& instance, SchemeKind scheme) {
  if (!scheme_compatible(scheme, instance.kind())) {
    std::ostringstream os;
    os << "scheme \"" << to_string(scheme) << "\" does not apply to a \""
       << to_string(instance.kind()) << "\" constraint";
    throw Error(ErrorCode::kind_mismatch, os.str());
  }
}

double guarantee_threshold(const Instance& instance, SchemeKind scheme) {
  if (scheme == SchemeKind::halving) return 0.25;
  if (scheme == SchemeKind::transversal) {
    const auto& t = std::get<TransversalConstraint>(instance.constraint);
    bool all_deg3 = true;
    for (const auto& nbrs : t.adjacency)
      if (nbrs.size() < 3) all_deg3 = false;
    if (all_deg3) return 1.0 - std::exp(-1.0);
  }
  return std::exp(-1.0);
}

double linear_keep_probability(double x) { return 1.0 - x / 2.0; }

double exponential_keep_probability(double x) {
  if (x == 0.0) return 1.0;
  return -std::expm1(-x) / x;
}

double transversal_keep_probability(double x, int degree) {
  assert(degree >= 1);
  if (x == 0.0) return 1.0;
  return 1.0 - std::pow(1.0 - exponential_keep_probability(x),
                        1.0 / static_cast<double>(degree));
}

std::vector<double> kept_probabilities(const Instance& instance,
                                       SchemeKind scheme) {
  const auto& x = instance.point.x;
  std::vector<double> q(x.size());
  switch (scheme) {
    case SchemeKind::halving:
      std::fill(q.begin(), q.end(), 0.5);
      return q;
    case SchemeKind::linear:
    case SchemeKind::partition_linear:
      for (std::size_t i = 0; i < x.size(); ++i)
        q[i] = linear_keep_probability(x[i]);
      return q;
    case SchemeKind::exponential:
    case SchemeKind::partition_exponential:
      for (std::size_t i = 0; i < x.size(); ++i)
        q[i] = exponential_keep_probability(x[i]);
      return q;
    case SchemeKind::transversal:
      break;
  }
  throw Error(ErrorCode::kind_mismatch,
              "the transversal scheme has per-edge coins, not per-element "
              "keep probabilities");
}

namespace {

FamilyRealization sample_kept(ConstraintKind kind,
                              std::span<const double> keep, SplitRng& rng) {
  FamilyRealization fam;
  fam.kind = kind;
  fam.kept = ElementSet(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (rng.bernoulli(keep[i])) fam.kept.set(static_cast<int>(i));
  return fam;
}

}  // namespace

FamilyRealization sample_family_halving(const FractionalPoint& point,
                                        SplitRng& rng) {
  std::vector<double> keep(point.x.size(), 0.5);
  return sample_kept(ConstraintKind::rank1, keep, rng);
}

FamilyRealization sample_family_linear(const FractionalPoint& point,
                                       SplitRng& rng) {
  std::vector<double> keep(point.x.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    keep[i] = linear_keep_probability(point.x[i]);
  return sample_kept(ConstraintKind::rank1, keep, rng);
}

FamilyRealization sample_family_exponential(const FractionalPoint& point,
                                            SplitRng& rng) {
  std::vector<double> keep(point.x.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    keep[i] = exponential_keep_probability(point.x[i]);
  return sample_kept(ConstraintKind::rank1, keep, rng);
}

FamilyRealization sample_family_partition(const FractionalPoint& point,
                                          const PartitionConstraint& partition,
                                          SplitRng& rng, SchemeKind base) {
  if (base != SchemeKind::linear && base != SchemeKind::exponential)
    throw Error(ErrorCode::kind_mismatch,
                std::string("partition sampler base must be linear or "
                            "exponential, got \"") +
                    to_string(base) + "\"");
  // Coins are per element and independent, so sampling part by part is the
  // same draw as sampling the whole vector in index order.
  FamilyRealization fam = base == SchemeKind::linear
                              ? sample_family_linear(point, rng)
                              : sample_family_exponential(point, rng);
  (void)partition;
  fam.kind = ConstraintKind::partition;
  return fam;
}

FamilyRealization sample_family_transversal(
    const FractionalPoint& point, const TransversalConstraint& transversal,
    SplitRng& rng) {
  FamilyRealization fam;
  fam.kind = ConstraintKind::transversal;
  int n = transversal.left.size;
  fam.per_right.assign(transversal.right_count, ElementSet(n));
  for (int u = 0; u < n; ++u) {
    double q = transversal_keep_probability(
        point.x[u], static_cast<int>(transversal.adjacency[u].size()));
    for (int v : transversal.adjacency[u])
      if (rng.bernoulli(q)) fam.per_right[v].set(u);
  }
  return fam;
}

FamilyRealization sample_family(const Instance& instance, SchemeKind scheme,
                                SplitRng& rng) {
  require_compatible(instance, scheme);
  switch (scheme) {
    case SchemeKind::halving:
      return sample_family_halving(instance.point, rng);
    case SchemeKind::linear:
      return sample_family_linear(instance.point, rng);
    case SchemeKind::exponential:
      return sample_family_exponential(instance.point, rng);
    case SchemeKind::partition_linear:
    case SchemeKind::partition_exponential:
      return sample_family_partition(
          instance.point, std::get<PartitionConstraint>(instance.constraint),
          rng,
          scheme == SchemeKind::partition_linear ? SchemeKind::linear
                                                 : SchemeKind::exponential);
    case SchemeKind::transversal:
      return sample_family_transversal(
          instance.point,
          std::get<TransversalConstraint>(instance.constraint), rng);
  }
  throw Error(ErrorCode::invalid_argument, "unreachable scheme kind");
}

void sample_family_into(FamilyRealization& out, const Instance& instance,
                        SchemeKind scheme, SplitRng& rng) {
  if (scheme != SchemeKind::transversal) {
    int n = instance.size();
    out.kind = instance.kind();
    if (out.kept.universe() != n) out.kept = ElementSet(n);
    out.kept.clear();
    const auto& x = instance.point.x;
    for (int i = 0; i < n; ++i) {
      double q = scheme == SchemeKind::halving ? 0.5
                 : (scheme == SchemeKind::linear ||
                    scheme == SchemeKind::partition_linear)
                     ? linear_keep_probability(x[i])
                     : exponential_keep_probability(x[i]);
      if (rng.bernoulli(q)) out.kept.set(i);
    }
    return;
  }
  const auto& t = std::get<TransversalConstraint>(instance.constraint);
  int n = t.left.size;
  out.kind = ConstraintKind::transversal;
  if (static_cast<int>(out.per_right.size()) != t.right_count ||
      (t.right_count > 0 && out.per_right[0].universe() != n))
    out.per_right.assign(t.right_count, ElementSet(n));
  else
    for (auto& s : out.per_right) s.clear();
  for (int u = 0; u < n; ++u) {
    double q = transversal_keep_probability(
        instance.point.x[u], static_cast<int>(t.adjacency[u].size()));
    for (int v : t.adjacency[u])
      if (rng.bernoulli(q)) out.per_right[v].set(u);
  }
}

bool family_contains(const Constraint& constraint,
                     const FamilyRealization& family, const ElementSet& s) {
  if (s.universe() != ground_size(constraint))
    throw Error(ErrorCode::invalid_argument,
                "set universe does not match the ground set");
  switch (family.kind) {
    case ConstraintKind::rank1: {
      if (s.count() > 1) return false;
      bool ok = true;
      s.for_each([&](int e) { ok = family.kept.test(e); });
      return ok;
    }
    case ConstraintKind::partition: {
      const auto& p = std::get<PartitionConstraint>(constraint);
      std::vector<char> seen(p.parts.size(), 0);
      bool ok = true;
      s.for_each([&](int e) {
        if (!family.kept.test(e)) ok = false;
        int part = p.part_of[e];
        if (seen[part]) ok = false;
        seen[part] = 1;
      });
      return ok;
    }
    case ConstraintKind::transversal: {
      const auto& t = std::get<TransversalConstraint>(constraint);
      MatchingResult m = max_matching_if(
          t.left.size, t.right_count, t.adjacency, s,
          [&](int u, int v) { return family.per_right[v].test(u); });
      return m.size == s.count();
    }
  }
  return false;
}

ElementSet run_online(const Constraint& constraint,
                      const FamilyRealization& family,
                      const ElementSet& active, std::span<const int> order) {
  int n = ground_size(constraint);
  if (static_cast<int>(order.size()) != n)
    throw Error(ErrorCode::invalid_argument,
                "order must be a permutation of the ground set");
#ifndef NDEBUG
  {
    std::vector<char> seen(n, 0);
    for (int e : order) {
      assert(e >= 0 && e < n && !seen[e]);
      seen[e] = 1;
    }
  }
#endif
  ElementSet selected(n);

  if (family.kind == ConstraintKind::rank1 ||
      family.kind == ConstraintKind::partition) {
    const auto* partition = std::get_if<PartitionConstraint>(&constraint);
    std::vector<char> taken(partition ? partition->parts.size() : 1, 0);
    for (int e : order) {
      if (!active.test(e) || !family.kept.test(e)) continue;
      int slot = partition ? partition->part_of[e] : 0;
      if (taken[slot]) continue;
      taken[slot] = 1;
      selected.set(e);
      assert(family_contains(constraint, family, selected));
    }
    return selected;
  }

  const auto& t = std::get<TransversalConstraint>(constraint);
  std::vector<int> right_owner(t.right_count, -1);
  std::vector<char> visited(t.right_count, 0);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : t.adjacency[u]) {
      if (visited[v] || !family.per_right[v].test(u)) continue;
      visited[v] = 1;
      if (right_owner[v] < 0 || self(self, right_owner[v])) {
        right_owner[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int e : order) {
    if (!active.test(e)) continue;
    std::fill(visited.begin(), visited.end(), 0);
    // The matching saturates `selected`, so the augmenting search succeeds
    // exactly when selected + e is in the family.
    if (augment(augment, e)) {
      selected.set(e);
      assert(family_contains(constraint, family, selected));
    } else {
      assert([&] {
        ElementSet with_e = selected;
        with_e.set(e);
        return !family_contains(constraint, family, with_e);
      }());
    }
  }
  return selected;
}

namespace {

// Matching size over `lefts` in the sampled subgraph.
int sampled_rank(const TransversalConstraint& t,
                 const FamilyRealization& family, const ElementSet& lefts) {
  return max_matching_if(t.left.size, t.right_count, t.adjacency, lefts,
                         [&](int u, int v) { return family.per_right[v].test(u); })
      .size;
}

}  // namespace

bool can_always_add(const Constraint& constraint,
                    const FamilyRealization& family, const ElementSet& active,
                    int e, int enumeration_cap) {
  int n = ground_size(constraint);
  if (e < 0 || e >= n)
    throw Error(ErrorCode::invalid_argument, "element index out of range");

  switch (family.kind) {
    case ConstraintKind::rank1: {
      if (!family.kept.test(e)) return false;
      bool blocked = false;
      active.for_each([&](int j) {
        if (j != e && family.kept.test(j)) blocked = true;
      });
      return !blocked;
    }
    case ConstraintKind::partition: {
      if (!family.kept.test(e)) return false;
      const auto& p = std::get<PartitionConstraint>(constraint);
      bool blocked = false;
      active.for_each([&](int j) {
        if (j != e && p.part_of[j] == p.part_of[e] && family.kept.test(j))
          blocked = true;
      });
      return !blocked;
    }
    case ConstraintKind::transversal: {
      if (active.count() > enumeration_cap) {
        std::ostringstream os;
        os << "active set has " << active.count()
           << " elements, above the exhaustive cap " << enumeration_cap
           << "; too large, use Monte Carlo over orderings";
        throw Error(ErrorCode::too_large, os.str());
      }
      // Sets saturable in the sampled subgraph form the independent sets of
      // a transversal matroid, so e joins every feasible subset of the
      // active set exactly when adding e raises the active set's rank.
      const auto& t = std::get<TransversalConstraint>(constraint);
      ElementSet with_e = active, without_e = active;
      with_e.set(e);
      without_e.reset(e);
      return sampled_rank(t, family, with_e) ==
             sampled_rank(t, family, without_e) + 1;
    }
  }
  return false;
}

std::optional<bool> can_always_add_enumerated(
    const Constraint& constraint, const FamilyRealization& family,
    const ElementSet& active, int e, int cap) {
  int n = ground_size(constraint);
  if (e < 0 || e >= n)
    throw Error(ErrorCode::invalid_argument, "element index out of range");
  std::vector<int> members;
  active.for_each([&](int j) {
    if (j != e) members.push_back(j);
  });
  if (static_cast<int>(members.size()) > cap) return std::nullopt;

  // Subsets containing e are vacuous (I + e = I), so enumerate active \ {e}.
  std::uint64_t limit = std::uint64_t{1} << members.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    ElementSet subset(n);
    for (std::size_t i = 0; i < members.size(); ++i)
      if ((mask >> i) & 1) subset.set(members[i]);
    if (!family_contains(constraint, family, subset)) continue;
    subset.set(e);
    if (!family_contains(constraint, family, subset)) return false;
  }
  return true;
}

std::string realization_to_json(const FamilyRealization& family) {
  nlohmann::ordered_json j;
  if (family.kind == ConstraintKind::transversal) {
    std::vector<std::vector<int>> rows;
    rows.reserve(family.per_right.size());
    for (const auto& s : family.per_right) rows.push_back(s.to_indices());
    j["per_right"] = rows;
  } else {
    j["kept"] = family.kept.to_indices();
  }
  return j.dump();
}

FamilyRealization realization_from_json(const std::string& text,
                                        const Constraint& constraint) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  int n = ground_size(constraint);
  FamilyRealization fam;
  fam.kind = constraint_kind(constraint);
  if (fam.kind == ConstraintKind::transversal) {
    const auto& t = std::get<TransversalConstraint>(constraint);
    if (!j.contains("per_right") || !j["per_right"].is_array() ||
        static_cast<int>(j["per_right"].size()) != t.right_count)
      throw Error(ErrorCode::parse,
                  "field \"per_right\" missing or of wrong length");
    fam.per_right.assign(t.right_count, ElementSet(n));
    for (int v = 0; v < t.right_count; ++v)
      for (const auto& u : j["per_right"][v]) {
        int idx = u.get<int>();
        if (idx < 0 || idx >= n)
          throw Error(ErrorCode::parse, "per_right entry out of range");
        fam.per_right[v].set(idx);
      }
  } else {
    if (!j.contains("kept") || !j["kept"].is_array())
      throw Error(ErrorCode::parse, "field \"kept\" missing or not an array");
    fam.kept = ElementSet(n);
    for (const auto& u : j["kept"]) {
      int idx = u.get<int>();
      if (idx < 0 || idx >= n)
        throw Error(ErrorCode::parse, "kept entry out of range");
      fam.kept.set(idx);
    }
  }
  return fam;
}

}  // namespace ocrs
