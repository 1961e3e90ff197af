// Copyright 2026 The tanglekit Authors
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

#include "tanglekit/forbidden.hpp"

#include <algorithm>

#include "tanglekit/error.hpp"

namespace tanglekit {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kExplicit: return "explicit";
    case Provenance::kRobustness: return "generated:R";
    case Provenance::kProfile: return "generated:profile";
    case Provenance::kStandardize: return "generated:standardize";
    case Provenance::kGraphStars: return "generated:graph-tangle-stars";
  }
  return "unknown";
}

bool ForbiddenFamily::add(const OrientedSet& member, Provenance provenance) {
  if (index_.count(member)) return false;
  index_.emplace(member, members_.size());
  for (Oriented a : member) by_handle_[a].push_back(members_.size());
  if (member.empty()) has_empty_ = true;
  members_.push_back(member);
  provenance_.push_back(provenance);
  return true;
}

void ForbiddenFamily::merge(const ForbiddenFamily& other) {
  for (std::size_t i = 0; i < other.size(); ++i)
    add(other.members_[i], other.provenance_[i]);
}

std::optional<std::size_t> ForbiddenFamily::first_subset_of(
    const OrientedSet& tau) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].subset_of(tau)) return i;
  return std::nullopt;
}

std::vector<std::size_t> ForbiddenFamily::subsets_of(
    const OrientedSet& tau) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].subset_of(tau)) out.push_back(i);
  return out;
}

bool ForbiddenFamily::has_subset_containing(const OrientedSet& tau,
                                            Oriented added) const {
  if (has_empty_) return true;
  auto it = by_handle_.find(added);
  if (it == by_handle_.end()) return false;
  for (std::size_t i : it->second)
    if (members_[i].subset_of(tau)) return true;
  return false;
}

ForbiddenFamily ForbiddenFamily::restricted_to(
    const SeparationSystem& system) const {
  ForbiddenFamily out;
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i].subset_of(system.members()))
      out.add(members_[i], provenance_[i]);
  return out;
}

bool avoids(const OrientedSet& tau, const ForbiddenFamily& family) {
  return !family.first_subset_of(tau).has_value();
}

std::vector<OrientedSet> enumerate_tangles(const SeparationSystem& system,
                                           const ForbiddenFamily& family,
                                           std::size_t bound) {
  std::vector<OrientedSet> out;
  if (family.contains(OrientedSet{})) {
    check_bound(system, bound);
    return out;
  }
  for_each_consistent_orientation(
      system,
      [&](const OrientedSet& tau) {
        out.push_back(tau);
        return true;
      },
      [&](const OrientedSet& partial, Oriented added) {
        return !family.has_subset_containing(partial, added);
      },
      bound);
  return out;
}

TanglesIn enumerate_tangles_in(const SeparationSystem& system,
                               const ForbiddenFamily& family,
                               const OrderFunction& order, std::size_t bound) {
  TanglesIn out;
  out.levels = levels(system, order);
  std::vector<std::vector<OrientedSet>> per_level;
  for (const Level& level : out.levels)
    per_level.push_back(enumerate_tangles(level.system, family, bound));
  for (std::size_t i = 0; i < per_level.size(); ++i) {
    for (const OrientedSet& tau : per_level[i]) {
      bool maximal = true;
      if (i + 1 < per_level.size()) {
        const OrientedSet& here = out.levels[i].system.members();
        for (const OrientedSet& bigger : per_level[i + 1]) {
          if ((bigger & here) == tau) {
            maximal = false;
            break;
          }
        }
      }
      Tangle t{tau, out.levels[i].k, i, maximal};
      out.tangles.push_back(t);
      if (maximal) out.maximal.push_back(t);
    }
  }
  return out;
}

bool is_standard(const ForbiddenFamily& family, const SeparationSystem& system,
                 OrientedSet* missing) {
  Classification c = classify(system);
  bool ok = true;
  for (Oriented s : c.trivial) {
    if (!family.contains(OrientedSet{system.inv(s)})) {
      ok = false;
      if (missing) missing->insert(s);
    }
  }
  return ok;
}

ForbiddenFamily standardize(const ForbiddenFamily& family,
                            const SeparationSystem& system) {
  ForbiddenFamily out = family;
  Classification c = classify(system);
  for (Oriented s : c.trivial)
    out.add(OrientedSet{system.inv(s)}, Provenance::kStandardize);
  return out;
}

EclipseFlags eclipse_flags(const SeparationSystem& system,
                           const OrderFunction& order, Oriented r, Oriented s) {
  EclipseFlags f;
  if (!system.lt(r, s)) return f;
  f.eclipses = order.of(r) < order.of(s);
  f.weakly_eclipses = order.of(r) <= order.of(s);
  return f;
}

namespace {

bool efficient_impl(const SeparationSystem& system, const OrderFunction& order,
                    const OrientedSet& sigma, const OrientedSet& tau,
                    bool strong, PairWitness* witness) {
  for (Oriented s : sigma) {
    OrientedSet below = system.down(s) & tau;
    below.erase(s);
    for (Oriented r : below) {
      bool hit = strong ? order.of(r) <= order.of(s) : order.of(r) < order.of(s);
      if (hit) {
        if (witness) *witness = {r, s};
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_efficient(const SeparationSystem& system, const OrderFunction& order,
                  const OrientedSet& sigma, const OrientedSet& tau,
                  PairWitness* witness) {
  return efficient_impl(system, order, sigma, tau, false, witness);
}

bool is_strongly_efficient(const SeparationSystem& system,
                           const OrderFunction& order, const OrientedSet& sigma,
                           const OrientedSet& tau, PairWitness* witness) {
  return efficient_impl(system, order, sigma, tau, true, witness);
}

bool is_rich(const ForbiddenFamily& family, const SeparationSystem& system,
             const OrderFunction& order, OrientedSet* counterexample,
             std::size_t bound) {
  bool rich = true;
  for_each_consistent_orientation(
      system,
      [&](const OrientedSet& tau) {
        bool any = false, good = false;
        for (std::size_t i : family.subsets_of(tau)) {
          any = true;
          if (is_strongly_efficient(system, order, family.members()[i], tau)) {
            good = true;
            break;
          }
        }
        if (any && !good) {
          rich = false;
          if (counterexample) *counterexample = tau;
          return false;
        }
        return true;
      },
      {}, bound);
  return rich;
}

ForbiddenFamily robustness_family(const Universe& universe,
                                  const OrderFunction& order,
                                  const SeparationSystem& system,
                                  bool keep_degenerate) {
  ForbiddenFamily out;
  const SeparationSystem& u = universe.system();
  for (Oriented r : system.members()) {
    if (!keep_degenerate && u.degenerate(r)) continue;
    Oriented ri = u.inv(r);
    for (SepId s : u.separations()) {
      Oriented so = u.orientations(s)[0];
      Oriented a = universe.join(ri, so), b = universe.join(ri, u.inv(so));
      if (!(order.of(a) < order.of(r) && order.of(b) < order.of(r))) continue;
      OrientedSet triple{r, a, b};
      if (!triple.subset_of(system.members())) continue;
      if (!keep_degenerate && (u.degenerate(a) || u.degenerate(b))) continue;
      out.add(triple, Provenance::kRobustness);
    }
  }
  return out;
}

ForbiddenFamily profile_family(const Universe& universe,
                               const SeparationSystem& system) {
  ForbiddenFamily out;
  const SeparationSystem& u = universe.system();
  for (Oriented r : system.members()) {
    for (Oriented s : system.members()) {
      if (s <= r) continue;
      Oriented third = universe.join(u.inv(r), u.inv(s));
      if (!system.contains(third)) continue;
      if (u.degenerate(r) || u.degenerate(s) || u.degenerate(third)) continue;
      out.add(OrientedSet{r, s, third}, Provenance::kProfile);
    }
  }
  return out;
}

EfficientSubfamily f_eff(const ForbiddenFamily& family,
                         const SeparationSystem& system,
                         const OrderFunction& order) {
  EfficientSubfamily out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const OrientedSet& sigma = family.members()[i];
    if (!is_consistent(system, sigma)) {
      out.inconsistent.push_back(i);
      continue;
    }
    if (is_efficient(system, order, sigma, closure_unchecked(system, sigma)))
      out.family.add(sigma, family.provenance()[i]);
    else
      out.removed.push_back(i);
  }
  return out;
}

bool closed_under_eclipsing(const ForbiddenFamily& family,
                            const SeparationSystem& system,
                            const OrderFunction& order, EclipseWitness* witness,
                            std::size_t bound) {
  bool closed = true;
  for_each_consistent_orientation(
      system,
      [&](const OrientedSet& tau) {
        for (std::size_t i : family.subsets_of(tau)) {
          const OrientedSet& sigma = family.members()[i];
          for (Oriented s : sigma) {
            OrientedSet below = system.down(s) & tau;
            below.erase(s);
            for (Oriented r : below) {
              if (!(order.of(r) <= order.of(s))) continue;
              OrientedSet replaced = sigma;
              replaced.erase(s);
              replaced.insert(r);
              if (!family.contains(replaced)) {
                closed = false;
                if (witness) *witness = {tau, sigma, s, r};
                return false;
              }
            }
          }
        }
        return true;
      },
      {}, bound);
  return closed;
}

bool set_geq(const SeparationSystem& system, const OrientedSet& sigma,
             const OrientedSet& other) {
  for (Oriented x : sigma)
    if (!system.down(x).intersects(other)) return false;
  return true;
}

std::vector<std::size_t> minimal_members_in(const ForbiddenFamily& family,
                                            const SeparationSystem& system,
                                            const OrientedSet& tau) {
  std::vector<std::size_t> inside = family.subsets_of(tau), out;
  for (std::size_t i : inside) {
    const OrientedSet& sigma = family.members()[i];
    bool minimal = true;
    for (std::size_t j : inside) {
      if (j == i) continue;
      const OrientedSet& other = family.members()[j];
      // other < sigma in the lifted preorder
      if (set_geq(system, sigma, other) && !set_geq(system, other, sigma)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

ForbiddenFamily graph_tangle_stars(const GraphUniverse& graph, const Graph& g,
                                   const SeparationSystem& system) {
  ForbiddenFamily out;
  const std::uint32_t all = (1u << g.vertices.size()) - 1;
  auto covers = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if ((a | b | c) != all) return false;
    for (auto [x, y] : g.edges) {
      std::uint32_t e = (1u << x) | (1u << y);
      if ((a & e) != e && (b & e) != e && (c & e) != e) return false;
    }
    return true;
  };
  std::vector<Oriented> m;
  for (Oriented a : system.members())
    if (!system.degenerate(a)) m.push_back(a);
  auto small = [&](Oriented a) { return graph.sides[a].first; };
  auto star_pair = [&](Oriented a, Oriented b) {
    return system.leq(system.inv(b), a) && system.leq(system.inv(a), b);
  };
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (covers(small(m[i]), 0, 0)) out.add(OrientedSet{m[i]}, Provenance::kGraphStars);
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!star_pair(m[i], m[j])) continue;
      if (covers(small(m[i]), small(m[j]), 0))
        out.add(OrientedSet{m[i], m[j]}, Provenance::kGraphStars);
      for (std::size_t k = j + 1; k < m.size(); ++k) {
        if (!star_pair(m[i], m[k]) || !star_pair(m[j], m[k])) continue;
        if (covers(small(m[i]), small(m[j]), small(m[k])))
          out.add(OrientedSet{m[i], m[j], m[k]}, Provenance::kGraphStars);
      }
    }
  }
  return out;
}

bool all_stars(const ForbiddenFamily& family, const SeparationSystem& system,
               std::size_t* bad) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_star(system, family.members()[i])) {
      if (bad) *bad = i;
      return false;
    }
  }
  return true;
}

}  // namespace tanglekit
