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

#include "tanglekit/core.hpp"

#include <string>

#include "tanglekit/error.hpp"

namespace tanglekit {

Classification classify(const SeparationSystem& system) {
  Classification c;
  const OrientedSet& m = system.members();
  for (Oriented a : m) {
    Oriented ai = system.inv(a);
    if (ai == a) c.degenerate.insert(a);
    if (system.leq(a, ai)) {
      c.small.insert(a);
      c.large.insert(ai);
    }
    // a is trivial if some r and r* (r of another separation) lie below it.
    OrientedSet below = system.down(a) & m;
    below.erase(a);
    below.erase(ai);
    for (Oriented r : below) {
      if (below.contains(system.inv(r))) {
        c.trivial.insert(a);
        c.co_trivial.insert(ai);
        break;
      }
    }
  }
  c.regular = c.small.empty();
  return c;
}

bool is_star(const SeparationSystem& system, const OrientedSet& sigma,
             PairWitness* witness) {
  system.require_members(sigma, "star candidate");
  for (Oriented r : sigma) {
    if (system.degenerate(r)) {
      if (witness) *witness = {r, r};
      return false;
    }
    for (Oriented s : sigma) {
      if (s != r && !system.leq(system.inv(s), r)) {
        if (witness) *witness = {r, s};
        return false;
      }
    }
  }
  return true;
}

bool is_nested(const SeparationSystem& system, Oriented r, Oriented s) {
  Oriented ri = system.inv(r), si = system.inv(s);
  return system.leq(r, s) || system.leq(r, si) || system.leq(ri, s) ||
         system.leq(ri, si);
}

bool is_nested_set(const SeparationSystem& system, const OrientedSet& sigma,
                   std::vector<std::pair<Oriented, Oriented>>* crossing) {
  bool nested = true;
  std::vector<Oriented> reps;
  OrientedSet seen;
  for (Oriented a : sigma) {
    if (seen.contains(a)) continue;
    seen.insert(a);
    seen.insert(system.inv(a));
    reps.push_back(a);
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (!is_nested(system, reps[i], reps[j])) {
        nested = false;
        if (!crossing) return false;
        crossing->emplace_back(reps[i], reps[j]);
      }
    }
  }
  return nested;
}

bool is_consistent(const SeparationSystem& system, const OrientedSet& sigma,
                   PairWitness* witness) {
  system.require_members(sigma, "set");
  for (Oriented x : sigma) {
    // x and y point away from each other iff x <= y*.
    OrientedSet away = system.down(system.inv(x)) & sigma;
    away -= system.both(system.sep(x));
    if (!away.empty()) {
      if (witness) *witness = {x, away.front()};
      return false;
    }
  }
  return true;
}

OrientedSet closure_unchecked(const SeparationSystem& system,
                              const OrientedSet& sigma) {
  OrientedSet out = sigma;
  for (Oriented r : sigma) {
    OrientedSet above = system.up(r) & system.members();
    above -= system.both(system.sep(r));
    out |= above;
  }
  return out;
}

OrientedSet closure(const SeparationSystem& system, const OrientedSet& sigma) {
  PairWitness w;
  if (!is_consistent(system, sigma, &w))
    throw Error(ErrorKind::kPrecondition,
                "closure of an inconsistent set is undefined",
                {OrientedSet{w.first, w.second}});
  return closure_unchecked(system, sigma);
}

std::optional<Oriented> orientation_in(const SeparationSystem& system,
                                       const OrientedSet& sigma, SepId s) {
  const auto& o = system.orientations(s);
  if (sigma.contains(o[0])) return o[0];
  if (sigma.contains(o[1])) return o[1];
  return std::nullopt;
}

bool orients(const SeparationSystem& system, const OrientedSet& sigma,
             SepId s) {
  return orientation_in(system, sigma, s).has_value();
}

bool is_orientation(const SeparationSystem& system, const OrientedSet& sigma) {
  if (!sigma.subset_of(system.members())) return false;
  for (SepId s : system.separations()) {
    const auto& o = system.orientations(s);
    int count = sigma.contains(o[0]) + (o[1] != o[0] && sigma.contains(o[1]));
    if (count != 1) return false;
  }
  return true;
}

bool distinguishes(const SeparationSystem& system, SepId s,
                   const OrientedSet& tau, const OrientedSet& other) {
  auto a = orientation_in(system, tau, s);
  auto b = orientation_in(system, other, s);
  return a && b && *a != *b;
}

void check_bound(const SeparationSystem& system, std::size_t bound) {
  std::size_t m = system.num_separations();
  if (m > bound)
    throw Error(ErrorKind::kBound,
                std::to_string(m) + " separations exceed the bound of " +
                    std::to_string(bound));
}

void for_each_consistent_orientation(const SeparationSystem& system,
                                     const VisitFn& visit,
                                     const PruneFn& prune, std::size_t bound) {
  check_bound(system, bound);
  const std::vector<SepId> seps = system.separations();
  const std::size_t m = seps.size();
  struct Frame {
    OrientedSet chosen;
    OrientedSet bad;  // handles inconsistent with `chosen`
    int next = 0;     // which orientation of seps[depth] to try next
  };
  std::vector<Frame> stack(m + 1);
  std::size_t depth = 0;
  while (true) {
    if (depth == m) {
      if (!visit(stack[m].chosen)) return;
      if (depth == 0) return;
      --depth;
      continue;
    }
    Frame& f = stack[depth];
    const auto& o = system.orientations(seps[depth]);
    int options = o[0] == o[1] ? 1 : 2;
    if (f.next >= options) {
      f.next = 0;
      if (depth == 0) return;
      --depth;
      continue;
    }
    Oriented x = o[f.next++];
    if (f.bad.contains(x)) continue;
    Frame& g = stack[depth + 1];
    g.chosen = f.chosen;
    g.chosen.insert(x);
    if (prune && !prune(g.chosen, x)) continue;
    g.bad = f.bad | system.down(system.inv(x));
    g.bad -= system.both(seps[depth]);
    g.next = 0;
    ++depth;
  }
}

std::vector<OrientedSet> consistent_orientations(const SeparationSystem& system,
                                                 std::size_t bound) {
  std::vector<OrientedSet> out;
  for_each_consistent_orientation(
      system,
      [&](const OrientedSet& tau) {
        out.push_back(tau);
        return true;
      },
      {}, bound);
  return out;
}

void for_each_orientation(const SeparationSystem& system, const VisitFn& visit,
                          std::size_t bound) {
  check_bound(system, bound);
  const std::vector<SepId> seps = system.separations();
  const std::size_t m = seps.size();
  std::vector<int> choice(m, 0);
  while (true) {
    OrientedSet tau;
    for (std::size_t i = 0; i < m; ++i)
      tau.insert(system.orientations(seps[i])[choice[i]]);
    if (!visit(tau)) return;
    // Odometer with the first separation as the most significant digit.
    std::size_t i = m;
    while (i > 0) {
      --i;
      const auto& o = system.orientations(seps[i]);
      if (choice[i] == 0 && o[0] != o[1]) {
        choice[i] = 1;
        break;
      }
      choice[i] = 0;
      if (i == 0) return;
    }
    if (m == 0) return;
  }
}

SeparationSystem remove_trivial(const SeparationSystem& system) {
  Classification c = classify(system);
  OrientedSet keep = system.members() - system.separations_of(c.trivial);
  return system.restrict(keep);
}

}  // namespace tanglekit
