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

#include <map>
#include <string>
#include <utility>

#include "tanglekit/duality.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/orderfn.hpp"

namespace tanglekit {

Oriented shift_map(const Universe& universe, Oriented r, Oriented s,
                   Oriented x) {
  const SeparationSystem& u = universe.system();
  if (!u.leq(r, s))
    throw Error(ErrorKind::kPrecondition,
                "shift: " + u.label(r) + " is not below " + u.label(s));
  if (x != u.inv(s) && u.leq(x, s)) return universe.meet(x, r);
  Oriented xi = u.inv(x);
  if (xi != u.inv(s) && u.leq(xi, s)) return u.inv(universe.meet(xi, r));
  throw Error(ErrorKind::kPrecondition,
              "shift: neither orientation of " + u.label(x) + " lies below " +
                  u.label(s));
}

OrientedSet shift_set(const Universe& universe, Oriented r, Oriented s,
                      const OrientedSet& sigma) {
  OrientedSet out;
  for (Oriented x : sigma) out.insert(shift_map(universe, r, s, x));
  return out;
}

bool emulates(const Universe& universe, const SeparationSystem& system,
              Oriented r, Oriented s, Oriented* witness) {
  if (!system.contains(r) || !system.contains(s) || !system.leq(r, s))
    throw Error(ErrorKind::kPrecondition,
                "emulates: need r <= s inside the system");
  for (Oriented t : system.members()) {
    if (t == system.inv(s) || !system.leq(t, s)) continue;
    if (!system.contains(universe.meet(t, r))) {
      if (witness) *witness = t;
      return false;
    }
  }
  return true;
}

namespace {

Rational total_order(const OrderFunction& order, const OrientedSet& sigma) {
  Rational sum = 0;
  for (Oriented x : sigma) sum += order.of(x);
  return sum;
}

}  // namespace

ShiftSelection lemma_shift_select(const Universe& universe,
                                  const OrderFunction& order,
                                  const SeparationSystem& system,
                                  const OrientedSet& tau,
                                  const OrientedSet& sigma, Oriented s) {
  auto unmet = [](const std::string& why) {
    return Error(ErrorKind::kPrecondition, "shift selection: " + why);
  };
  if (!is_initial_segment(universe.system(), system, order))
    throw unmet("system is not an initial segment of the universe");
  SubmodularityWitness sw;
  if (!is_structurally_submodular(universe, order, &sw))
    throw Error(ErrorKind::kPrecondition,
                "shift selection: order is not structurally submodular",
                {OrientedSet{sw.r, sw.s}});
  if (!is_orientation(system, tau) || !is_consistent(system, tau))
    throw unmet("tau is not a consistent orientation");
  if (!is_star(system, sigma) || !sigma.subset_of(tau) || !sigma.contains(s))
    throw unmet("sigma is not a star in tau containing s");
  if (classify(system).trivial.contains(s)) throw unmet("s is trivial");

  ShiftSelection out;
  for (Oriented r : tau)
    if (system.lt(r, s) && order.of(r) < order.of(s)) out.candidates.push_back(r);
  if (out.candidates.empty()) throw unmet("no element of tau eclipses s");
  Rational least = order.of(out.candidates.front());
  for (Oriented r : out.candidates) least = std::min(least, order.of(r));
  std::vector<Oriented> lowest, maxima;
  for (Oriented r : out.candidates)
    if (order.of(r) == least) lowest.push_back(r);
  for (Oriented r : lowest) {
    bool maximal = true;
    for (Oriented q : lowest) maximal = maximal && !system.lt(r, q);
    if (maximal) maxima.push_back(r);
  }
  if (maxima.size() > 1)
    throw Error(ErrorKind::kAmbiguity,
                "shift selection: several maximal choices",
                {OrientedSet::from_range(maxima)});
  out.r = maxima.front();
  out.shifted = shift_set(universe, out.r, s, sigma);

  if (!emulates(universe, system, out.r, s) || !is_star(system, out.shifted) ||
      !out.shifted.subset_of(tau) ||
      !(total_order(order, out.shifted) < total_order(order, sigma)))
    throw Error(ErrorKind::kTheoremViolation,
                "shifted star " + out.shifted.to_string() +
                    " fails the shifting lemma",
                {sigma, out.shifted});
  return out;
}

bool closed_under_shifting(const ForbiddenFamily& family,
                           const Universe& universe,
                           const SeparationSystem& system,
                           const OrderFunction& order, EclipseWitness* witness,
                           std::size_t bound) {
  std::size_t bad = 0;
  if (!all_stars(family, system, &bad))
    throw Error(ErrorKind::kNonStarFamily,
                "family member " + family.members()[bad].to_string() +
                    " is not a star",
                {family.members()[bad]});
  const OrientedSet trivial = classify(system).trivial;
  std::map<std::pair<Oriented, Oriented>, bool> emulation;
  auto emulating = [&](Oriented r, Oriented s) {
    auto key = std::make_pair(r, s);
    auto it = emulation.find(key);
    if (it != emulation.end()) return it->second;
    return emulation[key] = emulates(universe, system, r, s);
  };
  bool closed = true;
  for_each_consistent_orientation(
      system,
      [&](const OrientedSet& tau) {
        for (std::size_t i : family.subsets_of(tau)) {
          const OrientedSet& sigma = family.members()[i];
          for (Oriented s : sigma) {
            if (trivial.contains(s)) continue;
            for (Oriented r : tau) {
              if (!system.lt(r, s) || order.of(r) > order.of(s)) continue;
              if (!emulating(r, s)) continue;
              if (family.contains(shift_set(universe, r, s, sigma))) continue;
              closed = false;
              if (witness) *witness = {tau, sigma, s, r};
              return false;
            }
          }
        }
        return true;
      },
      {}, bound);
  return closed;
}

NewDualityResult newduality(const Universe& universe, const OrderFunction& order,
                            const Threshold& ell, const ForbiddenFamily& family,
                            const NewDualityOptions& options) {
  const SeparationSystem& u = universe.system();
  NewDualityResult out;
  out.system = restrict_Sk(u, order, ell);
  if (order.injective_on(u) && is_structurally_submodular(universe, order)) {
    out.order = order;
  } else if (is_submodular(universe, order)) {
    out.order = enumeration_refinement(universe, order);
    out.refined = true;
  } else {
    throw Error(ErrorKind::kPrecondition,
                "order is neither submodular nor injective and structurally "
                "submodular");
  }
  if (!is_initial_segment(u, out.system, out.order))
    throw Error(ErrorKind::kTheoremViolation,
                "refined order does not keep the system an initial segment");
  Classification c = classify(out.system);
  if (!c.trivial.empty() && options.trivial == TrivialPolicy::kReject)
    throw Error(ErrorKind::kTrivialElementsPresent,
                "system has trivial elements " + c.trivial.to_string(),
                {c.trivial});
  ForbiddenFamily f = family.restricted_to(out.system);
  EclipseWitness w;
  out.closed =
      closed_under_shifting(f, universe, out.system, out.order, &w, options.bound);
  if (!out.closed)
    throw Error(ErrorKind::kPrecondition,
                "family is not closed under shifting: shifting " +
                    w.sigma.to_string() + " along " + std::to_string(w.r) +
                    " <= " + std::to_string(w.s) + " in " + w.tau.to_string(),
                {w.tau, w.sigma});
  if (options.cross_check_rich) {
    OrientedSet counter;
    out.rich_brute_force =
        is_rich(f, out.system, out.order, &counter, options.bound);
    if (!*out.rich_brute_force)
      throw Error(ErrorKind::kTheoremViolation,
                  "family closed under shifting is not rich; orientation " +
                      counter.to_string(),
                  {counter});
  }
  DichotomyOptions d;
  d.check_exclusive = options.check_exclusive;
  d.trust_rich = true;
  d.universe = &universe;
  d.bound = options.bound;
  d.trivial = options.trivial;
  out.result = dichotomy(out.system, out.order, f, d);
  return out;
}

}  // namespace tanglekit
