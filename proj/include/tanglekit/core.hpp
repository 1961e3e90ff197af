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

#ifndef TANGLEKIT_CORE_HPP_
#define TANGLEKIT_CORE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tanglekit/oriented_set.hpp"
#include "tanglekit/separation_system.hpp"

namespace tanglekit {

inline constexpr std::size_t kDefaultEnumerationBound = 20;

struct Classification {
  OrientedSet small;
  OrientedSet large;
  OrientedSet trivial;
  OrientedSet co_trivial;
  OrientedSet degenerate;
  bool regular = true;  // no small elements
};

// Flags are computed inside the (sub)system: triviality witnesses must be
// members of `system`.
Classification classify(const SeparationSystem& system);

struct PairWitness {
  Oriented first = kNoOriented;
  Oriented second = kNoOriented;
};

// Throws Error(kPrecondition) when sigma has handles outside the system.
bool is_star(const SeparationSystem& system, const OrientedSet& sigma,
             PairWitness* witness = nullptr);
bool is_nested(const SeparationSystem& system, Oriented r, Oriented s);
// Reports every crossing pair (as oriented representatives) when asked.
bool is_nested_set(const SeparationSystem& system, const OrientedSet& sigma,
                   std::vector<std::pair<Oriented, Oriented>>* crossing = nullptr);
bool is_consistent(const SeparationSystem& system, const OrientedSet& sigma,
                   PairWitness* witness = nullptr);

// The closure of a consistent set; throws Error(kPrecondition) otherwise.
OrientedSet closure(const SeparationSystem& system, const OrientedSet& sigma);
// Same formula without the consistency guard, for callers that have already
// established consistency.
OrientedSet closure_unchecked(const SeparationSystem& system,
                              const OrientedSet& sigma);

// Orientation of separation s chosen by sigma, if any.
std::optional<Oriented> orientation_in(const SeparationSystem& system,
                                       const OrientedSet& sigma, SepId s);
bool orients(const SeparationSystem& system, const OrientedSet& sigma, SepId s);
// Exactly one orientation of every separation of the system.
bool is_orientation(const SeparationSystem& system, const OrientedSet& sigma);
// Both partial orientations are defined on s and disagree there.
bool distinguishes(const SeparationSystem& system, SepId s,
                   const OrientedSet& tau, const OrientedSet& other);

// Called for every extension step; returning false prunes the branch.
using PruneFn = std::function<bool(const OrientedSet& partial, Oriented added)>;
// Returning false stops the enumeration.
using VisitFn = std::function<bool(const OrientedSet& orientation)>;

// Backtracking over separations in increasing id, lower handle first. Throws
// Error(kBound) when the system has more than `bound` separations.
void for_each_consistent_orientation(const SeparationSystem& system,
                                     const VisitFn& visit,
                                     const PruneFn& prune = {},
                                     std::size_t bound = kDefaultEnumerationBound);
std::vector<OrientedSet> consistent_orientations(
    const SeparationSystem& system,
    std::size_t bound = kDefaultEnumerationBound);

// All 2^m orientations, consistent or not, in the same order convention.
void for_each_orientation(const SeparationSystem& system, const VisitFn& visit,
                          std::size_t bound = kDefaultEnumerationBound);

// Drops every separation that has a trivial orientation.
SeparationSystem remove_trivial(const SeparationSystem& system);

void check_bound(const SeparationSystem& system, std::size_t bound);

}  // namespace tanglekit

#endif  // TANGLEKIT_CORE_HPP_
