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


// Brute-force oracles written directly from the definitions, independent
// of the library algorithms, and the fixture suite shared by the tests.

#ifndef TANGLEKIT_TESTS_SUPPORT_HPP_
#define TANGLEKIT_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tanglekit/forbidden.hpp"
#include "tanglekit/order_function.hpp"
#include "tanglekit/oriented_set.hpp"
#include "tanglekit/separation_system.hpp"
#include "tanglekit/universe.hpp"

namespace tktest {

using namespace tanglekit;

// ---- oracles ----

bool naive_consistent(const SeparationSystem& s, const OrientedSet& sigma);
bool naive_star(const SeparationSystem& s, const OrientedSet& sigma);
bool naive_nested(const SeparationSystem& s, Oriented r, Oriented t);
bool naive_avoids(const OrientedSet& tau, const std::vector<OrientedSet>& f);
OrientedSet naive_closure(const SeparationSystem& s, const OrientedSet& sigma);
// All 2^m choices of one orientation per separation.
std::vector<OrientedSet> naive_orientations(const SeparationSystem& s);
std::vector<OrientedSet> naive_tangles(const SeparationSystem& s,
                                       const ForbiddenFamily& f);
bool naive_rich(const ForbiddenFamily& f, const SeparationSystem& s,
                const OrderFunction& o);
bool naive_submodular(const Universe& u, const OrderFunction& o);
bool naive_structurally_submodular(const Universe& u, const OrderFunction& o);
bool naive_injective(const SeparationSystem& s, const OrderFunction& o);
// Separations of minimum order on which two (partial) orientations take
// different defined values, over all pairs.
std::vector<SepId> naive_optimal_distinguishers(
    const SeparationSystem& s, const OrderFunction& o,
    const std::vector<OrientedSet>& tangles);
std::vector<OrientedSet> sorted_sets(std::vector<OrientedSet> v);

// ---- fixtures ----

// The handle carrying `label`; throws std::out_of_range if absent.
Oriented by_label(const SeparationSystem& s, const std::string& label);

struct GraphFixture {
  Graph graph;
  GraphUniverse gu;
  OrderFunction refined;  // injective submodular refinement of |A n B|
};
GraphFixture graph_fixture(const std::string& edges);

// Four elements r, r*, s, s* with r, r* < s: s is trivial, s* co-trivial.
SeparationSystem p_triv();
// Two separations with r < s.
SeparationSystem chain();

// A sub-universe of the bipartitions of {1,2,3,4} with a cut order.
struct RandomFixture {
  std::uint64_t seed = 0;
  Universe universe;
  std::vector<std::uint32_t> masks;  // first side of each element
  OrderFunction base;                // cut function, submodular
  OrderFunction order;               // injective refinement
  Rational k;                        // a threshold between order values
};
RandomFixture random_fixture(std::uint64_t seed);
inline constexpr int kRandomFixtures = 120;

// Sets of at most `max_size` elements of S whose second sides cover the
// ground set; only stars if `stars_only`.
ForbiddenFamily cover_family(const SeparationSystem& s,
                             const std::vector<std::uint32_t>& masks,
                             std::size_t ground, std::size_t max_size,
                             bool stars_only);

OrderFunction cut_order(const SeparationSystem& s,
                        const std::vector<std::uint32_t>& masks,
                        const std::vector<std::vector<int>>& weights);

Universe bipartitions_with(std::size_t n);

// One separation system with an injective order and two standard families:
// `stars` consists of stars only, `robust` adds the robustness triples of
// the universe (equal to `stars` without a universe).
struct Case {
  std::string name;
  std::optional<Universe> universe;  // `system` is an initial segment of it
  OrderFunction base;                // submodular base order, with a universe
  SeparationSystem system;
  OrderFunction order;
  ForbiddenFamily stars;
  ForbiddenFamily robust;
  // Further standard star families: all stars of at most three elements,
  // and seeded random subfamilies of them.
  std::vector<ForbiddenFamily> extra;
};

// Stars of S with at most three elements, in lexicographic order.
std::vector<OrientedSet> small_stars(const SeparationSystem& s);

// P3/P4 graph levels, bipartition universes of size <= 4, hand-built
// systems and kRandomFixtures seeded sub-universes; at most `max_seps`
// separations each.
std::vector<Case> fixture_suite(std::size_t max_seps = 12);
// The universes behind the suite with their base orders, for checks over
// whole universes.
struct UniverseCase {
  std::string name;
  Universe universe;
  OrderFunction base;
  OrderFunction order;
  ForbiddenFamily stars;  // over the whole universe, standard
};
std::vector<UniverseCase> universe_suite(std::size_t max_seps = 12);

}  // namespace tktest

#endif  // TANGLEKIT_TESTS_SUPPORT_HPP_
