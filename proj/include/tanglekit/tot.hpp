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


// Trees of tangles: optimal distinguishers and their extraction from
// tangle structure trees.

#ifndef TANGLEKIT_TOT_HPP_
#define TANGLEKIT_TOT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanglekit/forbidden.hpp"
#include "tanglekit/order_function.hpp"
#include "tanglekit/oriented_set.hpp"
#include "tanglekit/rational.hpp"
#include "tanglekit/separation_system.hpp"
#include "tanglekit/tst.hpp"
#include "tanglekit/universe.hpp"

namespace tanglekit {

struct DistinguisherPair {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<SepId> distinguishing;
  std::optional<Rational> least;  // minimum order among them
  std::vector<SepId> optimal;
};

struct DistinguisherReport {
  std::vector<DistinguisherPair> pairs;
  std::vector<SepId> separations;  // union of the optimal ones, increasing
};

// Brute force over all pairs of (partial) orientations.
DistinguisherReport optimal_distinguishers(
    const std::vector<OrientedSet>& tangles, const SeparationSystem& system,
    const OrderFunction& order);

struct TotReport {
  bool ok = true;
  bool nested = true;
  std::vector<std::pair<Oriented, Oriented>> crossing;
  bool distinguishes_all = true;
  std::pair<std::size_t, std::size_t> undistinguished{0, 0};
  bool equals_oracle = true;
  std::vector<SepId> missing;  // in the oracle set, not in N
  std::vector<SepId> extra;    // in N, not in the oracle set
  std::string failure;
};

// Nestedness, optimal distinguishing of every pair, and equality with the
// oracle set. Throws kNonInjectiveOrder unless the order is injective on S.
TotReport verify_tot(const std::vector<SepId>& n,
                     const std::vector<OrientedSet>& tangles,
                     const SeparationSystem& system, const OrderFunction& order);

// Some orientation x of s_v is co-trivial in S, or closure(beta_v) with x
// contains a member of `robust`.
bool is_critical(const SeparationSystem& system, const SeparationTree& tree,
                 NodeId v, const ForbiddenFamily& robust);
bool is_critical(const Universe& universe, const OrderFunction& order,
                 const SeparationSystem& system, const SeparationTree& tree,
                 NodeId v);

// Splits of the tangle nodes of any TST of S, increasing.
std::vector<SepId> tangle_node_splits(const SeparationSystem& system,
                                      const SeparationTree& tree,
                                      const ForbiddenFamily& family);

struct TotOptions {
  bool trust_rich = false;
  std::size_t bound = kDefaultEnumerationBound;
};

struct TreeOfTangles {
  SeparationTree tree;  // thorough TST
  TstReport report;
  std::vector<NodeId> nodes;  // tangle nodes
  std::vector<SepId> n;
  std::vector<OrientedSet> tangles;  // brute force
  DistinguisherReport oracle;
  TotReport verification;
  std::vector<NodeId> critical_tangle_nodes;
  bool infimum_check = true;  // optimal distinguishers sit at leaf infima
};

TreeOfTangles tree_of_tangles(const Universe& universe,
                              const OrderFunction& order,
                              const SeparationSystem& system,
                              const ForbiddenFamily& family,
                              const TotOptions& options = {});

struct LayeredTreeOfTangles {
  LayeredTst layered;
  std::vector<NodeId> nodes;  // V, as nodes of the pruned tree
  std::vector<SepId> n;
  std::vector<OrientedSet> maximal;  // brute-force maximal tangles
  DistinguisherReport oracle;
  TotReport verification;
  bool v_is_tangle_nodes = true;
  bool non_leaves_are_layer_tangle_leaves = true;
};

// The universe itself is the separation system.
LayeredTreeOfTangles tree_of_tangles_in(const Universe& universe,
                                        const OrderFunction& order,
                                        const ForbiddenFamily& family,
                                        const TotOptions& options = {});

}  // namespace tanglekit

#endif  // TANGLEKIT_TOT_HPP_
