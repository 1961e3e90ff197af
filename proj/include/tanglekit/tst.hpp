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


// Separation trees, tangle structure trees and their construction.

#ifndef TANGLEKIT_TST_HPP_
#define TANGLEKIT_TST_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/core.hpp"
#include "tanglekit/forbidden.hpp"
#include "tanglekit/order_function.hpp"
#include "tanglekit/oriented_set.hpp"
#include "tanglekit/separation_system.hpp"

namespace tanglekit {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

// A rooted tree whose edges carry oriented separations. The edge from
// parent(v) to v is identified with v and labelled label(v).
class SeparationTree {
 public:
  SeparationTree();  // a single root

  NodeId root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  NodeId parent(NodeId v) const { return at(v).parent; }
  Oriented label(NodeId v) const { return at(v).label; }
  const std::vector<NodeId>& children(NodeId v) const { return at(v).children; }
  bool is_leaf(NodeId v) const { return at(v).children.empty(); }

  NodeId add_child(NodeId v, Oriented label);

  // Labels on the path from the root to v.
  OrientedSet beta_path(NodeId v) const;
  // The separation oriented by the edges below a non-leaf v.
  std::optional<SepId> split(const SeparationSystem& system, NodeId v) const;

  // u <= v in the tree order.
  bool leq(NodeId u, NodeId v) const;
  NodeId infimum(NodeId u, NodeId v) const;
  std::size_t depth(NodeId v) const;

  std::vector<NodeId> preorder() const;
  std::vector<NodeId> leaves() const;  // increasing id
  std::vector<NodeId> leaves_below(NodeId w) const;
  std::vector<NodeId> non_leaves() const;

  // Copy with ids reassigned in preorder; children keep their order.
  SeparationTree renumbered() const;

  // Builds a tree from explicit parent links; ids are kept.
  static SeparationTree from_parents(NodeId root,
                                     const std::vector<NodeId>& parents,
                                     const std::vector<Oriented>& labels);

  friend bool operator==(const SeparationTree& a, const SeparationTree& b);

 private:
  struct Node {
    NodeId parent = kNoNode;
    Oriented label = kNoOriented;
    std::vector<NodeId> children;
  };
  const Node& at(NodeId v) const;

  NodeId root_ = 0;
  std::vector<Node> nodes_;
};

enum class LeafKind { kTangle, kForbidden, kUnresolved };
std::string_view to_string(LeafKind kind);

struct LeafClass {
  LeafKind kind = LeafKind::kUnresolved;
  // The tangle for tangle leaves, the first F-subset of beta for forbidden
  // leaves, the closure otherwise.
  OrientedSet witness;
};

using LeafClassifier = std::function<LeafClass(const OrientedSet& beta)>;

// Tangle leaves: the closure is an F-tangle of S.
LeafClassifier tangle_leaf_classifier(const SeparationSystem& system,
                                      const ForbiddenFamily& family);
// Tangle leaves: the closure, cut down to the largest level it orients, is a
// maximal F-tangle in S.
LeafClassifier maximal_tangle_leaf_classifier(const SeparationSystem& system,
                                              const ForbiddenFamily& family,
                                              const TanglesIn& tangles);

struct TstReport {
  bool ok = true;
  std::string failure;
  NodeId node = kNoNode;
  // Indexed by node; empty for non-leaves.
  std::vector<std::optional<LeafClass>> leaf_class;
};

// Labels in S, the bijection clause, distinct splits on paths, consistency.
TstReport validate_separation_tree(const SeparationSystem& system,
                                   const SeparationTree& tree);
TstReport validate_tst(const SeparationSystem& system,
                       const SeparationTree& tree,
                       const ForbiddenFamily& family);
TstReport validate_tst(const SeparationSystem& system,
                       const SeparationTree& tree,
                       const ForbiddenFamily& family,
                       const LeafClassifier& classifier);

std::vector<std::optional<LeafClass>> classify_leaves(
    const SeparationTree& tree, const LeafClassifier& classifier);

// All leaves forbidden.
bool is_ftree(const TstReport& report);

bool is_ordered(const SeparationSystem& system, const OrderFunction& order,
                const SeparationTree& tree, NodeId* witness = nullptr);
bool is_thoroughly_ordered(const SeparationSystem& system,
                           const OrderFunction& order,
                           const SeparationTree& tree,
                           NodeId* witness = nullptr);
bool is_efficient_tree(const SeparationSystem& system,
                       const OrderFunction& order, const SeparationTree& tree,
                       NodeId* witness = nullptr);

// The unique leaf whose path labels lie in the orientation tau.
NodeId display(const SeparationSystem& system, const SeparationTree& tree,
               const OrientedSet& tau);

// The closures of the tangle leaves, in leaf order.
std::vector<OrientedSet> displayed_tangles(
    const SeparationSystem& system, const SeparationTree& tree,
    const std::vector<std::optional<LeafClass>>& leaf_class);

// Non-leaves with a tangle leaf above every child.
std::vector<bool> tangle_nodes(
    const SeparationTree& tree,
    const std::vector<std::optional<LeafClass>>& leaf_class);

// Thoroughly ordered F-tangle structure tree. Children are added lower
// handle first and ids are assigned in preorder.
SeparationTree build_thorough_tst(const SeparationSystem& system,
                                  const OrderFunction& order,
                                  const ForbiddenFamily& family,
                                  std::size_t bound = kDefaultEnumerationBound);

struct Necessity {
  // Indexed by child node w: the leaves above w for which the edge into w is
  // necessary.
  std::vector<std::vector<NodeId>> edge_leaves;
  std::vector<bool> node_necessary;
};

Necessity necessity(const SeparationSystem& system, const SeparationTree& tree,
                    const ForbiddenFamily& family,
                    const std::vector<std::optional<LeafClass>>& leaf_class);
Necessity necessity(const SeparationSystem& system, const SeparationTree& tree,
                    const ForbiddenFamily& family);
bool is_irreducible(const Necessity& n);

struct ReductionStep {
  NodeId v = kNoNode;  // contracted node, ids of the tree before the step
  NodeId w = kNoNode;  // kept child
};

struct Reduction {
  SeparationTree tree;
  std::vector<ReductionStep> steps;
};

// Replaces v by its child w and drops the other children of v.
SeparationTree contract(const SeparationTree& tree, NodeId v, NodeId w);

// Contracts unnecessary nodes until the tree is irreducible. Every move is
// checked to keep a TST that is ordered, efficient and displays the same
// tangles.
Reduction reduce_irreducible(const SeparationSystem& system,
                             const OrderFunction& order,
                             const SeparationTree& tree,
                             const ForbiddenFamily& family);

// Path-label prefix: every root path of `small` is a root path of `big`.
bool is_prefix_tree(const SeparationTree& small, const SeparationTree& big);

struct LayeredTst {
  TanglesIn tangles;
  SeparationTree full;              // thorough TST of S
  SeparationTree tree;              // full minus sibling forbidden leaf pairs
  std::vector<NodeId> full_id;      // node of `tree` -> node of `full`
  TstReport full_report;            // classification of `full` over S
  TstReport report;                 // `tree` as a TST in S
  bool bare_root = false;
  std::vector<SeparationTree> layers;  // thorough TST of each level
  bool layers_nested = true;
};

LayeredTst build_tst_in_S(const SeparationSystem& system,
                          const OrderFunction& order,
                          const ForbiddenFamily& family,
                          std::size_t bound = kDefaultEnumerationBound,
                          bool trust_rich = false);

}  // namespace tanglekit

#endif  // TANGLEKIT_TST_HPP_
