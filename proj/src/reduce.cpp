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

#include <algorithm>
#include <string>
#include <utility>

#include "tanglekit/error.hpp"
#include "tanglekit/tst.hpp"

namespace tanglekit {

SeparationTree contract(const SeparationTree& tree, NodeId v, NodeId w) {
  if (tree.is_leaf(v) || tree.parent(w) != v)
    throw Error(ErrorKind::kPrecondition,
                "contract: " + std::to_string(w) + " is not a child of " +
                    std::to_string(v));
  SeparationTree out;
  struct Item {
    NodeId old;
    NodeId parent;
    Oriented label;
  };
  std::vector<Item> stack{{tree.root(), kNoNode, kNoOriented}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    NodeId old = it.old == v ? w : it.old;
    NodeId id = it.parent == kNoNode ? out.root()
                                     : out.add_child(it.parent, it.label);
    const auto& c = tree.children(old);
    for (auto x = c.rbegin(); x != c.rend(); ++x)
      stack.push_back({*x, id, tree.label(*x)});
  }
  return out;
}

namespace {

std::vector<OrientedSet> sorted(std::vector<OrientedSet> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

}  // namespace

Reduction reduce_irreducible(const SeparationSystem& system,
                             const OrderFunction& order,
                             const SeparationTree& tree,
                             const ForbiddenFamily& family) {
  TstReport report = validate_tst(system, tree, family);
  if (!report.ok)
    throw Error(ErrorKind::kPrecondition,
                "reduce: input is not a tangle structure tree (" +
                    report.failure + " at node " + std::to_string(report.node) +
                    ")");
  NodeId bad = kNoNode;
  if (!is_ordered(system, order, tree, &bad))
    throw Error(ErrorKind::kPrecondition,
                "reduce: input is not ordered at node " + std::to_string(bad));
  const bool efficient = is_efficient_tree(system, order, tree);
  const std::vector<OrientedSet> tangles =
      sorted(displayed_tangles(system, tree, report.leaf_class));

  Reduction out{tree, {}};
  for (;;) {
    Necessity n = necessity(system, out.tree, family, report.leaf_class);
    if (is_irreducible(n)) return out;
    bool moved = false;
    for (NodeId v : out.tree.preorder()) {
      if (n.node_necessary[v]) continue;
      for (NodeId w : out.tree.children(v)) {
        if (!n.edge_leaves[w].empty()) continue;
        SeparationTree next = contract(out.tree, v, w);
        TstReport r = validate_tst(system, next, family);
        if (!r.ok) continue;
        if (sorted(displayed_tangles(system, next, r.leaf_class)) != tangles)
          continue;
        if (!is_ordered(system, order, next)) continue;
        if (efficient && !is_efficient_tree(system, order, next)) continue;
        out.steps.push_back({v, w});
        out.tree = std::move(next);
        report = std::move(r);
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved)
      throw Error(ErrorKind::kReductionStuck,
                  "reduce: no validated move applies to a reducible tree");
  }
}

}  // namespace tanglekit
