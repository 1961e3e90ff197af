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

#include <string>
#include <utility>

#include "tanglekit/error.hpp"
#include "tanglekit/rational.hpp"
#include "tanglekit/tst.hpp"

namespace tanglekit {

namespace {

std::string threshold_name(const Threshold& k) {
  return k ? to_string(*k) : std::string("inf");
}

}  // namespace

LayeredTst build_tst_in_S(const SeparationSystem& system,
                          const OrderFunction& order,
                          const ForbiddenFamily& family, std::size_t bound,
                          bool trust_rich) {
  std::pair<SepId, SepId> clash;
  if (!order.injective_on(system, &clash))
    throw Error(ErrorKind::kNonInjectiveOrder,
                "order takes the same value on separations " +
                    std::to_string(clash.first) + " and " +
                    std::to_string(clash.second));
  check_bound(system, bound);
  LayeredTst out;
  out.tangles = enumerate_tangles_in(system, family, order, bound);
  for (const Level& level : out.tangles.levels) {
    OrientedSet missing;
    if (!is_standard(family, level.system, &missing))
      throw Error(ErrorKind::kNotStandard,
                  "family is not standard below k = " + threshold_name(level.k),
                  {missing});
    OrientedSet tau;
    if (!trust_rich && !is_rich(family, level.system, order, &tau, bound))
      throw Error(ErrorKind::kNotRich,
                  "family is not rich below k = " + threshold_name(level.k) +
                      "; orientation " + tau.to_string(),
                  {tau});
  }

  out.full = build_thorough_tst(system, order, family, bound);
  out.full_report = validate_tst(system, out.full, family);
  const auto& cls = out.full_report.leaf_class;
  auto forbidden_leaf = [&](NodeId x) {
    return out.full.is_leaf(x) && cls[x] && cls[x]->kind == LeafKind::kForbidden;
  };

  // Drop pairs of sibling forbidden leaves, once.
  std::vector<bool> prune(out.full.size(), false);
  for (NodeId v : out.full.non_leaves()) {
    const auto& c = out.full.children(v);
    prune[v] = c.size() == 2 && forbidden_leaf(c[0]) && forbidden_leaf(c[1]);
  }
  std::vector<std::pair<NodeId, NodeId>> stack;  // (old, new parent)
  out.full_id.push_back(out.full.root());
  if (!prune[out.full.root()]) {
    const auto& c = out.full.children(out.full.root());
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      stack.push_back({*it, out.tree.root()});
  }
  while (!stack.empty()) {
    auto [old, p] = stack.back();
    stack.pop_back();
    NodeId id = out.tree.add_child(p, out.full.label(old));
    out.full_id.push_back(old);
    if (prune[old]) continue;
    const auto& c = out.full.children(old);
    for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back({*it, id});
  }
  out.bare_root = out.tree.size() == 1;
  out.report = validate_tst(
      system, out.tree, family,
      maximal_tangle_leaf_classifier(system, family, out.tangles));

  for (const Level& level : out.tangles.levels)
    out.layers.push_back(build_thorough_tst(level.system, order, family, bound));
  for (std::size_t i = 0; i < out.layers.size(); ++i) {
    for (std::size_t j = i + 1; j < out.layers.size(); ++j)
      out.layers_nested =
          out.layers_nested && is_prefix_tree(out.layers[i], out.layers[j]);
    out.layers_nested =
        out.layers_nested && is_prefix_tree(out.layers[i], out.full);
  }
  return out;
}

}  // namespace tanglekit
