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

#include "tanglekit/tst.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tanglekit/error.hpp"

namespace tanglekit {

SeparationTree::SeparationTree() : nodes_(1) {}

const SeparationTree::Node& SeparationTree::at(NodeId v) const {
  if (v >= nodes_.size())
    throw Error(ErrorKind::kPrecondition, "unknown node " + std::to_string(v));
  return nodes_[v];
}

NodeId SeparationTree::add_child(NodeId v, Oriented label) {
  at(v);
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({v, label, {}});
  nodes_[v].children.push_back(id);
  return id;
}

OrientedSet SeparationTree::beta_path(NodeId v) const {
  OrientedSet out;
  for (NodeId x = v; x != root_; x = at(x).parent) out.insert(at(x).label);
  return out;
}

std::optional<SepId> SeparationTree::split(const SeparationSystem& system,
                                           NodeId v) const {
  if (is_leaf(v)) return std::nullopt;
  return system.sep(label(children(v).front()));
}

bool SeparationTree::leq(NodeId u, NodeId v) const {
  at(u);
  for (NodeId x = v;; x = at(x).parent) {
    if (x == u) return true;
    if (x == root_) return false;
  }
}

std::size_t SeparationTree::depth(NodeId v) const {
  std::size_t d = 0;
  for (NodeId x = v; x != root_; x = at(x).parent) ++d;
  return d;
}

NodeId SeparationTree::infimum(NodeId u, NodeId v) const {
  std::size_t du = depth(u), dv = depth(v);
  while (du > dv) u = parent(u), --du;
  while (dv > du) v = parent(v), --dv;
  while (u != v) u = parent(u), v = parent(v);
  return u;
}

std::vector<NodeId> SeparationTree::preorder() const {
  std::vector<NodeId> out, stack{root_};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& c = nodes_[v].children;
    for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> SeparationTree::leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (nodes_[v].children.empty()) out.push_back(v);
  return out;
}

std::vector<NodeId> SeparationTree::leaves_below(NodeId w) const {
  std::vector<NodeId> out, stack{w};
  at(w);
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (nodes_[v].children.empty()) out.push_back(v);
    for (NodeId c : nodes_[v].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NodeId> SeparationTree::non_leaves() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v)
    if (!nodes_[v].children.empty()) out.push_back(v);
  return out;
}

SeparationTree SeparationTree::renumbered() const {
  SeparationTree out;
  std::vector<std::pair<NodeId, NodeId>> stack;  // (old, new parent)
  const auto& rc = nodes_[root_].children;
  for (auto it = rc.rbegin(); it != rc.rend(); ++it)
    stack.push_back({*it, out.root()});
  while (!stack.empty()) {
    auto [old, p] = stack.back();
    stack.pop_back();
    NodeId id = out.add_child(p, nodes_[old].label);
    const auto& c = nodes_[old].children;
    for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back({*it, id});
  }
  return out;
}

SeparationTree SeparationTree::from_parents(NodeId root,
                                            const std::vector<NodeId>& parents,
                                            const std::vector<Oriented>& labels) {
  const std::size_t n = parents.size();
  if (n == 0 || labels.size() != n || root >= n)
    throw Error(ErrorKind::kValidation, "tree: bad node table");
  if (parents[root] != kNoNode)
    throw Error(ErrorKind::kValidation, "tree: root has a parent");
  SeparationTree t;
  t.root_ = root;
  t.nodes_.assign(n, Node{});
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (parents[v] >= n || parents[v] == v)
      throw Error(ErrorKind::kValidation,
                  "tree: bad parent of node " + std::to_string(v));
    t.nodes_[v].parent = parents[v];
    t.nodes_[v].label = labels[v];
    t.nodes_[parents[v]].children.push_back(v);
  }
  if (t.preorder().size() != n)
    throw Error(ErrorKind::kValidation, "tree: not connected to the root");
  return t;
}

bool operator==(const SeparationTree& a, const SeparationTree& b) {
  if (a.root_ != b.root_ || a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto &x = a.nodes_[i], &y = b.nodes_[i];
    if (x.parent != y.parent || x.children != y.children) return false;
    if (i != a.root_ && x.label != y.label) return false;
  }
  return true;
}

std::string_view to_string(LeafKind kind) {
  switch (kind) {
    case LeafKind::kTangle: return "tangle";
    case LeafKind::kForbidden: return "forbidden";
    case LeafKind::kUnresolved: return "unresolved";
  }
  return "unresolved";
}

LeafClassifier tangle_leaf_classifier(const SeparationSystem& system,
                                      const ForbiddenFamily& family) {
  return [system, family](const OrientedSet& beta) {
    if (auto i = family.first_subset_of(beta))
      return LeafClass{LeafKind::kForbidden, family.members()[*i]};
    OrientedSet c = closure_unchecked(system, beta);
    if (is_orientation(system, c) && is_consistent(system, c) && avoids(c, family))
      return LeafClass{LeafKind::kTangle, c};
    return LeafClass{LeafKind::kUnresolved, c};
  };
}

LeafClassifier maximal_tangle_leaf_classifier(const SeparationSystem& system,
                                              const ForbiddenFamily& family,
                                              const TanglesIn& tangles) {
  return [system, family, tangles](const OrientedSet& beta) {
    if (auto i = family.first_subset_of(beta))
      return LeafClass{LeafKind::kForbidden, family.members()[*i]};
    OrientedSet c = closure_unchecked(system, beta);
    std::optional<std::size_t> level;
    for (std::size_t i = 0; i < tangles.levels.size(); ++i) {
      const SeparationSystem& li = tangles.levels[i].system;
      bool all = true;
      for (SepId s : li.separations())
        if (!orients(system, c, s)) { all = false; break; }
      if (all) level = i;
    }
    if (level && is_consistent(system, c) &&
        beta.subset_of(tangles.levels[*level].system.members())) {
      OrientedSet tau = c & tangles.levels[*level].system.members();
      for (const Tangle& t : tangles.maximal)
        if (t.level == *level && t.orientation == tau)
          return LeafClass{LeafKind::kTangle, tau};
    }
    return LeafClass{LeafKind::kUnresolved, c};
  };
}

std::vector<std::optional<LeafClass>> classify_leaves(
    const SeparationTree& tree, const LeafClassifier& classifier) {
  std::vector<std::optional<LeafClass>> out(tree.size());
  for (NodeId v : tree.leaves()) out[v] = classifier(tree.beta_path(v));
  return out;
}

namespace {

TstReport fail(TstReport r, NodeId v, std::string why) {
  r.ok = false;
  r.node = v;
  r.failure = std::move(why);
  return r;
}

}  // namespace

TstReport validate_separation_tree(const SeparationSystem& system,
                                   const SeparationTree& tree) {
  TstReport r;
  for (NodeId v = 0; v < tree.size(); ++v) {
    if (v != tree.root() && !system.contains(tree.label(v)))
      return fail(r, v, "edge label not in the system");
  }
  for (NodeId v : tree.non_leaves()) {
    const auto& c = tree.children(v);
    SepId s = system.sep(tree.label(c.front()));
    bool ok = true;
    for (NodeId w : c) ok = ok && system.sep(tree.label(w)) == s;
    if (ok && system.degenerate(system.orientations(s)[0]))
      ok = c.size() == 1;
    else if (ok)
      ok = c.size() == 2 && tree.label(c[0]) != tree.label(c[1]);
    if (!ok)
      return fail(r, v,
                  "child edges do not biject onto the orientations of one "
                  "separation");
  }
  // Distinct splits along root paths, and consistent path labels.
  std::vector<std::pair<NodeId, std::vector<bool>>> stack;
  stack.push_back({tree.root(), std::vector<bool>(system.ambient_separations())});
  while (!stack.empty()) {
    auto [v, seen] = std::move(stack.back());
    stack.pop_back();
    if (v != tree.root()) {
      SepId s = system.sep(tree.label(v));
      if (seen[s]) return fail(r, v, "separation split twice on a root path");
      seen[s] = true;
      if (!is_consistent(system, tree.beta_path(v)))
        return fail(r, v, "path labels are inconsistent");
    }
    for (NodeId w : tree.children(v)) stack.push_back({w, seen});
  }
  return r;
}

TstReport validate_tst(const SeparationSystem& system,
                       const SeparationTree& tree,
                       const ForbiddenFamily& family,
                       const LeafClassifier& classifier) {
  TstReport r = validate_separation_tree(system, tree);
  if (!r.ok) return r;
  r.leaf_class = classify_leaves(tree, classifier);
  for (NodeId v : tree.non_leaves())
    if (family.first_subset_of(tree.beta_path(v)))
      return fail(r, v, "non-leaf path labels contain a forbidden set");
  for (NodeId v : tree.leaves())
    if (r.leaf_class[v]->kind == LeafKind::kUnresolved)
      return fail(r, v, "leaf is neither a tangle leaf nor forbidden");
  return r;
}

TstReport validate_tst(const SeparationSystem& system,
                       const SeparationTree& tree,
                       const ForbiddenFamily& family) {
  return validate_tst(system, tree, family,
                      tangle_leaf_classifier(system, family));
}

bool is_ftree(const TstReport& report) {
  if (!report.ok) return false;
  for (const auto& c : report.leaf_class)
    if (c && c->kind != LeafKind::kForbidden) return false;
  return true;
}

bool is_ordered(const SeparationSystem& system, const OrderFunction& order,
                const SeparationTree& tree, NodeId* witness) {
  for (NodeId v : tree.non_leaves()) {
    if (v == tree.root()) continue;
    NodeId u = tree.parent(v);
    if (order(*tree.split(system, u)) > order(*tree.split(system, v))) {
      if (witness) *witness = v;
      return false;
    }
  }
  return true;
}

bool is_thoroughly_ordered(const SeparationSystem& system,
                           const OrderFunction& order,
                           const SeparationTree& tree, NodeId* witness) {
  for (NodeId v : tree.non_leaves()) {
    OrientedSet c = closure_unchecked(system, tree.beta_path(v));
    SepId sv = *tree.split(system, v);
    bool ok = !orients(system, c, sv);
    for (SepId s : system.separations()) {
      if (!ok) break;
      if (!orients(system, c, s) && order(s) < order(sv)) ok = false;
    }
    if (!ok) {
      if (witness) *witness = v;
      return false;
    }
  }
  return true;
}

bool is_efficient_tree(const SeparationSystem& system,
                       const OrderFunction& order, const SeparationTree& tree,
                       NodeId* witness) {
  for (NodeId l : tree.leaves()) {
    OrientedSet beta = tree.beta_path(l);
    if (!is_efficient(system, order, beta, closure_unchecked(system, beta))) {
      if (witness) *witness = l;
      return false;
    }
  }
  return true;
}

NodeId display(const SeparationSystem& system, const SeparationTree& tree,
               const OrientedSet& tau) {
  if (!is_orientation(system, tau))
    throw Error(ErrorKind::kPrecondition,
                "display: " + tau.to_string() + " is not an orientation");
  NodeId v = tree.root();
  while (!tree.is_leaf(v)) {
    NodeId next = kNoNode;
    for (NodeId w : tree.children(v))
      if (tau.contains(tree.label(w))) next = w;
    if (next == kNoNode)
      throw Error(ErrorKind::kPrecondition,
                  "display: orientation misses the split at node " +
                      std::to_string(v));
    v = next;
  }
  return v;
}

std::vector<OrientedSet> displayed_tangles(
    const SeparationSystem& system, const SeparationTree& tree,
    const std::vector<std::optional<LeafClass>>& leaf_class) {
  (void)system;
  std::vector<OrientedSet> out;
  for (NodeId l : tree.leaves())
    if (leaf_class.at(l) && leaf_class[l]->kind == LeafKind::kTangle)
      out.push_back(leaf_class[l]->witness);
  return out;
}

std::vector<bool> tangle_nodes(
    const SeparationTree& tree,
    const std::vector<std::optional<LeafClass>>& leaf_class) {
  std::vector<bool> has(tree.size(), false), out(tree.size(), false);
  std::vector<NodeId> order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId v = *it;
    if (tree.is_leaf(v)) {
      has[v] = leaf_class.at(v) && leaf_class[v]->kind == LeafKind::kTangle;
      continue;
    }
    bool all = true;
    for (NodeId w : tree.children(v)) {
      has[v] = has[v] || has[w];
      all = all && has[w];
    }
    out[v] = all;
  }
  return out;
}

SeparationTree build_thorough_tst(const SeparationSystem& system,
                                  const OrderFunction& order,
                                  const ForbiddenFamily& family,
                                  std::size_t bound) {
  std::pair<SepId, SepId> clash;
  if (!order.injective_on(system, &clash))
    throw Error(ErrorKind::kNonInjectiveOrder,
                "order takes the same value on separations " +
                    std::to_string(clash.first) + " and " +
                    std::to_string(clash.second));
  OrientedSet missing;
  if (!is_standard(family, system, &missing))
    throw Error(ErrorKind::kNotStandard,
                "family is not standard; missing inverses of trivial " +
                    missing.to_string(),
                {missing});
  check_bound(system, bound);

  struct Item {
    NodeId parent;
    Oriented label;
    OrientedSet beta;
  };
  SeparationTree tree;
  std::vector<Item> stack{{kNoNode, kNoOriented, {}}};
  while (!stack.empty()) {
    Item item = std::move(stack.back());
    stack.pop_back();
    NodeId v = item.parent == kNoNode ? tree.root()
                                      : tree.add_child(item.parent, item.label);
    bool forbidden = item.parent == kNoNode
                         ? family.first_subset_of(item.beta).has_value()
                         : family.has_subset_containing(item.beta, item.label);
    if (forbidden) continue;
    OrientedSet c = closure_unchecked(system, item.beta);
    std::optional<SepId> next;
    for (SepId s : system.separations()) {
      if (orients(system, c, s)) continue;
      if (!next || order(s) < order(*next)) next = s;
    }
    if (!next) {
      if (auto i = family.first_subset_of(c))
        throw Error(ErrorKind::kRichnessViolation,
                    "closure " + c.to_string() + " of " + item.beta.to_string() +
                        " contains forbidden " +
                        family.members()[*i].to_string() +
                        " but the path labels contain none",
                    {c, family.members()[*i]});
      continue;
    }
    auto o = system.orientations(*next);
    for (int i : {1, 0}) {
      if (i == 1 && o[1] == o[0]) continue;
      OrientedSet beta = item.beta;
      beta.insert(o[i]);
      stack.push_back({v, o[i], beta});
    }
  }
  return tree;
}

Necessity necessity(const SeparationSystem& system, const SeparationTree& tree,
                    const ForbiddenFamily& family,
                    const std::vector<std::optional<LeafClass>>& leaf_class) {
  Necessity n;
  n.edge_leaves.assign(tree.size(), {});
  n.node_necessary.assign(tree.size(), true);
  for (NodeId l : tree.leaves()) {
    if (!leaf_class.at(l)) continue;
    LeafKind kind = leaf_class[l]->kind;
    if (kind == LeafKind::kUnresolved) continue;
    OrientedSet beta = tree.beta_path(l);
    std::vector<std::size_t> subsets;
    if (kind == LeafKind::kForbidden) subsets = family.subsets_of(beta);
    for (NodeId w = l; w != tree.root(); w = tree.parent(w)) {
      Oriented x = tree.label(w);
      bool needed = true;
      if (kind == LeafKind::kTangle) {
        for (Oriented y : beta)
          if (y != x && system.leq(y, x)) needed = false;
      } else {
        for (std::size_t i : subsets)
          if (!family.members()[i].contains(x)) needed = false;
      }
      if (needed) n.edge_leaves[w].push_back(l);
    }
  }
  for (NodeId v : tree.non_leaves())
    for (NodeId w : tree.children(v))
      if (n.edge_leaves[w].empty()) n.node_necessary[v] = false;
  return n;
}

Necessity necessity(const SeparationSystem& system, const SeparationTree& tree,
                    const ForbiddenFamily& family) {
  return necessity(system, tree, family,
                   classify_leaves(tree, tangle_leaf_classifier(system, family)));
}

bool is_irreducible(const Necessity& n) {
  return std::all_of(n.node_necessary.begin(), n.node_necessary.end(),
                     [](bool b) { return b; });
}

bool is_prefix_tree(const SeparationTree& small, const SeparationTree& big) {
  std::vector<std::pair<NodeId, NodeId>> stack{{small.root(), big.root()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    for (NodeId c : small.children(x)) {
      NodeId match = kNoNode;
      for (NodeId d : big.children(y))
        if (big.label(d) == small.label(c)) match = d;
      if (match == kNoNode) return false;
      stack.push_back({c, match});
    }
  }
  return true;
}

}  // namespace tanglekit
