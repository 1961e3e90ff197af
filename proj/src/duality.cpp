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

#include "tanglekit/duality.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "tanglekit/error.hpp"
#include "tanglekit/orderfn.hpp"

namespace tanglekit {

std::uint32_t STree::add_edge(std::uint32_t a, std::uint32_t b,
                              Oriented label) {
  if (a >= nodes_ || b >= nodes_)
    throw Error(ErrorKind::kPrecondition, "S-tree: edge end out of range");
  edges_.push_back({a, b, label});
  return static_cast<std::uint32_t>(edges_.size() - 1);
}

std::uint32_t STree::initial(OrientedEdge e) const {
  const STreeEdge& x = edges_.at(e / 2);
  return e % 2 == 0 ? x.a : x.b;
}

std::uint32_t STree::terminal(OrientedEdge e) const {
  const STreeEdge& x = edges_.at(e / 2);
  return e % 2 == 0 ? x.b : x.a;
}

Oriented STree::alpha(const SeparationSystem& system, OrientedEdge e) const {
  Oriented a = edges_.at(e / 2).alpha;
  return e % 2 == 0 ? a : system.inv(a);
}

std::vector<OrientedEdge> STree::incoming(std::uint32_t t) const {
  std::vector<OrientedEdge> out;
  for (OrientedEdge e = 0; e < 2 * edges_.size(); ++e)
    if (terminal(e) == t) out.push_back(e);
  return out;
}

OrientedSet STree::star(const SeparationSystem& system, std::uint32_t t) const {
  OrientedSet out;
  for (OrientedEdge e : incoming(t)) out.insert(alpha(system, e));
  return out;
}

std::vector<std::uint32_t> STree::path(std::uint32_t from,
                                       std::uint32_t to) const {
  // Nodes on the path, by breadth-first search.
  std::vector<std::uint32_t> prev(nodes_, 0xffffffffu), queue{from};
  prev[from] = from;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    std::uint32_t x = queue[i];
    for (const STreeEdge& e : edges_) {
      for (auto [p, q] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        if (p == x && prev[q] == 0xffffffffu) {
          prev[q] = x;
          queue.push_back(q);
        }
      }
    }
  }
  std::vector<std::uint32_t> out;
  if (prev[to] == 0xffffffffu) return out;
  for (std::uint32_t x = to; x != from; x = prev[x]) out.push_back(x);
  out.push_back(from);
  std::reverse(out.begin(), out.end());
  return out;
}

bool STree::is_tree() const {
  if (edges_.size() + 1 != nodes_) return false;
  for (std::uint32_t t = 0; t < nodes_; ++t)
    if (path(0, t).empty()) return false;
  return true;
}

bool STree::edge_greater(OrientedEdge e, OrientedEdge f) const {
  if (e / 2 == f / 2) return false;
  // The path from e to f leaves e at one end and enters f at one end; it
  // must leave at t(e) and enter at i(f), so it avoids i(e) and t(f).
  std::vector<std::uint32_t> p = path(terminal(e), initial(f));
  if (p.empty()) return false;
  for (std::uint32_t x : p)
    if (x == initial(e) || x == terminal(f)) return false;
  return true;
}

bool is_over(const SeparationSystem& system, const STree& tree,
             const ForbiddenFamily& family, std::uint32_t* bad) {
  for (std::uint32_t t = 0; t < tree.num_nodes(); ++t) {
    if (!family.contains(tree.star(system, t))) {
      if (bad) *bad = t;
      return false;
    }
  }
  return true;
}

bool preserves_order(const SeparationSystem& system, const STree& tree,
                     std::pair<OrientedEdge, OrientedEdge>* witness) {
  const OrientedEdge m = static_cast<OrientedEdge>(2 * tree.num_edges());
  for (OrientedEdge e = 0; e < m; ++e) {
    for (OrientedEdge f = 0; f < m; ++f) {
      if (e == f || !tree.edge_greater(f, e)) continue;
      if (!system.leq(tree.alpha(system, e), tree.alpha(system, f))) {
        if (witness) *witness = {e, f};
        return false;
      }
    }
  }
  return true;
}

bool injective_on_stars(const SeparationSystem& system, const STree& tree,
                        std::uint32_t* bad) {
  for (std::uint32_t t = 0; t < tree.num_nodes(); ++t) {
    if (tree.star(system, t).size() != tree.incoming(t).size()) {
      if (bad) *bad = t;
      return false;
    }
  }
  return true;
}

ExclusionReport stree_excludes_tangles(const SeparationSystem& system,
                                       const STree& tree,
                                       const ForbiddenFamily& family,
                                       std::size_t bound) {
  std::uint32_t bad = 0;
  if (!tree.is_tree())
    throw Error(ErrorKind::kPrecondition, "exclusion: not a tree");
  if (!is_over(system, tree, family, &bad))
    throw Error(ErrorKind::kPrecondition,
                "exclusion: S-tree is not over the family at node " +
                    std::to_string(bad),
                {tree.star(system, bad)});
  std::vector<OrientedSet> stars;
  for (std::uint32_t t = 0; t < tree.num_nodes(); ++t)
    stars.push_back(tree.star(system, t));
  ExclusionReport r;
  for_each_orientation(
      system,
      [&](const OrientedSet& tau) {
        ++r.orientations;
        for (const OrientedSet& s : stars)
          if (s.subset_of(tau)) return true;
        r.ok = false;
        r.counterexample = tau;
        return false;
      },
      bound);
  return r;
}

ConversionCheck check_conversion(const SeparationSystem& system,
                                 const SeparationTree& ftree,
                                 const ForbiddenFamily& family,
                                 const Conversion& conversion,
                                 bool require_over) {
  ConversionCheck c;
  const STree& t = conversion.tree;
  const ConversionMap& g = conversion.gamma;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    c.failures.push_back(why);
  };

  std::vector<NodeId> leaves = ftree.leaves(), mapped = g.node_leaf;
  std::sort(mapped.begin(), mapped.end());
  if (mapped.size() != t.num_nodes() || mapped != leaves)
    fail(c.clause1, "nodes do not biject onto the leaves");

  std::vector<NodeId> edges, images = g.edge_child;
  for (NodeId v = 0; v < ftree.size(); ++v)
    if (v != ftree.root()) edges.push_back(v);
  std::sort(images.begin(), images.end());
  if (images.size() != 2 * t.num_edges() || images != edges)
    fail(c.clause2, "oriented edges do not biject onto the edges");

  if (c.clause2 && g.edge_node.size() == t.num_edges()) {
    std::vector<NodeId> ve = g.edge_node;
    std::sort(ve.begin(), ve.end());
    if (std::adjacent_find(ve.begin(), ve.end()) != ve.end())
      fail(c.clause3, "edge nodes are not distinct");
    for (std::size_t e = 0; e < t.num_edges() && c.clause3; ++e) {
      std::vector<NodeId> pair{g.edge_child[2 * e], g.edge_child[2 * e + 1]};
      std::vector<NodeId> kids = ftree.children(g.edge_node[e]);
      std::sort(pair.begin(), pair.end());
      std::sort(kids.begin(), kids.end());
      if (pair != kids) fail(c.clause3, "edge does not pair E_v");
    }
  } else if (c.clause2) {
    fail(c.clause3, "edge node table has the wrong size");
  }

  if (c.clause1 && c.clause2 && c.clause3) {
    for (OrientedEdge e = 0; e < 2 * t.num_edges(); ++e) {
      NodeId leaf = g.node_leaf[t.terminal(e)], w = g.edge_child[e];
      if (ftree.parent(w) != g.edge_node[e / 2] || !ftree.leq(w, leaf)) {
        fail(c.clause4, "terminal node is not above the first edge");
        break;
      }
    }
    for (OrientedEdge e = 0; e < 2 * t.num_edges(); ++e) {
      if (t.alpha(system, e) != ftree.label(g.edge_child[e])) {
        fail(c.clause5, "alpha differs from beta o gamma");
        break;
      }
    }
  } else {
    c.clause4 = c.clause5 = false;
  }

  if (!t.is_tree()) fail(c.tree, "T' is not a tree");
  if (require_over && !is_over(system, t, family))
    fail(c.over_family, "S-tree is not over the family");

  OrientedSet alpha_image, beta_image;
  for (OrientedEdge e = 0; e < 2 * t.num_edges(); ++e)
    alpha_image.insert(t.alpha(system, e));
  for (NodeId v : edges) beta_image.insert(ftree.label(v));
  if (alpha_image != beta_image) fail(c.image, "alpha image differs from beta image");

  for (OrientedEdge e = 0; e < 2 * t.num_edges() && c.decreasing; ++e) {
    for (OrientedEdge f = 0; f < 2 * t.num_edges(); ++f) {
      if (e / 2 == f / 2 || t.terminal(e) != t.initial(f)) continue;
      if (!system.lt(t.alpha(system, f), t.alpha(system, e))) {
        fail(c.decreasing, "alpha does not decrease along an oriented path");
        break;
      }
    }
  }
  return c;
}

namespace {

void require_trivial_free(const SeparationSystem& system) {
  Classification c = classify(system);
  if (!c.trivial.empty())
    throw Error(ErrorKind::kTrivialElementsPresent,
                "system has trivial elements " + c.trivial.to_string(),
                {c.trivial});
}

void require_stars(const ForbiddenFamily& family,
                   const SeparationSystem& system) {
  std::size_t bad = 0;
  if (!all_stars(family, system, &bad))
    throw Error(ErrorKind::kNonStarFamily,
                "family member " + family.members()[bad].to_string() +
                    " is not a star",
                {family.members()[bad]});
}

TstReport require_ftree(const SeparationSystem& system,
                        const SeparationTree& tree,
                        const ForbiddenFamily& family) {
  TstReport r = validate_tst(system, tree, family);
  if (!r.ok)
    throw Error(ErrorKind::kPrecondition,
                "not a tangle structure tree: " + r.failure + " at node " +
                    std::to_string(r.node));
  if (!is_ftree(r))
    throw Error(ErrorKind::kPrecondition, "tree has a tangle leaf");
  return r;
}

}  // namespace

Conversion convert_ftree(const SeparationSystem& system,
                         const SeparationTree& ftree,
                         const ForbiddenFamily& family, bool allow_trivial) {
  if (!allow_trivial) require_trivial_free(system);
  require_stars(family, system);
  TstReport report = require_ftree(system, ftree, family);
  Necessity n = necessity(system, ftree, family, report.leaf_class);
  if (!is_irreducible(n)) {
    NodeId v = 0;
    while (n.node_necessary[v]) ++v;
    throw Error(ErrorKind::kNotIrreducible,
                "node " + std::to_string(v) + " is not necessary");
  }

  Conversion out;
  std::vector<NodeId> leaves = ftree.leaves();
  std::unordered_map<NodeId, std::uint32_t> index;
  for (std::uint32_t i = 0; i < leaves.size(); ++i) index[leaves[i]] = i;
  out.tree = STree(leaves.size());
  out.gamma.node_leaf = leaves;
  for (NodeId v : ftree.non_leaves()) {
    const auto& c = ftree.children(v);
    if (c.size() != 2)
      throw Error(ErrorKind::kTheoremViolation,
                  "irreducible F-tree has a degenerate split at node " +
                      std::to_string(v));
    NodeId l1 = n.edge_leaves[c[0]].front(), l2 = n.edge_leaves[c[1]].front();
    out.tree.add_edge(index.at(l1), index.at(l2), ftree.label(c[1]));
    out.gamma.edge_child.push_back(c[1]);
    out.gamma.edge_child.push_back(c[0]);
    out.gamma.edge_node.push_back(v);
  }
  ConversionCheck check =
      check_conversion(system, ftree, family, out, !allow_trivial);
  if (!check.ok())
    throw Error(ErrorKind::kTheoremViolation,
                "conversion failed: " + check.failures.front());
  return out;
}

STree trivial_patch(const SeparationSystem& system, const STree& tree,
                    const ForbiddenFamily& family) {
  OrientedSet missing;
  if (!is_standard(family, system, &missing))
    throw Error(ErrorKind::kNotStandard,
                "trivial patch needs a standard family; missing " +
                    missing.to_string(),
                {missing});
  const OrientedSet trivial = classify(system).trivial;
  STree out = tree;
  for (std::uint32_t t = 0; t < tree.num_nodes(); ++t) {
    OrientedSet star = tree.star(system, t);
    if (family.contains(star)) continue;
    std::vector<Oriented> candidates;
    for (Oriented r : trivial) {
      if (star.contains(r)) continue;
      for (Oriented x : star)
        if (system.sep(x) != system.sep(r) && system.lt(x, r) &&
            system.lt(system.inv(x), r)) {
          candidates.push_back(r);
          break;
        }
    }
    // Smallest set of witnessed trivial elements completing the star to a
    // member; lower handles first among sets of one size.
    const std::size_t m = std::min<std::size_t>(candidates.size(), 20);
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                       return std::popcount(a) < std::popcount(b);
                     });
    for (std::uint32_t mask : masks) {
      OrientedSet grown = star;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) grown.insert(candidates[i]);
      if (!family.contains(grown)) continue;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(mask >> i & 1u)) continue;
        std::uint32_t leaf = out.add_node();
        out.add_edge(leaf, t, candidates[i]);
      }
      break;
    }
  }
  std::uint32_t bad = 0;
  if (!out.is_tree() || !is_over(system, out, family, &bad))
    throw Error(ErrorKind::kTheoremViolation,
                "patched S-tree is not over the family at node " +
                    std::to_string(bad),
                {out.star(system, bad)});
  return out;
}

NestedCheck check_nested_corollary(const SeparationSystem& system,
                                   const SeparationTree& ftree,
                                   const ForbiddenFamily& family) {
  require_trivial_free(system);
  require_stars(family, system);
  TstReport report = require_ftree(system, ftree, family);
  NestedCheck out;
  out.irreducible =
      is_irreducible(necessity(system, ftree, family, report.leaf_class));
  OrientedSet labels;
  for (NodeId v = 0; v < ftree.size(); ++v)
    if (v != ftree.root()) labels.insert(ftree.label(v));
  out.nested = is_nested_set(system, labels, &out.crossing);
  return out;
}

STree stree_from_nested(const SeparationSystem& system, std::size_t bound) {
  Classification c = classify(system);
  if (!c.regular)
    throw Error(ErrorKind::kPrecondition,
                "system is not regular; small elements " + c.small.to_string(),
                {c.small});
  std::vector<std::pair<Oriented, Oriented>> crossing;
  if (!is_nested_set(system, system.members(), &crossing))
    throw Error(ErrorKind::kPrecondition,
                "system is not nested: " + std::to_string(crossing[0].first) +
                    " crosses " + std::to_string(crossing[0].second),
                {OrientedSet{crossing[0].first, crossing[0].second}});

  std::vector<OrientedSet> nodes = consistent_orientations(system, bound);
  std::unordered_map<OrientedSet, std::uint32_t, OrientedSetHash> index;
  for (std::uint32_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  STree out(nodes.size());
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    for (Oriented x : nodes[i]) {
      OrientedSet flipped = nodes[i];
      flipped.erase(x);
      flipped.insert(system.inv(x));
      auto it = index.find(flipped);
      if (it == index.end() || it->second < i) continue;
      out.add_edge(it->second, i, x);  // points to the orientation holding x
    }
  }
  // Trivial elements lie in every consistent orientation; each gets a leaf.
  for (Oriented r : c.trivial) {
    bool placed = false;
    for (std::uint32_t t = 0; t < nodes.size() && !placed; ++t) {
      OrientedSet star = out.star(system, t);
      star.insert(r);
      if (!is_star(system, star)) continue;
      std::uint32_t leaf = out.add_node();
      out.add_edge(leaf, t, r);
      placed = true;
    }
    if (!placed)
      throw Error(ErrorKind::kTheoremViolation,
                  "no node can take the trivial element " + std::to_string(r));
  }

  OrientedSet image;
  for (OrientedEdge e = 0; e < 2 * out.num_edges(); ++e)
    image.insert(out.alpha(system, e));
  bool stars = true;
  for (std::uint32_t t = 0; t < out.num_nodes(); ++t)
    stars = stars && is_star(system, out.star(system, t));
  if (!out.is_tree() || !stars || image != system.members() ||
      !injective_on_stars(system, out) || !preserves_order(system, out))
    throw Error(ErrorKind::kTheoremViolation,
                "S-tree built from a nested system fails validation");
  return out;
}

DichotomyResult dichotomy(const SeparationSystem& input,
                          const OrderFunction& input_order,
                          const ForbiddenFamily& input_family,
                          const DichotomyOptions& options) {
  DichotomyResult out;
  out.system = input;
  out.order = input_order;
  if (options.trivial == TrivialPolicy::kDrop)
    out.system = remove_trivial(input);
  else if (options.trivial == TrivialPolicy::kReject)
    require_trivial_free(input);
  const SeparationSystem& s = out.system;
  check_bound(s, options.bound);
  // Members through dropped elements go with them.
  const ForbiddenFamily family = options.trivial == TrivialPolicy::kDrop
                                     ? input_family.restricted_to(s)
                                     : input_family;

  if (!out.order.injective_on(s)) {
    if (!options.universe)
      throw Error(ErrorKind::kNonInjectiveOrder,
                  "order is not injective and no universe is available to "
                  "refine it");
    out.order = refine_injective(*options.universe, out.order).order;
    out.refined = true;
  }
  OrientedSet missing;
  if (!is_standard(family, s, &missing))
    throw Error(ErrorKind::kNotStandard,
                "family is not standard; missing inverses of " +
                    missing.to_string(),
                {missing});
  OrientedSet counter;
  if (!options.trust_rich &&
      !is_rich(family, s, out.order, &counter, options.bound))
    throw Error(ErrorKind::kNotRich,
                "family is not rich; orientation " + counter.to_string(),
                {counter});

  out.stars = all_stars(family, s);
  out.tangles = enumerate_tangles(s, family, options.bound);
  out.thorough = build_thorough_tst(s, out.order, family, options.bound);
  TstReport report = validate_tst(s, out.thorough, family);
  if (!report.ok)
    throw Error(ErrorKind::kTheoremViolation,
                "thorough tree is not a tangle structure tree: " +
                    report.failure);
  std::size_t tangle_leaves = displayed_tangles(s, out.thorough,
                                                report.leaf_class).size();
  if (tangle_leaves != out.tangles.size())
    throw Error(ErrorKind::kTheoremViolation,
                "thorough tree displays " + std::to_string(tangle_leaves) +
                    " tangles, enumeration finds " +
                    std::to_string(out.tangles.size()));
  if (out.has_tangle()) {
    out.exclusive_checked = options.check_exclusive;
    return out;
  }

  out.reduction = reduce_irreducible(s, out.order, out.thorough, family);
  TstReport reduced = validate_tst(s, out.reduction->tree, family);
  if (!is_ftree(reduced))
    throw Error(ErrorKind::kTheoremViolation, "reduced tree is not an F-tree");
  if (!out.stars) return out;

  const bool patch = options.trivial == TrivialPolicy::kPatch &&
                     !classify(s).trivial.empty();
  out.conversion = convert_ftree(s, out.reduction->tree, family, patch);
  out.stree = patch ? trivial_patch(s, out.conversion->tree, family)
                    : out.conversion->tree;
  std::uint32_t bad = 0;
  if (!is_over(s, *out.stree, family, &bad))
    throw Error(ErrorKind::kTheoremViolation,
                "S-tree is not over the family at node " + std::to_string(bad));
  if (!patch) {
    ForbiddenFamily eff = f_eff(family, s, out.order).family;
    if (!is_over(s, *out.stree, eff, &bad))
      throw Error(ErrorKind::kTheoremViolation,
                  "S-tree star at node " + std::to_string(bad) +
                      " is not efficient in its closure",
                  {out.stree->star(s, bad)});
  }
  if (options.check_exclusive) {
    out.exclusion = stree_excludes_tangles(s, *out.stree, family, options.bound);
    out.exclusive_checked = true;
    if (!out.exclusion->ok)
      throw Error(ErrorKind::kTheoremViolation,
                  "orientation " + out.exclusion->counterexample.to_string() +
                      " contains no star of the S-tree",
                  {out.exclusion->counterexample});
  }
  return out;
}

}  // namespace tanglekit
