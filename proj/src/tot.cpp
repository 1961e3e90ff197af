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

#include "tanglekit/tot.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tanglekit/core.hpp"
#include "tanglekit/error.hpp"

namespace tanglekit {

DistinguisherReport optimal_distinguishers(
    const std::vector<OrientedSet>& tangles, const SeparationSystem& system,
    const OrderFunction& order) {
  DistinguisherReport out;
  std::set<SepId> all;
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    for (std::size_t j = i + 1; j < tangles.size(); ++j) {
      DistinguisherPair p;
      p.i = i;
      p.j = j;
      for (SepId s : system.separations()) {
        if (!distinguishes(system, s, tangles[i], tangles[j])) continue;
        p.distinguishing.push_back(s);
        if (!p.least || order(s) < *p.least) p.least = order(s);
      }
      for (SepId s : p.distinguishing)
        if (order(s) == *p.least) p.optimal.push_back(s);
      all.insert(p.optimal.begin(), p.optimal.end());
      out.pairs.push_back(std::move(p));
    }
  }
  out.separations.assign(all.begin(), all.end());
  return out;
}

TotReport verify_tot(const std::vector<SepId>& n,
                     const std::vector<OrientedSet>& tangles,
                     const SeparationSystem& system, const OrderFunction& order) {
  std::pair<SepId, SepId> clash;
  if (!order.injective_on(system, &clash))
    throw Error(ErrorKind::kNonInjectiveOrder,
                "tree of tangles check needs an injective order; separations " +
                    std::to_string(clash.first) + " and " +
                    std::to_string(clash.second) + " agree");
  TotReport r;
  OrientedSet oriented;
  for (SepId s : n) {
    auto o = system.orientations(s);
    oriented.insert(o[0]);
  }
  r.nested = is_nested_set(system, oriented, &r.crossing);
  if (!r.nested) r.failure = "N is not nested";

  DistinguisherReport oracle = optimal_distinguishers(tangles, system, order);
  std::set<SepId> in_n(n.begin(), n.end());
  for (const DistinguisherPair& p : oracle.pairs) {
    bool hit = false;
    for (SepId s : p.optimal) hit = hit || in_n.count(s);
    if (!hit) {
      r.distinguishes_all = false;
      r.undistinguished = {p.i, p.j};
      if (r.failure.empty())
        r.failure = "tangles " + std::to_string(p.i) + " and " +
                    std::to_string(p.j) + " are not distinguished optimally";
      break;
    }
  }
  std::set<SepId> want(oracle.separations.begin(), oracle.separations.end());
  std::set_difference(want.begin(), want.end(), in_n.begin(), in_n.end(),
                      std::back_inserter(r.missing));
  std::set_difference(in_n.begin(), in_n.end(), want.begin(), want.end(),
                      std::back_inserter(r.extra));
  r.equals_oracle = r.missing.empty() && r.extra.empty();
  if (!r.equals_oracle && r.failure.empty())
    r.failure = "N differs from the optimal distinguishers";
  r.ok = r.nested && r.distinguishes_all && r.equals_oracle;
  return r;
}

bool is_critical(const SeparationSystem& system, const SeparationTree& tree,
                 NodeId v, const ForbiddenFamily& robust) {
  std::optional<SepId> s = tree.split(system, v);
  if (!s) return false;
  const OrientedSet co_trivial = classify(system).co_trivial;
  OrientedSet c = closure_unchecked(system, tree.beta_path(v));
  for (Oriented x : system.both(*s)) {
    if (co_trivial.contains(x)) return true;
    OrientedSet with = c;
    with.insert(x);
    if (robust.first_subset_of(with)) return true;
  }
  return false;
}

bool is_critical(const Universe& universe, const OrderFunction& order,
                 const SeparationSystem& system, const SeparationTree& tree,
                 NodeId v) {
  return is_critical(system, tree, v,
                     robustness_family(universe, order, system, true));
}

std::vector<SepId> tangle_node_splits(const SeparationSystem& system,
                                      const SeparationTree& tree,
                                      const ForbiddenFamily& family) {
  auto cls = classify_leaves(tree, tangle_leaf_classifier(system, family));
  std::vector<bool> tn = tangle_nodes(tree, cls);
  std::set<SepId> out;
  for (NodeId v = 0; v < tree.size(); ++v)
    if (tn[v]) out.insert(*tree.split(system, v));
  return {out.begin(), out.end()};
}

namespace {

void check_universe_order(const Universe& universe, const OrderFunction& order) {
  std::pair<SepId, SepId> clash;
  if (!order.injective_on(universe.system(), &clash))
    throw Error(ErrorKind::kNonInjectiveOrder,
                "order is not injective on the universe; separations " +
                    std::to_string(clash.first) + " and " +
                    std::to_string(clash.second) + " agree");
  SubmodularityWitness w;
  if (!is_structurally_submodular(universe, order, &w))
    throw Error(ErrorKind::kPrecondition,
                "order is not structurally submodular at (" +
                    std::to_string(w.r) + ", " + std::to_string(w.s) + ")",
                {OrientedSet{w.r, w.s}});
}

void check_robust_included(const ForbiddenFamily& robust,
                           const ForbiddenFamily& family) {
  for (const OrientedSet& t : robust.members())
    if (!family.contains(t))
      throw Error(ErrorKind::kPrecondition,
                  "family does not include the robustness triple " +
                      t.to_string(),
                  {t});
}

std::vector<OrientedSet> sorted(std::vector<OrientedSet> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

}  // namespace

TreeOfTangles tree_of_tangles(const Universe& universe,
                              const OrderFunction& order,
                              const SeparationSystem& system,
                              const ForbiddenFamily& family,
                              const TotOptions& options) {
  check_universe_order(universe, order);
  if (!is_initial_segment(universe.system(), system, order))
    throw Error(ErrorKind::kPrecondition,
                "system is not an initial segment of the universe");
  ForbiddenFamily robust = robustness_family(universe, order, system, true);
  check_robust_included(robust, family);
  OrientedSet missing;
  if (!is_standard(family, system, &missing))
    throw Error(ErrorKind::kNotStandard, "family is not standard", {missing});
  OrientedSet counter;
  if (!options.trust_rich &&
      !is_rich(family, system, order, &counter, options.bound))
    throw Error(ErrorKind::kNotRich,
                "family is not rich; orientation " + counter.to_string(),
                {counter});

  TreeOfTangles out;
  out.tree = build_thorough_tst(system, order, family, options.bound);
  out.report = validate_tst(system, out.tree, family);
  if (!out.report.ok)
    throw Error(ErrorKind::kTheoremViolation,
                "thorough tree is not a tangle structure tree: " +
                    out.report.failure);
  std::vector<bool> tn = tangle_nodes(out.tree, out.report.leaf_class);
  std::set<SepId> n;
  for (NodeId v = 0; v < out.tree.size(); ++v) {
    if (!tn[v]) continue;
    out.nodes.push_back(v);
    n.insert(*out.tree.split(system, v));
    if (is_critical(system, out.tree, v, robust))
      out.critical_tangle_nodes.push_back(v);
  }
  out.n.assign(n.begin(), n.end());
  out.tangles = enumerate_tangles(system, family, options.bound);
  if (sorted(displayed_tangles(system, out.tree, out.report.leaf_class)) !=
      sorted(out.tangles))
    throw Error(ErrorKind::kTheoremViolation,
                "tangle leaves differ from the enumerated tangles");
  out.oracle = optimal_distinguishers(out.tangles, system, order);
  out.verification = verify_tot(out.n, out.tangles, system, order);

  for (const DistinguisherPair& p : out.oracle.pairs) {
    NodeId v = out.tree.infimum(display(system, out.tree, out.tangles[p.i]),
                                display(system, out.tree, out.tangles[p.j]));
    bool ok = tn[v] && p.optimal.size() == 1 &&
              p.optimal.front() == *out.tree.split(system, v);
    out.infimum_check = out.infimum_check && ok;
  }
  return out;
}

LayeredTreeOfTangles tree_of_tangles_in(const Universe& universe,
                                        const OrderFunction& order,
                                        const ForbiddenFamily& family,
                                        const TotOptions& options) {
  const SeparationSystem& system = universe.system();
  check_universe_order(universe, order);
  check_robust_included(robustness_family(universe, order, system, true),
                        family);
  LayeredTreeOfTangles out;
  out.layered = build_tst_in_S(system, order, family, options.bound,
                               options.trust_rich);
  const LayeredTst& l = out.layered;
  if (!l.report.ok)
    throw Error(ErrorKind::kTheoremViolation,
                "pruned tree is not a tangle structure tree in S: " +
                    l.report.failure + " at node " + std::to_string(l.report.node));

  const auto& full_cls = l.full_report.leaf_class;
  std::vector<bool> tn = tangle_nodes(l.tree, l.report.leaf_class);
  std::set<SepId> n;
  for (NodeId v : l.tree.non_leaves()) {
    NodeId fv = l.full_id[v];
    bool parent_of_forbidden = false;
    for (NodeId c : l.full.children(fv))
      if (l.full.is_leaf(c) && full_cls[c] &&
          full_cls[c]->kind == LeafKind::kForbidden)
        parent_of_forbidden = true;
    bool in_v = !parent_of_forbidden;
    out.v_is_tangle_nodes = out.v_is_tangle_nodes && in_v == tn[v];
    if (!in_v) continue;
    out.nodes.push_back(v);
    n.insert(*l.tree.split(system, v));
  }
  out.n.assign(n.begin(), n.end());

  for (const Tangle& t : l.tangles.maximal) out.maximal.push_back(t.orientation);
  out.oracle = optimal_distinguishers(out.maximal, system, order);
  out.verification = verify_tot(out.n, out.maximal, system, order);

  // Each non-leaf of the full tree is a tangle leaf of some layer tree.
  for (NodeId v : l.full.non_leaves()) {
    OrientedSet beta = l.full.beta_path(v);
    bool found = false;
    for (std::size_t i = 0; i < l.layers.size() && !found; ++i) {
      const SeparationTree& layer = l.layers[i];
      const SeparationSystem& li = l.tangles.levels[i].system;
      NodeId x = layer.root();
      bool follows = true;
      for (std::size_t d = 0; d < l.full.depth(v) && follows; ++d) {
        NodeId next = kNoNode;
        for (NodeId c : layer.children(x))
          if (beta.contains(layer.label(c))) next = c;
        if (next == kNoNode) follows = false;
        else x = next;
      }
      if (!follows || !layer.is_leaf(x) || layer.beta_path(x) != beta) continue;
      found = tangle_leaf_classifier(li, family)(beta).kind == LeafKind::kTangle;
    }
    out.non_leaves_are_layer_tangle_leaves =
        out.non_leaves_are_layer_tangle_leaves && found;
  }
  return out;
}

}  // namespace tanglekit
