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

#include "tanglekit/app.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "tanglekit/core.hpp"
#include "tanglekit/dot.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/orderfn.hpp"
#include "tanglekit/rational.hpp"
#include "tanglekit/tot.hpp"
#include "tanglekit/tst.hpp"
#include "tanglekit/universe.hpp"

namespace tanglekit {

using io::Json;

const std::vector<std::string>& commands() {
  static const std::vector<std::string> kCommands = {
      "validate", "tangles", "tst",  "reduce",      "duality",
      "newduality", "tot",   "totins", "refine-order"};
  return kCommands;
}

const std::vector<std::string>& generators() {
  static const std::vector<std::string> kGenerators = {
      "R", "R-full", "profiles", "graph-stars", "standardize"};
  return kGenerators;
}

void check_run_spec(const RunSpec& spec) {
  const auto& cs = commands();
  if (std::find(cs.begin(), cs.end(), spec.command) == cs.end())
    throw Error(ErrorKind::kMalformed, "unknown command '" + spec.command + "'");
  if (spec.bound == 0)
    throw Error(ErrorKind::kMalformed, "bounds must be positive");
  if (spec.bound > kCliBound && !spec.unsafe_bounds)
    throw Error(ErrorKind::kMalformed,
                "bound " + std::to_string(spec.bound) + " exceeds " +
                    std::to_string(kCliBound) +
                    " separations; pass --unsafe-bounds to allow it");
}

namespace {

const OrderFunction& need_order(const io::Input& in) {
  if (!in.order)
    throw Error(ErrorKind::kPrecondition, "this command needs an order function");
  return *in.order;
}

const Universe& need_universe(const io::Input& in) {
  if (!in.universe)
    throw Error(ErrorKind::kPrecondition,
                "this command needs a universe (join and meet tables)");
  return *in.universe;
}

SeparationSystem run_system(const io::Input& in, const RunSpec& spec) {
  if (!spec.k) return in.system;
  return restrict_Sk(in.system, need_order(in), spec.k);
}

Json sets_json(const SeparationSystem& s, const std::vector<OrientedSet>& v) {
  Json out = Json::array();
  for (const OrientedSet& x : v) out.push_back(io::set_to_json(s, x));
  return out;
}

Json seps_json(const SeparationSystem& s, const std::vector<SepId>& v) {
  Json out = Json::array();
  (void)s;
  for (SepId x : v) out.push_back(x);
  return out;
}

Json ids_json(const std::vector<NodeId>& v) {
  Json out = Json::array();
  for (NodeId x : v) out.push_back(x);
  return out;
}

Json threshold_json(const Threshold& k) {
  return k ? Json(to_string(*k)) : Json(nullptr);
}

Json witness_pair(Oriented a, Oriented b) {
  if (a == kNoOriented) return nullptr;
  return Json::array({a, b});
}

struct Outcome {
  Json result;
  std::optional<std::string> dot;
  int exit_code = 0;
  std::string diagnostic;
};

// ---- validate ----

Outcome cmd_validate(const io::Input& in, const SeparationSystem& S,
                     const ForbiddenFamily& F, const RunSpec& spec) {
  Outcome o;
  Json& r = o.result;
  r["oriented"] = S.size();
  r["separations"] = S.num_separations();
  Classification c = classify(S);
  r["classification"] = {{"small", io::set_to_json(S, c.small)},
                         {"trivial", io::set_to_json(S, c.trivial)},
                         {"co_trivial", io::set_to_json(S, c.co_trivial)},
                         {"degenerate", io::set_to_json(S, c.degenerate)},
                         {"regular", c.regular}};
  if (in.universe) {
    LatticeReport lr = validate_lattice(*in.universe);
    Json w = Json::array();
    for (Oriented a : lr.witness) w.push_back(a);
    r["lattice"] = {{"ok", lr.ok}, {"axiom", lr.axiom}, {"witness", w}};
    if (!lr.ok) {
      o.exit_code = 1;
      o.diagnostic = "lattice axiom fails: " + lr.axiom;
    }
  }
  if (in.order) {
    std::pair<SepId, SepId> clash{0, 0};
    bool inj = in.order->injective_on(S, &clash);
    Json ord = {{"injective", inj}};
    if (!inj) ord["collision"] = seps_json(S, {clash.first, clash.second});
    if (in.universe && o.exit_code == 0) {
      SubmodularityWitness w;
      bool sub = is_submodular(*in.universe, *in.order, &w);
      ord["submodular"] = sub;
      if (!sub) ord["submodular_witness"] = witness_pair(w.r, w.s);
      SubmodularityWitness w2;
      bool ssub = is_structurally_submodular(*in.universe, *in.order, &w2);
      ord["structurally_submodular"] = ssub;
      if (!ssub) ord["structural_witness"] = witness_pair(w2.r, w2.s);
    }
    r["order"] = std::move(ord);
  }
  Json fam = {{"size", F.size()}};
  std::size_t bad = 0;
  bool stars = all_stars(F, S, &bad);
  fam["stars"] = stars;
  if (!stars) fam["non_star"] = io::set_to_json(S, F.members()[bad]);
  OrientedSet missing;
  bool standard = is_standard(F, S, &missing);
  fam["standard"] = standard;
  if (!standard) fam["missing"] = io::set_to_json(S, missing);
  if (in.order && S.num_separations() <= spec.bound) {
    OrientedSet counter;
    bool rich = is_rich(F, S, *in.order, &counter, spec.bound);
    fam["rich"] = rich;
    if (!rich) fam["counterexample"] = io::set_to_json(S, counter);
  }
  r["family"] = std::move(fam);
  return o;
}

// ---- tangles ----

Outcome cmd_tangles(const io::Input& in, const SeparationSystem& S,
                    const ForbiddenFamily& F, const RunSpec& spec) {
  Outcome o;
  std::vector<OrientedSet> ts = enumerate_tangles(S, F, spec.bound);
  o.result["count"] = ts.size();
  o.result["tangles"] = sets_json(S, ts);
  if (spec.in_s) {
    TanglesIn t = enumerate_tangles_in(S, F, need_order(in), spec.bound);
    Json levels = Json::array();
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
      std::vector<OrientedSet> here;
      for (const Tangle& x : t.tangles)
        if (x.level == i) here.push_back(x.orientation);
      levels.push_back({{"k", threshold_json(t.levels[i].k)},
                        {"separations", t.levels[i].system.num_separations()},
                        {"tangles", sets_json(S, here)}});
    }
    std::vector<OrientedSet> maximal;
    for (const Tangle& x : t.maximal) maximal.push_back(x.orientation);
    o.result["levels"] = std::move(levels);
    o.result["maximal"] = sets_json(S, maximal);
  }
  return o;
}

// ---- tst / reduce ----

Json tree_flags(const SeparationSystem& S, const OrderFunction& ord,
                const SeparationTree& t) {
  NodeId w = kNoNode;
  Json out;
  out["ordered"] = is_ordered(S, ord, t, &w);
  out["thoroughly_ordered"] = is_thoroughly_ordered(S, ord, t, &w);
  out["efficient"] = is_efficient_tree(S, ord, t, &w);
  return out;
}

Json report_json(const TstReport& rep) {
  Json out = {{"ok", rep.ok}, {"failure", rep.failure}};
  out["node"] = rep.node == kNoNode ? Json(nullptr) : Json(rep.node);
  return out;
}

Outcome cmd_tst(const io::Input& in, const SeparationSystem& S,
                const ForbiddenFamily& F, const RunSpec& spec) {
  Outcome o;
  const OrderFunction& ord = need_order(in);
  SeparationTree t = build_thorough_tst(S, ord, F, spec.bound);
  TstReport rep = validate_tst(S, t, F);
  o.result["tree"] = io::tree_to_json(S, t, &rep.leaf_class);
  o.result["report"] = report_json(rep);
  o.result["flags"] = tree_flags(S, ord, t);
  o.result["ftree"] = is_ftree(rep);
  o.result["tangles"] = sets_json(S, displayed_tangles(S, t, rep.leaf_class));
  if (spec.dot) o.dot = emit_dot(S, t, &rep.leaf_class);
  if (!rep.ok) {
    o.exit_code = 3;
    o.diagnostic = "thorough tree is not a tangle structure tree: " + rep.failure;
  }
  return o;
}

Outcome cmd_reduce(const io::Input& in, const SeparationSystem& S,
                   const ForbiddenFamily& F, const RunSpec& spec) {
  Outcome o;
  const OrderFunction& ord = need_order(in);
  SeparationTree t = build_thorough_tst(S, ord, F, spec.bound);
  TstReport rep = validate_tst(S, t, F);
  if (!rep.ok)
    throw Error(ErrorKind::kTheoremViolation,
                "thorough tree is not a tangle structure tree: " + rep.failure);
  Reduction red = reduce_irreducible(S, ord, t, F);
  TstReport rrep = validate_tst(S, red.tree, F);
  Json steps = Json::array();
  for (const ReductionStep& st : red.steps)
    steps.push_back({{"v", st.v}, {"w", st.w}});
  o.result["thorough"] = io::tree_to_json(S, t, &rep.leaf_class);
  o.result["tree"] = io::tree_to_json(S, red.tree, &rrep.leaf_class);
  o.result["steps"] = std::move(steps);
  o.result["report"] = report_json(rrep);
  o.result["irreducible"] = is_irreducible(necessity(S, red.tree, F));
  o.result["flags"] = tree_flags(S, ord, red.tree);
  if (spec.dot) o.dot = emit_dot(S, red.tree, &rrep.leaf_class);
  return o;
}

// ---- duality / newduality ----

Json dichotomy_json(const DichotomyResult& r, const ForbiddenFamily& F,
                    std::optional<std::string>* dot, bool want_dot) {
  const SeparationSystem& S = r.system;
  Json out;
  out["outcome"] = r.has_tangle() ? "tangle" : "no-tangle";
  out["refined"] = r.refined;
  if (r.refined) out["order"] = io::order_to_json(S, r.order);
  out["separations"] = S.num_separations();
  out["tangles"] = sets_json(S, r.tangles);
  TstReport rep = validate_tst(S, r.thorough, F);
  out["thorough"] = io::tree_to_json(S, r.thorough, &rep.leaf_class);
  out["stars"] = r.stars;
  if (r.reduction) {
    TstReport frep = validate_tst(S, r.reduction->tree, F);
    out["ftree"] = io::tree_to_json(S, r.reduction->tree, &frep.leaf_class);
    if (want_dot) *dot = emit_dot(S, r.reduction->tree, &frep.leaf_class);
  } else if (want_dot) {
    *dot = emit_dot(S, r.thorough, &rep.leaf_class);
  }
  if (r.conversion) {
    const ConversionMap& g = r.conversion->gamma;
    out["conversion"] = {{"node_leaf", ids_json(g.node_leaf)},
                         {"edge_child", ids_json(g.edge_child)},
                         {"edge_node", ids_json(g.edge_node)}};
  }
  if (r.stree) {
    out["stree"] = io::stree_to_json(S, *r.stree);
    out["stree_over_F"] = is_over(S, *r.stree, F);
    out["stree_over_F_eff"] = is_over(S, *r.stree, f_eff(F, S, r.order).family);
    if (want_dot) *dot = emit_dot(S, *r.stree);
  }
  if (r.exclusion) {
    out["exclusion"] = {{"ok", r.exclusion->ok},
                        {"orientations", r.exclusion->orientations},
                        {"counterexample",
                         io::set_to_json(S, r.exclusion->counterexample)}};
  }
  bool certificate = r.stars ? r.stree.has_value() : r.reduction.has_value();
  out["exactly_one"] = r.has_tangle() != certificate;
  return out;
}

Outcome cmd_duality(const io::Input& in, const SeparationSystem& S,
                    const ForbiddenFamily& F, const RunSpec& spec) {
  Outcome o;
  DichotomyOptions opts;
  opts.check_exclusive = spec.check_exclusive;
  opts.trust_rich = spec.trust_rich;
  opts.trivial = spec.trivial;
  opts.universe = in.universe ? &*in.universe : nullptr;
  opts.bound = spec.bound;
  DichotomyResult r = dichotomy(S, need_order(in), F, opts);
  ForbiddenFamily Fr = F.restricted_to(r.system);
  o.result = dichotomy_json(r, Fr, &o.dot, spec.dot);
  if (r.exclusion && !r.exclusion->ok) {
    o.exit_code = 3;
    o.diagnostic = "the S-tree does not exclude every orientation";
  }
  return o;
}

Outcome cmd_newduality(const io::Input& in, const ForbiddenFamily& F,
                       const RunSpec& spec) {
  Outcome o;
  NewDualityOptions opts;
  opts.check_exclusive = spec.check_exclusive;
  opts.cross_check_rich = spec.cross_check_rich;
  opts.trivial = spec.trivial;
  opts.bound = spec.bound;
  NewDualityResult r =
      newduality(need_universe(in), need_order(in), spec.k, F, opts);
  o.result = dichotomy_json(r.result, F.restricted_to(r.result.system), &o.dot,
                            spec.dot);
  o.result["closed_under_shifting"] = r.closed;
  o.result["order_refined"] = r.refined;
  o.result["shift_order"] = io::order_to_json(r.system, r.order);
  if (r.rich_brute_force) o.result["rich_brute_force"] = *r.rich_brute_force;
  if (r.result.exclusion && !r.result.exclusion->ok) {
    o.exit_code = 3;
    o.diagnostic = "the S-tree does not exclude every orientation";
  }
  return o;
}

// ---- tot / totins ----

Json oracle_json(const SeparationSystem& S, const DistinguisherReport& d) {
  Json out = Json::array();
  for (const DistinguisherPair& p : d.pairs) {
    out.push_back({{"pair", Json::array({p.i, p.j})},
                   {"least", p.least ? Json(to_string(*p.least)) : Json(nullptr)},
                   {"optimal", seps_json(S, p.optimal)}});
  }
  return out;
}

Json verification_json(const SeparationSystem& S, const TotReport& v) {
  Json crossing = Json::array();
  for (auto [a, b] : v.crossing) crossing.push_back(witness_pair(a, b));
  Json out = {{"ok", v.ok},
              {"nested", v.nested},
              {"crossing", crossing},
              {"distinguishes_all", v.distinguishes_all},
              {"equals_oracle", v.equals_oracle},
              {"missing", seps_json(S, v.missing)},
              {"extra", seps_json(S, v.extra)},
              {"failure", v.failure}};
  if (!v.distinguishes_all)
    out["undistinguished"] =
        Json::array({v.undistinguished.first, v.undistinguished.second});
  return out;
}

std::vector<bool> flags_of(std::size_t n, const std::vector<NodeId>& nodes) {
  std::vector<bool> out(n, false);
  for (NodeId v : nodes) out[v] = true;
  return out;
}

Outcome cmd_tot(const io::Input& in, const ForbiddenFamily& F,
                const RunSpec& spec) {
  Outcome o;
  const Universe& U = need_universe(in);
  const OrderFunction& ord = need_order(in);
  SeparationSystem S = restrict_Sk(U.system(), ord, spec.k);
  TotOptions opts{spec.trust_rich, spec.bound};
  TreeOfTangles t = tree_of_tangles(U, ord, S, F.restricted_to(S), opts);
  o.result["tree"] = io::tree_to_json(S, t.tree, &t.report.leaf_class);
  o.result["tangle_nodes"] = ids_json(t.nodes);
  o.result["n"] = seps_json(S, t.n);
  o.result["tangles"] = sets_json(S, t.tangles);
  o.result["oracle"] = oracle_json(S, t.oracle);
  o.result["verification"] = verification_json(S, t.verification);
  o.result["critical_tangle_nodes"] = ids_json(t.critical_tangle_nodes);
  o.result["infimum_check"] = t.infimum_check;
  if (spec.dot) {
    std::vector<bool> overlay = flags_of(t.tree.size(), t.nodes);
    o.dot = emit_dot(S, t.tree, &t.report.leaf_class, &overlay);
  }
  if (!t.verification.ok || !t.infimum_check ||
      !t.critical_tangle_nodes.empty()) {
    o.exit_code = 3;
    o.diagnostic = !t.verification.ok ? t.verification.failure
                   : !t.infimum_check ? "an infimum node is not an optimal distinguisher"
                                      : "a tangle node is critical";
  }
  return o;
}

Outcome cmd_totins(const io::Input& in, const ForbiddenFamily& F,
                   const RunSpec& spec) {
  Outcome o;
  const Universe& U = need_universe(in);
  const OrderFunction& ord = need_order(in);
  const SeparationSystem& S = U.system();
  TotOptions opts{spec.trust_rich, spec.bound};
  LayeredTreeOfTangles t = tree_of_tangles_in(U, ord, F.restricted_to(S), opts);
  const LayeredTst& l = t.layered;
  o.result["tree"] = io::tree_to_json(S, l.tree, &l.report.leaf_class);
  o.result["full"] = io::tree_to_json(S, l.full, &l.full_report.leaf_class);
  o.result["full_id"] = ids_json(l.full_id);
  o.result["bare_root"] = l.bare_root;
  o.result["layers_nested"] = l.layers_nested;
  Json layers = Json::array();
  for (std::size_t i = 0; i < l.layers.size(); ++i)
    layers.push_back({{"k", threshold_json(l.tangles.levels[i].k)},
                      {"tree", io::tree_to_json(S, l.layers[i])}});
  o.result["layers"] = std::move(layers);
  o.result["nodes"] = ids_json(t.nodes);
  o.result["n"] = seps_json(S, t.n);
  o.result["maximal"] = sets_json(S, t.maximal);
  o.result["oracle"] = oracle_json(S, t.oracle);
  o.result["verification"] = verification_json(S, t.verification);
  o.result["v_is_tangle_nodes"] = t.v_is_tangle_nodes;
  o.result["non_leaves_are_layer_tangle_leaves"] =
      t.non_leaves_are_layer_tangle_leaves;
  if (spec.dot) {
    std::vector<bool> overlay = flags_of(l.tree.size(), t.nodes);
    o.dot = emit_dot(S, l.tree, &l.report.leaf_class, &overlay);
  }
  if (!t.verification.ok || !l.layers_nested || !t.v_is_tangle_nodes ||
      !t.non_leaves_are_layer_tangle_leaves) {
    o.exit_code = 3;
    o.diagnostic = !t.verification.ok ? t.verification.failure
                   : !l.layers_nested ? "layer trees are not nested"
                                      : "tangle nodes do not match the layers";
  }
  return o;
}

// ---- refine-order ----

Outcome cmd_refine(const io::Input& in, const RunSpec& spec) {
  (void)spec;
  Outcome o;
  const Universe& U = need_universe(in);
  const OrderFunction& ord = need_order(in);
  const SeparationSystem& S = U.system();
  Refinement r = refine_injective(U, ord);
  std::pair<SepId, SepId> w{0, 0};
  Json gammas = Json::array();
  for (SepId s = 0; s < r.gamma.size(); ++s)
    gammas.push_back(Json::array({S.orientations(s)[0], r.gamma[s].get_str()}));
  o.result["injective"] = {
      {"schema", io::kOrderSchema},
      {"values", io::order_to_json(S, r.order)},
      {"epsilon", to_string(r.epsilon)},
      {"scale", to_string(r.scale)},
      {"gamma", std::move(gammas)},
      {"is_injective", r.order.injective_on(S, &w)},
      {"is_submodular", is_submodular(U, r.order)},
      {"refines_input", refines(S, r.order, ord, &w)}};
  OrderFunction e = enumeration_refinement(U, ord);
  o.result["enumeration"] = {
      {"schema", io::kOrderSchema},
      {"values", io::order_to_json(S, e)},
      {"is_injective", e.injective_on(S, &w)},
      {"is_structurally_submodular", is_structurally_submodular(U, e)},
      {"refines_input", refines(S, e, ord, &w)}};
  return o;
}

Outcome dispatch(const io::Input& in, const RunSpec& spec,
                 const io::FamilySpec& fs, SeparationSystem* used) {
  const std::string& c = spec.command;
  if (c == "refine-order") {
    *used = in.universe ? in.universe->system() : in.system;
    return cmd_refine(in, spec);
  }
  if (c == "tot" || c == "newduality") {
    const Universe& U = need_universe(in);
    SeparationSystem S = restrict_Sk(U.system(), need_order(in), spec.k);
    *used = S;
    ForbiddenFamily F = build_family(in, S, fs, spec.generate);
    return c == "tot" ? cmd_tot(in, F, spec) : cmd_newduality(in, F, spec);
  }
  if (c == "totins") {
    const Universe& U = need_universe(in);
    if (spec.k)
      throw Error(ErrorKind::kMalformed, "totins works on the whole universe; drop --k");
    *used = U.system();
    return cmd_totins(in, build_family(in, U.system(), fs, spec.generate), spec);
  }
  SeparationSystem S = run_system(in, spec);
  *used = S;
  ForbiddenFamily F = build_family(in, S, fs, spec.generate);
  if (c == "validate") return cmd_validate(in, S, F, spec);
  if (c == "tangles") return cmd_tangles(in, S, F, spec);
  if (c == "tst") return cmd_tst(in, S, F, spec);
  if (c == "reduce") return cmd_reduce(in, S, F, spec);
  return cmd_duality(in, S, F, spec);
}

Json envelope(const RunSpec& spec) {
  Json out;
  out["schema"] = io::kResultSchema;
  out["command"] = spec.command;
  out["k"] = threshold_json(spec.k);
  out["bound"] = spec.bound;
  return out;
}

Artifacts failure(const RunSpec& spec, const Error& e,
                  const SeparationSystem* system) {
  Artifacts a;
  a.exit_code = exit_code_for(e.kind());
  Json out = envelope(spec);
  out["exit_code"] = a.exit_code;
  out["error"] = io::error_to_json(e, system);
  a.json = out.dump(2) + "\n";
  return a;
}

}  // namespace

ForbiddenFamily build_family(const io::Input& input,
                             const SeparationSystem& system,
                             const io::FamilySpec& spec,
                             const std::vector<std::string>& extra) {
  ForbiddenFamily out = spec.family.restricted_to(system);
  std::vector<std::string> gens = spec.generate;
  gens.insert(gens.end(), extra.begin(), extra.end());
  bool standard = false;
  for (const std::string& g : gens) {
    if (g == "standardize") {
      standard = true;
    } else if (g == "R" || g == "R-full") {
      out.merge(robustness_family(need_universe(input), need_order(input),
                                  system, g == "R-full"));
    } else if (g == "profiles") {
      out.merge(profile_family(need_universe(input), system));
    } else if (g == "graph-stars") {
      if (!input.graph)
        throw Error(ErrorKind::kPrecondition,
                    "graph-stars needs a graph input");
      GraphUniverse gu{*input.universe, *input.order, input.graph->sides};
      out.merge(graph_tangle_stars(gu, input.graph->graph, system));
    } else {
      throw Error(ErrorKind::kMalformed, "unknown generator '" + g + "'");
    }
  }
  if (standard) out = standardize(out, system);
  return out;
}

Artifacts run(const io::Input& original, const RunSpec& spec) {
  SeparationSystem used = original.system;
  try {
    check_run_spec(spec);
    io::Input input = original;
    if (spec.refine && spec.command != "refine-order")
      input.order = refine_injective(need_universe(input), need_order(input)).order;
    io::FamilySpec fs;
    if (spec.family) fs = io::parse_family_text(input.system, *spec.family);
    Outcome o = dispatch(input, spec, fs, &used);
    Artifacts a;
    a.exit_code = o.exit_code;
    Json out = envelope(spec);
    out["exit_code"] = o.exit_code;
    out["input"] = io::system_to_json(input);
    out["refine"] = spec.refine;
    out["system"] = io::set_to_json(input.system, used.members());
    out["family"] = io::family_to_json(
        used, build_family(input, used, fs, spec.generate));
    out["result"] = std::move(o.result);
    if (!o.diagnostic.empty()) out["diagnostic"] = o.diagnostic;
    a.json = out.dump(2) + "\n";
    if (spec.dot) a.dot = o.dot ? *o.dot : std::string("digraph empty {\n}\n");
    return a;
  } catch (const Error& e) {
    return failure(spec, e, &used);
  } catch (const std::exception& e) {
    return failure(spec, Error(ErrorKind::kPrecondition, e.what()), &used);
  }
}

Artifacts run(const RunSpec& spec) {
  io::Input input;
  try {
    check_run_spec(spec);
    switch (spec.source) {
      case InputSource::kAuto: input = io::parse_input(spec.input); break;
      case InputSource::kSystem: input = io::parse_system_text(spec.input); break;
      case InputSource::kGraph: input = io::parse_graph(spec.input); break;
      case InputSource::kBipartitions:
        input = io::parse_bipartitions_text(spec.input);
        break;
    }
  } catch (const Error& e) {
    return failure(spec, e, nullptr);
  } catch (const std::exception& e) {
    return failure(spec, Error(ErrorKind::kMalformed, e.what()), nullptr);
  }
  return run(input, spec);
}

}  // namespace tanglekit
