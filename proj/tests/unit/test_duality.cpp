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


#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "support.hpp"
#include "tanglekit/duality.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/tst.hpp"

namespace {

using namespace tktest;

const Case& case_named(const std::string& name) {
  static const std::vector<Case> suite = fixture_suite();
  for (const Case& c : suite)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kPrecondition;
}

std::vector<std::uint32_t> identity_masks(std::size_t n) {
  std::vector<std::uint32_t> m(std::size_t{1} << n);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint32_t>(i);
  return m;
}

// Bipartitions of {1,2,3} with cut weights w12 = 0, w13 = 1, w23 = 2.
struct Tri {
  Universe u = bipartition_universe(3);
  OrderFunction o = cut_order(u.system(), identity_masks(3),
                              {{0, 0, 1}, {0, 0, 2}, {1, 2, 0}});
};

// The separation r of chain() alone, split at the root.
SeparationTree single_split() {
  SeparationTree t;
  t.add_child(t.root(), 0);
  t.add_child(t.root(), 1);
  return t;
}

TEST(Exclusion, SingleNodeOverEmptyMember) {
  SeparationSystem c = chain();
  ForbiddenFamily f;
  f.add({});
  ExclusionReport r = stree_excludes_tangles(c, STree(1), f);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.orientations, naive_orientations(c).size());
}

TEST(Exclusion, NotOverFamilyThrows) {
  SeparationSystem c = chain();
  ForbiddenFamily f;
  f.add({0});
  EXPECT_EQ(kind_of([&] { stree_excludes_tangles(c, STree(1), f); }),
            ErrorKind::kPrecondition);
}

TEST(Exclusion, SingleEdgeCoversChain) {
  SeparationSystem c = chain();
  STree t(2);
  t.add_edge(0, 1, 0);
  ForbiddenFamily f;
  f.add({0});
  f.add({1});
  ExclusionReport r = stree_excludes_tangles(c, t, f);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.counterexample.empty());
}

TEST(ConvertFtree, SingleNonLeafGivesOneEdge) {
  SeparationSystem one = chain().restrict({0, 1});
  ForbiddenFamily f;
  f.add({0});
  f.add({1});
  Conversion conv = convert_ftree(one, single_split(), f);
  ASSERT_EQ(conv.tree.num_nodes(), 2u);
  ASSERT_EQ(conv.tree.num_edges(), 1u);
  for (std::uint32_t t = 0; t < 2; ++t) EXPECT_EQ(conv.tree.star(one, t).size(), 1u);
  EXPECT_TRUE(check_conversion(one, single_split(), f, conv).ok());
  EXPECT_TRUE(is_over(one, conv.tree, f));
}

TEST(ConvertFtree, RejectsTrivialElements) {
  SeparationSystem s = p_triv();
  ForbiddenFamily f;
  f.add({0});
  f.add({1});
  EXPECT_EQ(kind_of([&] { convert_ftree(s, single_split(), f); }),
            ErrorKind::kTrivialElementsPresent);
}

TEST(ConvertFtree, RejectsReducibleTree) {
  SeparationSystem s = case_named("antichain").system;
  ForbiddenFamily f;
  f.add({0});
  f.add({1});
  SeparationTree tree;
  NodeId a = tree.add_child(tree.root(), 2), b = tree.add_child(tree.root(), 3);
  for (NodeId v : {a, b}) {
    tree.add_child(v, 0);
    tree.add_child(v, 1);
  }
  EXPECT_EQ(kind_of([&] { convert_ftree(s, tree, f); }),
            ErrorKind::kNotIrreducible);
  NestedCheck n = check_nested_corollary(s, tree, f);
  EXPECT_FALSE(n.irreducible);
  EXPECT_TRUE(n.holds());
}

TEST(ConvertFtree, RejectsNonStarFamily) {
  SeparationSystem c = chain();
  OrientedSet non_star;
  for (Oriented x = 0; x < 4 && non_star.empty(); ++x)
    for (Oriented y = x + 1; y < 4; ++y)
      if (c.sep(x) != c.sep(y) && !naive_star(c, {x, y})) {
        non_star = {x, y};
        break;
      }
  ASSERT_FALSE(non_star.empty());
  ForbiddenFamily f;
  f.add(non_star);
  EXPECT_EQ(kind_of([&] { convert_ftree(c, single_split(), f); }),
            ErrorKind::kNonStarFamily);
}

TEST(TrivialPatch, UnchangedWithoutTrivialElements) {
  SeparationSystem one = chain().restrict({0, 1});
  ForbiddenFamily f;
  f.add({0});
  f.add({1});
  Conversion conv = convert_ftree(one, single_split(), f);
  EXPECT_EQ(trivial_patch(one, conv.tree, f), conv.tree);
}

// Over the suite, every patch keeps the converted edges, adds only leaves
// labelled by trivial elements, and lands over F.
TEST(TrivialPatch, AddsTrivialLeavesOverSuite) {
  std::size_t patched = 0;
  for (const Case& c : fixture_suite()) {
    const OrientedSet trivial = classify(c.system).trivial;
    if (trivial.empty()) continue;
    std::vector<ForbiddenFamily> families = c.extra;
    families.push_back(c.stars);
    for (const ForbiddenFamily& f : families) {
      DichotomyOptions d;
      d.trivial = TrivialPolicy::kPatch;
      DichotomyResult r;
      try {
        r = dichotomy(c.system, c.order, f, d);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::kNotRich) continue;
        throw;
      }
      if (r.has_tangle()) continue;
      ASSERT_TRUE(r.stree && r.conversion) << c.name;
      const STree& before = r.conversion->tree;
      const STree& after = *r.stree;
      EXPECT_TRUE(after.is_tree()) << c.name;
      EXPECT_TRUE(is_over(c.system, after, f)) << c.name;
      ASSERT_GE(after.num_edges(), before.num_edges());
      for (std::size_t e = 0; e < before.num_edges(); ++e) {
        EXPECT_EQ(after.edges()[e].a, before.edges()[e].a);
        EXPECT_EQ(after.edges()[e].b, before.edges()[e].b);
        EXPECT_EQ(after.edges()[e].alpha, before.edges()[e].alpha);
      }
      for (std::size_t e = before.num_edges(); e < after.num_edges(); ++e) {
        EXPECT_GE(after.edges()[e].a, before.num_nodes());
        EXPECT_TRUE(trivial.contains(after.edges()[e].alpha)) << c.name;
      }
      if (after.num_nodes() > before.num_nodes()) ++patched;
    }
  }
  EXPECT_GT(patched, 0u);
}

TEST(NestedCorollary, HoldsOnReducedTrees) {
  const Case& c = case_named("antichain-forbidden");
  DichotomyResult r = dichotomy(c.system, c.order, c.stars);
  ASSERT_TRUE(r.reduction);
  NestedCheck n = check_nested_corollary(c.system, r.reduction->tree, c.stars);
  EXPECT_TRUE(n.irreducible);
  EXPECT_TRUE(n.nested);
  EXPECT_TRUE(n.crossing.empty());
}

TEST(StreeFromNested, OneSeparationIsOneEdge) {
  SeparationSystem one = chain().restrict({0, 1});
  STree t = stree_from_nested(one);
  EXPECT_EQ(t.num_nodes(), 2u);
  EXPECT_EQ(t.num_edges(), 1u);
  EXPECT_TRUE(preserves_order(one, t));
}

TEST(StreeFromNested, ChainIsPath) {
  SeparationSystem c = chain();
  STree t = stree_from_nested(c);
  ASSERT_EQ(t.num_nodes(), 3u);
  ASSERT_EQ(t.num_edges(), 2u);
  EXPECT_TRUE(t.is_tree());
  std::vector<int> degree(3, 0);
  for (const STreeEdge& e : t.edges()) ++degree[e.a], ++degree[e.b];
  std::sort(degree.begin(), degree.end());
  EXPECT_EQ(degree, (std::vector<int>{1, 1, 2}));
  EXPECT_TRUE(preserves_order(c, t));
  EXPECT_TRUE(injective_on_stars(c, t));
  OrientedSet image;
  for (OrientedEdge e = 0; e < 2 * t.num_edges(); ++e) image.insert(t.alpha(c, e));
  EXPECT_EQ(image, c.members());
}

TEST(StreeFromNested, CrossingSystemThrows) {
  Universe u = bipartition_universe(4);
  SeparationSystem s =
      u.system().restrict({0b0011, 0b1100, 0b0101, 0b1010});
  EXPECT_THROW(stree_from_nested(s), Error);
}

TEST(ShiftMap, CasesOnTriangleBipartitions) {
  Tri t;
  // r = {2} <= s = {1,2}; with the first side as handle, x <= s is x within s.
  const Oriented r = 0b010, s = 0b011;
  EXPECT_EQ(shift_map(t.u, r, s, s), r);
  for (Oriented x = 0; x < 8; ++x) {
    Oriented y = shift_map(t.u, r, s, x);
    EXPECT_TRUE(t.u.system().contains(y));
  }
  EXPECT_EQ(shift_set(t.u, r, s, {s}), (OrientedSet{r}));
}

TEST(Emulates, RoundTripAndPlantedFailure) {
  Tri t;
  EXPECT_TRUE(emulates(t.u, t.u.system(), 0b010, 0b011));
  // Drop the join of r with an element below s.
  Universe u4 = bipartition_universe(4);
  const SeparationSystem& full = u4.system();
  Oriented witness = kNoOriented;
  bool found = false;
  for (Oriented r = 1; r < 15 && !found; ++r)
    for (Oriented s = 1; s < 15 && !found; ++s) {
      if (!full.lt(r, s)) continue;
      for (Oriented x = 1; x < 15 && !found; ++x) {
        if (x == full.inv(s) || !full.leq(x, s)) continue;
        Oriented y = shift_map(u4, r, s, x);
        if (y == r || y == s || y == x || full.sep(y) == full.sep(r) ||
            full.sep(y) == full.sep(s) || full.sep(y) == full.sep(x))
          continue;
        SeparationSystem sub = full.restrict(
            full.both(full.sep(r)) | full.both(full.sep(s)) |
            full.both(full.sep(x)));
        EXPECT_FALSE(emulates(u4, sub, r, s, &witness));
        EXPECT_NE(witness, kNoOriented);
        EXPECT_FALSE(sub.contains(shift_map(u4, r, s, witness)));
        found = true;
      }
    }
  EXPECT_TRUE(found);
}

TEST(ShiftSelect, UniqueCandidate) {
  Tri t;
  OrientedSet tau{2, 3, 6, 7};
  ASSERT_TRUE(naive_consistent(t.u.system(), tau));
  ShiftSelection sel = lemma_shift_select(t.u, t.o, t.u.system(), tau, {3}, 3);
  EXPECT_EQ(sel.r, 2u);
  EXPECT_EQ(sel.candidates, (std::vector<Oriented>{2}));
  EXPECT_EQ(sel.shifted, (OrientedSet{2}));
  ShiftSelection pair =
      lemma_shift_select(t.u, t.o, t.u.system(), tau, {3, 6}, 3);
  EXPECT_EQ(pair.shifted, (OrientedSet{2, 7}));
}

TEST(ShiftSelect, TieUnderNonInjectiveOrder) {
  Universe u = bipartition_universe(4);
  // Cut weights w01 = w02 = 1: {2,4} and {3,4} tie below {2,3,4}.
  OrderFunction o = cut_order(u.system(), identity_masks(4),
                              {{0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}});
  OrientedSet tau{6, 7, 10, 11, 12, 13, 14, 15};
  ASSERT_TRUE(naive_consistent(u.system(), tau));
  try {
    lemma_shift_select(u, o, u.system(), tau, {14}, 14);
    FAIL() << "tie not reported";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAmbiguity);
    ASSERT_EQ(e.witnesses().size(), 1u);
    EXPECT_EQ(e.witnesses()[0], (OrientedSet{10, 12}));
  }
}

TEST(ShiftSelect, RejectsTrivialS) {
  Tri t;
  OrientedSet tau{2, 3, 6, 7};
  EXPECT_EQ(kind_of([&] {
              lemma_shift_select(t.u, t.o, t.u.system(), tau, {7}, 7);
            }),
            ErrorKind::kPrecondition);
}

TEST(ClosedUnderShifting, AllSmallStars) {
  Tri t;
  ForbiddenFamily f;
  for (const OrientedSet& sigma : small_stars(t.u.system())) f.add(sigma);
  EXPECT_TRUE(closed_under_shifting(f, t.u, t.u.system(), t.o));
}

TEST(ClosedUnderShifting, PlantedViolation) {
  Tri t;
  ForbiddenFamily f;
  f.add({3});
  EclipseWitness w;
  EXPECT_FALSE(closed_under_shifting(f, t.u, t.u.system(), t.o, &w));
  EXPECT_EQ(w.sigma, (OrientedSet{3}));
  EXPECT_TRUE(w.tau.contains(w.r));
  EXPECT_FALSE(f.contains(shift_set(t.u, w.r, w.s, w.sigma)));
}

TEST(ClosedUnderShifting, RejectsNonStars) {
  Tri t;
  const SeparationSystem& s = t.u.system();
  ForbiddenFamily f;
  for (Oriented x : s.members())
    for (Oriented y : s.members())
      if (s.sep(x) != s.sep(y) && !naive_star(s, {x, y})) f.add({x, y});
  ASSERT_FALSE(f.empty());
  EXPECT_EQ(kind_of([&] { closed_under_shifting(f, t.u, s, t.o); }),
            ErrorKind::kNonStarFamily);
}

TEST(Dichotomy, EmptyFamilyGivesTangleBranch) {
  const Case& c = case_named("chain");
  DichotomyResult r = dichotomy(c.system, c.order, ForbiddenFamily{});
  ASSERT_TRUE(r.has_tangle());
  EXPECT_FALSE(r.stree);
  EXPECT_EQ(sorted_sets(r.tangles), naive_tangles(c.system, ForbiddenFamily{}));
}

TEST(Dichotomy, TanglelessGivesStree) {
  const Case& c = case_named("antichain-forbidden");
  ASSERT_TRUE(naive_tangles(c.system, c.stars).empty());
  DichotomyOptions d;
  d.check_exclusive = true;
  DichotomyResult r = dichotomy(c.system, c.order, c.stars, d);
  EXPECT_FALSE(r.has_tangle());
  ASSERT_TRUE(r.stree);
  EXPECT_TRUE(r.stars);
  EXPECT_TRUE(is_over(c.system, *r.stree, c.stars));
  ASSERT_TRUE(r.exclusion);
  EXPECT_TRUE(r.exclusion->ok);
}

TEST(Dichotomy, RejectsTrivialByDefault) {
  const Case& c = case_named("P-TRIV");
  EXPECT_EQ(kind_of([&] { dichotomy(c.system, c.order, c.stars); }),
            ErrorKind::kTrivialElementsPresent);
}

TEST(Dichotomy, DropRemovesTrivialElements) {
  const Case& c = case_named("P-TRIV");
  DichotomyOptions d;
  d.trivial = TrivialPolicy::kDrop;
  DichotomyResult r = dichotomy(c.system, c.order, c.stars, d);
  EXPECT_TRUE(classify(r.system).trivial.empty());
  EXPECT_LT(r.system.size(), c.system.size());
}

struct P3Universe {
  GraphFixture g = graph_fixture("a b\nb c\n");
  ForbiddenFamily stars =
      graph_tangle_stars(g.gu, g.graph, g.gu.universe.system());
};

TEST(NewDuality, LowThresholdGivesEmptyTangle) {
  P3Universe p;
  Rational least = p.g.refined.of(p.g.gu.universe.system().members().front());
  for (Oriented x : p.g.gu.universe.system().members())
    least = std::min(least, p.g.refined.of(x));
  NewDualityResult r = newduality(p.g.gu.universe, p.g.refined, least, p.stars);
  EXPECT_EQ(r.system.size(), 0u);
  ASSERT_EQ(r.result.tangles.size(), 1u);
  EXPECT_TRUE(r.result.tangles[0].empty());
}

TEST(NewDuality, P3LevelTwoMatchesBruteForce) {
  P3Universe p;
  SeparationSystem s =
      restrict_Sk(p.g.gu.universe.system(), p.g.refined, Rational(2));
  ForbiddenFamily f = standardize(p.stars, s);
  EXPECT_EQ(kind_of([&] {
              newduality(p.g.gu.universe, p.g.refined, Rational(2), f);
            }),
            ErrorKind::kTrivialElementsPresent);
  for (TrivialPolicy policy : {TrivialPolicy::kPatch, TrivialPolicy::kDrop}) {
    NewDualityOptions o;
    o.trivial = policy;
    o.cross_check_rich = true;
    o.check_exclusive = true;
    NewDualityResult r =
        newduality(p.g.gu.universe, p.g.refined, Rational(2), f, o);
    EXPECT_TRUE(r.closed);
    ASSERT_TRUE(r.rich_brute_force);
    EXPECT_EQ(*r.rich_brute_force, r.closed);
    std::vector<OrientedSet> brute =
        naive_tangles(r.result.system, f.restricted_to(r.result.system));
    EXPECT_EQ(sorted_sets(r.result.tangles), brute);
    EXPECT_EQ(r.result.has_tangle(), !brute.empty());
  }
}

TEST(NewDuality, RejectsNonSubmodularOrder) {
  P3Universe p;
  const SeparationSystem& u = p.g.gu.universe.system();
  std::vector<Rational> v;
  for (SepId i = 0; i < u.ambient_separations(); ++i)
    v.push_back(Rational(static_cast<long>((i * 7) % 5)));
  OrderFunction bad(u, v);
  if (is_submodular(p.g.gu.universe, bad) ||
      (bad.injective_on(u) && is_structurally_submodular(p.g.gu.universe, bad)))
    GTEST_SKIP() << "planted order happens to qualify";
  EXPECT_EQ(kind_of([&] {
              newduality(p.g.gu.universe, bad, Rational(2), p.stars);
            }),
            ErrorKind::kPrecondition);
}

}  // namespace
