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

#include <set>

#include "support.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/orderfn.hpp"
#include "tanglekit/universe.hpp"

namespace {

using namespace tktest;

TEST(Lattice, BipartitionsPass) {
  for (std::size_t n = 1; n <= 4; ++n) {
    LatticeReport r = validate_lattice(bipartition_universe(n));
    EXPECT_TRUE(r.ok) << n << ": " << r.axiom;
  }
}

TEST(Lattice, PlantedNonCommutativeJoinFails) {
  Universe u = bipartition_universe(2);
  std::vector<Oriented> join = u.join_table(), meet = u.meet_table();
  const std::size_t n = u.size();
  join[1 * n + 2] = 1;  // {1} v {2} := {1}, while {2} v {1} = {1,2}
  Universe bad = Universe::create(u.system(), join, meet);
  LatticeReport r = validate_lattice(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.witness.empty());
}

TEST(Lattice, NestedPairFragmentOfP4) {
  GraphFixture p4 = graph_fixture("a b\nb c\nc d\n");
  Oriented r = by_label(p4.gu.universe.system(), "(a,b|b,c,d)");
  Oriented s = by_label(p4.gu.universe.system(), "(a,b,c|c,d)");
  Universe frag = sub_universe(p4.gu.universe, {r, s});
  EXPECT_TRUE(validate_lattice(frag).ok);
  EXPECT_TRUE(validate_lattice(p4.gu.universe).ok);
}

TEST(Bipartitions, Counts) {
  EXPECT_EQ(bipartition_universe(1).size(), 2u);
  EXPECT_EQ(bipartition_universe(1).system().num_separations(), 1u);
  Universe u = bipartition_universe(3);
  EXPECT_EQ(u.size(), 8u);
  EXPECT_EQ(u.system().num_separations(), 4u);
}

TEST(Bipartitions, EmptySideIsExtremal) {
  // (empty, V) lies on one side of every element.
  Universe u = bipartition_universe(3);
  const SeparationSystem& s = u.system();
  for (Oriented a : s.members()) EXPECT_TRUE(s.leq(0, a));
}

TEST(Graph, OrdersOnP3) {
  GraphFixture p3 = graph_fixture("a b\nb c\n");
  const SeparationSystem& s = p3.gu.universe.system();
  EXPECT_EQ(p3.gu.order.of(by_label(s, "(a,b|b,c)")), 1);
  EXPECT_EQ(p3.gu.order.of(by_label(s, "(a,b,c|a,b,c)")), 3);
  EXPECT_TRUE(is_submodular(p3.gu.universe, p3.gu.order));
  EXPECT_TRUE(naive_submodular(p3.gu.universe, p3.gu.order));
}

TEST(Graph, RestrictSk) {
  GraphFixture p3 = graph_fixture("a b\nb c\n");
  const SeparationSystem& s = p3.gu.universe.system();
  EXPECT_EQ(restrict_Sk(s, p3.gu.order, Rational(0)).size(), 0u);
  EXPECT_EQ(restrict_Sk(s, p3.gu.order, std::nullopt).size(), s.size());
  SeparationSystem s1 = restrict_Sk(s, p3.gu.order, Rational(1));
  for (Oriented a : s1.members()) EXPECT_EQ(p3.gu.order.of(a), 0);
  EXPECT_EQ(s1.num_separations(), 1u);  // only (V | empty)
}

TEST(Graph, ParseErrorsCarryLines) {
  try {
    Graph::parse_edge_list("a b\nb c d\n");
    FAIL() << "accepted a three-vertex line";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMalformed);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Submodular, ImpliesStructural) {
  for (const UniverseCase& c : universe_suite()) {
    ASSERT_TRUE(naive_submodular(c.universe, c.base)) << c.name;
    EXPECT_TRUE(is_structurally_submodular(c.universe, c.base)) << c.name;
    // An order isomorphism keeps structural submodularity.
    std::vector<Rational> cubed = c.base.values();
    for (Rational& v : cubed) v = v * v * v + 1;
    OrderFunction iso(c.universe.system(), cubed);
    EXPECT_TRUE(naive_structurally_submodular(c.universe, iso)) << c.name;
    EXPECT_TRUE(is_structurally_submodular(c.universe, iso)) << c.name;
  }
}

TEST(Submodular, WitnessIsAViolation) {
  Universe u = bipartition_universe(3);
  std::vector<Rational> v(u.system().ambient_separations(), Rational(1));
  v[u.system().sep(1)] = 0;
  v[u.system().sep(2)] = 0;
  OrderFunction o(u.system(), v);
  SubmodularityWitness w;
  ASSERT_FALSE(is_submodular(u, o, &w));
  EXPECT_GT(o.of(u.join(w.r, w.s)) + o.of(u.meet(w.r, w.s)), o.of(w.r) + o.of(w.s));
  EXPECT_FALSE(naive_submodular(u, o));
}

TEST(Corners, EqualAndNested) {
  Universe u = bipartition_universe(4);
  const SeparationSystem& s = u.system();
  for (const Corner& c : corners(u, 0b0011, 0b0011))
    EXPECT_TRUE(c.corner == 0b0011 || c.corner == s.inv(0b0011) || c.corner == 0) << c.corner;
  // Nested r < s: r ^ s = r and r* ^ s* = s*, so at least two corners are
  // r, s or an inverse.
  OrientedSet own{0b0001, 0b1110, 0b0011, 0b1100};
  int hits = 0;
  for (const Corner& c : corners(u, 0b0001, 0b0011)) hits += own.contains(c.corner);
  EXPECT_GE(hits, 2);
}

TEST(Corners, CrossingBipartitionsGiveFourDistinct) {
  Universe u = bipartition_universe(4);
  std::set<Oriented> seen;
  for (const Corner& c : corners(u, 0b0011, 0b0101)) seen.insert(c.corner);
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_EQ(seen, (std::set<Oriented>{0b0001, 0b0010, 0b0100, 0b1000}));
}

TEST(SubUniverse, ClosedUnderOperations) {
  for (int i = 0; i < 30; ++i) {
    RandomFixture f = random_fixture(700 + static_cast<std::uint64_t>(i));
    EXPECT_TRUE(validate_lattice(f.universe).ok) << f.seed;
    EXPECT_LE(f.universe.system().num_separations(), 8u);
  }
}

}  // namespace
