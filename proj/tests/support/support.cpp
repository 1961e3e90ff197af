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

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "tanglekit/orderfn.hpp"

namespace tktest {

bool naive_consistent(const SeparationSystem& s, const OrientedSet& sigma) {
  for (Oriented r : sigma)
    for (Oriented t : sigma)
      if (s.sep(r) != s.sep(t) && s.leq(r, s.inv(t))) return false;
  return true;
}

bool naive_star(const SeparationSystem& s, const OrientedSet& sigma) {
  for (Oriented r : sigma) {
    if (s.inv(r) == r) return false;
    for (Oriented t : sigma)
      if (r != t && !s.leq(s.inv(t), r)) return false;
  }
  return true;
}

bool naive_nested(const SeparationSystem& s, Oriented r, Oriented t) {
  for (Oriented a : {r, s.inv(r)})
    for (Oriented b : {t, s.inv(t)})
      if (s.leq(a, b) || s.leq(b, a)) return true;
  return false;
}

bool naive_avoids(const OrientedSet& tau, const std::vector<OrientedSet>& f) {
  for (const OrientedSet& m : f) {
    bool inside = true;
    for (Oriented a : m) inside = inside && tau.contains(a);
    if (inside) return false;
  }
  return true;
}

OrientedSet naive_closure(const SeparationSystem& s, const OrientedSet& sigma) {
  OrientedSet out = sigma;
  for (Oriented r : sigma)
    for (Oriented t : s.members())
      if (s.sep(r) != s.sep(t) && r != t && s.leq(r, t)) out.insert(t);
  return out;
}

std::vector<OrientedSet> naive_orientations(const SeparationSystem& s) {
  std::vector<SepId> seps = s.separations();
  std::vector<OrientedSet> out;
  const std::size_t m = seps.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    OrientedSet tau;
    bool skip = false;
    for (std::size_t i = 0; i < m; ++i) {
      auto o = s.orientations(seps[i]);
      bool degenerate = o[0] == o[1];
      if (degenerate && (mask >> i & 1u)) skip = true;
      tau.insert((mask >> i & 1u) ? o[1] : o[0]);
    }
    if (!skip) out.push_back(tau);
  }
  return out;
}

std::vector<OrientedSet> naive_tangles(const SeparationSystem& s,
                                       const ForbiddenFamily& f) {
  std::vector<OrientedSet> out;
  for (const OrientedSet& tau : naive_orientations(s))
    if (naive_consistent(s, tau) && naive_avoids(tau, f.members()))
      out.push_back(tau);
  return sorted_sets(out);
}

bool naive_rich(const ForbiddenFamily& f, const SeparationSystem& s,
                const OrderFunction& o) {
  for (const OrientedSet& tau : naive_orientations(s)) {
    if (!naive_consistent(s, tau)) continue;
    bool has = false, strong = false;
    for (const OrientedSet& m : f.members()) {
      if (!m.subset_of(tau)) continue;
      has = true;
      bool ok = true;
      for (Oriented x : m)
        for (Oriented r : tau)
          if (r != x && s.leq(r, x) && o.of(r) <= o.of(x)) ok = false;
      strong = strong || ok;
    }
    if (has && !strong) return false;
  }
  return true;
}

bool naive_submodular(const Universe& u, const OrderFunction& o) {
  const std::size_t n = u.size();
  for (Oriented r = 0; r < n; ++r)
    for (Oriented t = 0; t < n; ++t)
      if (o.of(u.join(r, t)) + o.of(u.meet(r, t)) > o.of(r) + o.of(t))
        return false;
  return true;
}

bool naive_structurally_submodular(const Universe& u, const OrderFunction& o) {
  const std::size_t n = u.size();
  for (Oriented r = 0; r < n; ++r)
    for (Oriented t = 0; t < n; ++t)
      if (!(o.of(u.join(r, t)) <= o.of(r) || o.of(u.meet(r, t)) <= o.of(t)))
        return false;
  return true;
}

bool naive_injective(const SeparationSystem& s, const OrderFunction& o) {
  std::vector<SepId> seps = s.separations();
  for (std::size_t i = 0; i < seps.size(); ++i)
    for (std::size_t j = i + 1; j < seps.size(); ++j)
      if (o(seps[i]) == o(seps[j])) return false;
  return true;
}

std::vector<SepId> naive_optimal_distinguishers(
    const SeparationSystem& s, const OrderFunction& o,
    const std::vector<OrientedSet>& tangles) {
  std::set<SepId> out;
  for (std::size_t i = 0; i < tangles.size(); ++i) {
    for (std::size_t j = i + 1; j < tangles.size(); ++j) {
      std::vector<SepId> d;
      for (SepId x : s.separations()) {
        auto b = s.orientations(x);
        bool ia = tangles[i].contains(b[0]), ib = tangles[i].contains(b[1]);
        bool ja = tangles[j].contains(b[0]), jb = tangles[j].contains(b[1]);
        if ((ia || ib) && (ja || jb) && ia != ja) d.push_back(x);
      }
      if (d.empty()) continue;
      Rational least = o(d[0]);
      for (SepId x : d) least = std::min(least, o(x));
      for (SepId x : d)
        if (o(x) == least) out.insert(x);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<OrientedSet> sorted_sets(std::vector<OrientedSet> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

Oriented by_label(const SeparationSystem& s, const std::string& label) {
  for (Oriented a = 0; a < s.ambient_size(); ++a)
    if (s.label(a) == label) return a;
  throw std::out_of_range("no separation labelled " + label);
}

GraphFixture graph_fixture(const std::string& edges) {
  GraphFixture f;
  f.graph = Graph::parse_edge_list(edges);
  f.gu = graph_universe(f.graph);
  f.refined = refine_injective(f.gu.universe, f.gu.order).order;
  return f;
}

SeparationSystem p_triv() {
  // 0 = r, 1 = r*, 2 = s, 3 = s*
  return SeparationSystem::create(4, {1, 0, 3, 2},
                                  {{0, 2}, {1, 2}, {3, 0}, {3, 1}, {3, 2}},
                                  {"r", "r*", "s", "s*"});
}

SeparationSystem chain() {
  return SeparationSystem::create(4, {1, 0, 3, 2}, {{0, 2}, {3, 1}},
                                  {"r", "r*", "s", "s*"});
}

Universe bipartitions_with(std::size_t n) { return bipartition_universe(n); }

OrderFunction cut_order(const SeparationSystem& s,
                        const std::vector<std::uint32_t>& masks,
                        const std::vector<std::vector<int>>& weights) {
  std::vector<Rational> by_sep(s.ambient_separations());
  for (SepId x = 0; x < by_sep.size(); ++x) {
    std::uint32_t a = masks[s.orientations(x)[0]];
    int v = 0;
    for (std::size_t i = 0; i < weights.size(); ++i)
      for (std::size_t j = i + 1; j < weights.size(); ++j)
        if ((a >> i & 1u) != (a >> j & 1u)) v += weights[i][j];
    by_sep[x] = v;
  }
  return OrderFunction(s, std::move(by_sep));
}

RandomFixture random_fixture(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RandomFixture f;
  f.seed = seed;
  Universe full = bipartition_universe(4);
  OrientedSet gens;
  int count = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < count; ++i) gens.insert(static_cast<Oriented>(1 + rng() % 14));
  std::vector<Oriented> old;
  f.universe = sub_universe(full, gens, &old);
  f.masks.assign(old.begin(), old.end());
  std::vector<std::vector<int>> w(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) w[i][j] = static_cast<int>(rng() % 4);
  f.base = cut_order(f.universe.system(), f.masks, w);
  f.order = refine_injective(f.universe, f.base).order;
  std::vector<Rational> vals = distinct_values(f.universe.system(), f.order);
  std::size_t pick = rng() % (vals.size() + 1);
  if (pick == vals.size()) f.k = vals.back() + 1;
  else f.k = vals[pick];
  return f;
}

ForbiddenFamily cover_family(const SeparationSystem& s,
                             const std::vector<std::uint32_t>& masks,
                             std::size_t ground, std::size_t max_size,
                             bool stars_only) {
  const std::uint32_t all = (1u << ground) - 1;
  std::vector<Oriented> m = s.members().to_vector();
  ForbiddenFamily out;
  auto second = [&](Oriented a) { return all & ~masks[a]; };
  std::vector<Oriented> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!pick.empty()) {
      std::uint32_t cover = 0;
      for (Oriented a : pick) cover |= second(a);
      OrientedSet set = OrientedSet::from_range(pick);
      if (cover == all && (!stars_only || naive_star(s, set))) out.add(set);
    }
    if (pick.size() == max_size) return;
    for (std::size_t i = from; i < m.size(); ++i) {
      pick.push_back(m[i]);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace tktest

namespace tktest {

std::vector<OrientedSet> small_stars(const SeparationSystem& s) {
  std::vector<Oriented> m = s.members().to_vector();
  std::vector<OrientedSet> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j)
      for (std::size_t k = j; k < m.size(); ++k) {
        OrientedSet set{m[i], m[j], m[k]};
        if (naive_star(s, set)) out.push_back(set);
      }
  out = sorted_sets(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void add_extra(const SeparationSystem& s, std::uint64_t seed,
               std::vector<ForbiddenFamily>& out) {
  std::vector<OrientedSet> stars = small_stars(s);
  ForbiddenFamily all;
  for (const OrientedSet& st : stars) all.add(st);
  out.push_back(standardize(all, s));
  std::mt19937_64 rng(seed);
  for (int round = 0; round < 3; ++round) {
    ForbiddenFamily f;
    for (const OrientedSet& st : stars)
      if (rng() % 2 == 0) f.add(st);
    out.push_back(standardize(f, s));
  }
}

OrderFunction injective_order(const SeparationSystem& s) {
  std::vector<Rational> v(s.ambient_separations());
  for (SepId x = 0; x < v.size(); ++x) v[x] = Rational(x + 1);
  return OrderFunction(s, std::move(v));
}

std::vector<UniverseCase> bipartition_cases() {
  std::vector<UniverseCase> out;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::vector<int>> path(n, std::vector<int>(n, 0)),
        complete(n, std::vector<int>(n, 1));
    for (std::size_t i = 0; i + 1 < n; ++i) path[i][i + 1] = 1;
    std::vector<std::uint32_t> masks(1u << n);
    for (std::uint32_t a = 0; a < masks.size(); ++a) masks[a] = a;
    for (auto& [tag, w] : {std::pair{"path", path}, std::pair{"complete", complete}}) {
      UniverseCase c;
      c.name = "bipartitions" + std::to_string(n) + "-" + tag;
      c.universe = bipartition_universe(n);
      c.base = cut_order(c.universe.system(), masks, w);
      c.order = refine_injective(c.universe, c.base).order;
      c.stars = standardize(cover_family(c.universe.system(), masks, n, 3, true),
                            c.universe.system());
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

std::vector<UniverseCase> universe_suite(std::size_t max_seps) {
  std::vector<UniverseCase> out;
  for (const char* edges : {"a b\nb c\n", "a b\nb c\nc d\n"}) {
    GraphFixture g = graph_fixture(edges);
    if (g.gu.universe.system().num_separations() > max_seps) continue;
    UniverseCase c;
    c.name = g.graph.vertices.size() == 3 ? "P3" : "P4";
    c.base = g.gu.order;
    c.order = g.refined;
    c.stars = standardize(graph_tangle_stars(g.gu, g.graph, g.gu.universe.system()),
                          g.gu.universe.system());
    c.universe = std::move(g.gu.universe);
    out.push_back(std::move(c));
  }
  for (UniverseCase& c : bipartition_cases()) out.push_back(std::move(c));
  for (int i = 0; i < kRandomFixtures; ++i) {
    RandomFixture f = random_fixture(1000 + static_cast<std::uint64_t>(i));
    UniverseCase c;
    c.name = "random-" + std::to_string(f.seed);
    c.stars = standardize(cover_family(f.universe.system(), f.masks, 4, 3, true),
                          f.universe.system());
    c.universe = std::move(f.universe);
    c.base = std::move(f.base);
    c.order = std::move(f.order);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Case> fixture_suite(std::size_t max_seps) {
  std::vector<Case> out;
  auto add_levels = [&](const std::string& name, const Universe& u,
                        const OrderFunction& base, const OrderFunction& o,
                        const std::function<ForbiddenFamily(const SeparationSystem&)>& stars,
                        const std::vector<Threshold>& ks) {
    for (const Threshold& k : ks) {
      SeparationSystem s = restrict_Sk(u.system(), o, k);
      if (s.num_separations() > max_seps) continue;
      Case c;
      c.name = name + "@" + (k ? k->get_str() : std::string("inf"));
      c.universe = u;
      c.base = base;
      c.system = s;
      c.order = o;
      c.stars = standardize(stars(s), s);
      c.robust = c.stars;
      c.robust.merge(robustness_family(u, o, s, true));
      c.robust = standardize(c.robust, s);
      add_extra(s, out.size(), c.extra);
      out.push_back(std::move(c));
    }
  };
  auto all_levels = [](const Universe& u, const OrderFunction& o) {
    std::vector<Threshold> ks;
    for (const Rational& v : distinct_values(u.system(), o)) ks.push_back(v);
    ks.push_back(std::nullopt);
    return ks;
  };

  for (const char* edges : {"a b\nb c\n", "a b\nb c\nc d\n"}) {
    GraphFixture g = graph_fixture(edges);
    std::string name = g.graph.vertices.size() == 3 ? "P3" : "P4";
    add_levels(name, g.gu.universe, g.gu.order, g.refined,
               [&](const SeparationSystem& s) {
                 return graph_tangle_stars(g.gu, g.graph, s);
               },
               all_levels(g.gu.universe, g.refined));
  }
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<std::uint32_t> masks(1u << n);
    for (std::uint32_t a = 0; a < masks.size(); ++a) masks[a] = a;
    for (const UniverseCase& uc : bipartition_cases()) {
      if (uc.universe.size() != masks.size()) continue;
      add_levels(uc.name, uc.universe, uc.base, uc.order,
                 [&](const SeparationSystem& s) {
                   return cover_family(s, masks, n, 3, true);
                 },
                 all_levels(uc.universe, uc.order));
    }
  }
  for (int i = 0; i < kRandomFixtures; ++i) {
    RandomFixture f = random_fixture(1000 + static_cast<std::uint64_t>(i));
    add_levels("random-" + std::to_string(f.seed), f.universe, f.base, f.order,
               [&](const SeparationSystem& s) {
                 return cover_family(s, f.masks, 4, 3, true);
               },
               {f.k});
  }

  // Hand-built systems without a universe.
  auto hand = [&](const std::string& name, SeparationSystem s,
                  ForbiddenFamily f) {
    Case c;
    c.name = name;
    c.order = injective_order(s);
    c.stars = standardize(f, s);
    c.robust = c.stars;
    add_extra(s, out.size(), c.extra);
    c.system = std::move(s);
    out.push_back(std::move(c));
  };
  hand("P-TRIV", p_triv(), {});
  hand("chain", chain(), {});
  {
    SeparationSystem s = chain();
    ForbiddenFamily f;
    f.add({0});
    f.add({3});
    hand("chain-forbidden", s, f);
  }
  {
    SeparationSystem s = SeparationSystem::create(4, {1, 0, 3, 2}, {},
                                                  {"r", "r*", "s", "s*"});
    ForbiddenFamily f;
    f.add({0});
    f.add({1});
    hand("antichain-forbidden", s, f);
    hand("antichain", s, {});
  }
  return out;
}

}  // namespace tktest
