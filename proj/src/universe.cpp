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

#include "tanglekit/universe.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tanglekit/error.hpp"

namespace tanglekit {

Universe Universe::create(SeparationSystem system, std::vector<Oriented> join,
                          std::vector<Oriented> meet) {
  const std::size_t n = system.ambient_size();
  if (join.size() != n * n || meet.size() != n * n)
    throw Error(ErrorKind::kValidation, "join/meet tables must be total");
  for (std::size_t i = 0; i < n * n; ++i)
    if (join[i] >= n || meet[i] >= n)
      throw Error(ErrorKind::kValidation, "join/meet entry out of range");
  Universe u;
  u.system_ = std::move(system);
  u.join_ = std::move(join);
  u.meet_ = std::move(meet);
  return u;
}

Universe Universe::from_poset(SeparationSystem system) {
  const std::size_t n = system.ambient_size();
  std::vector<Oriented> join(n * n), meet(n * n);
  for (Oriented a = 0; a < n; ++a) {
    for (Oriented b = 0; b < n; ++b) {
      OrientedSet upper = system.up(a) & system.up(b);
      OrientedSet lower = system.down(a) & system.down(b);
      Oriented sup = kNoOriented, inf = kNoOriented;
      for (Oriented c : upper)
        if (upper.subset_of(system.up(c))) sup = c;
      for (Oriented c : lower)
        if (lower.subset_of(system.down(c))) inf = c;
      if (sup == kNoOriented || inf == kNoOriented)
        throw Error(ErrorKind::kValidation,
                    "order is not a lattice: no " +
                        std::string(sup == kNoOriented ? "supremum" : "infimum") +
                        " for " + std::to_string(a) + "," + std::to_string(b),
                    {OrientedSet{a, b}});
      join[a * n + b] = sup;
      meet[a * n + b] = inf;
    }
  }
  return create(std::move(system), std::move(join), std::move(meet));
}

LatticeReport validate_lattice(const Universe& u) {
  const SeparationSystem& sys = u.system();
  const std::size_t n = u.size();
  auto fail = [](std::string axiom, std::vector<Oriented> w) {
    return LatticeReport{false, std::move(axiom), std::move(w)};
  };
  for (Oriented a = 0; a < n; ++a) {
    for (Oriented b = 0; b < n; ++b) {
      if (u.join(a, b) != u.join(b, a)) return fail("join commutativity", {a, b});
      if (u.meet(a, b) != u.meet(b, a)) return fail("meet commutativity", {a, b});
      if (u.join(a, u.meet(a, b)) != a) return fail("absorption (join)", {a, b});
      if (u.meet(a, u.join(a, b)) != a) return fail("absorption (meet)", {a, b});
      bool le = sys.leq(a, b);
      if (le != (u.join(a, b) == b)) return fail("order agrees with join", {a, b});
      if (le != (u.meet(a, b) == a)) return fail("order agrees with meet", {a, b});
      if (sys.inv(u.join(a, b)) != u.meet(sys.inv(a), sys.inv(b)))
        return fail("involution swaps join and meet", {a, b});
      for (Oriented c = 0; c < n; ++c) {
        if (u.join(u.join(a, b), c) != u.join(a, u.join(b, c)))
          return fail("join associativity", {a, b, c});
        if (u.meet(u.meet(a, b), c) != u.meet(a, u.meet(b, c)))
          return fail("meet associativity", {a, b, c});
      }
    }
  }
  return {};
}

namespace {

std::string subset_label(std::uint32_t mask, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace

Universe bipartition_universe(std::size_t n) {
  if (n == 0 || n > 8)
    throw Error(ErrorKind::kBound,
                "bipartition universes need a ground set of size 1..8");
  const std::uint32_t count = 1u << n, full = count - 1;
  std::vector<Oriented> inv(count);
  std::vector<std::pair<Oriented, Oriented>> leq;
  std::vector<std::string> labels(count);
  for (std::uint32_t a = 0; a < count; ++a) {
    inv[a] = full & ~a;
    labels[a] = subset_label(a, n) + "|" + subset_label(full & ~a, n);
    for (std::uint32_t b = 0; b < count; ++b)
      if ((a & b) == a && a != b) leq.emplace_back(a, b);
  }
  SeparationSystem sys =
      SeparationSystem::create(count, std::move(inv), leq, std::move(labels));
  std::vector<Oriented> join(count * count), meet(count * count);
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      join[a * count + b] = a | b;
      meet[a * count + b] = a & b;
    }
  }
  return Universe::create(std::move(sys), std::move(join), std::move(meet));
}

int Graph::add_vertex(const std::string& name) {
  auto it = std::find(vertices.begin(), vertices.end(), name);
  if (it != vertices.end()) return static_cast<int>(it - vertices.begin());
  vertices.push_back(name);
  return static_cast<int>(vertices.size()) - 1;
}

Graph Graph::parse_edge_list(std::string_view text) {
  Graph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw Error(ErrorKind::kMalformed,
                  "line " + std::to_string(lineno) + ": expected 'a b'");
    int a = g.add_vertex(tokens[0]);
    if (tokens.size() == 1) continue;
    int b = g.add_vertex(tokens[1]);
    if (a == b)
      throw Error(ErrorKind::kMalformed,
                  "line " + std::to_string(lineno) + ": loops are not allowed");
    auto e = std::minmax(a, b);
    if (std::find(g.edges.begin(), g.edges.end(), std::pair<int, int>(e)) ==
        g.edges.end())
      g.edges.emplace_back(e);
  }
  return g;
}

GraphUniverse graph_universe(const Graph& graph) {
  const std::size_t n = graph.vertices.size();
  if (n == 0 || n > 5)
    throw Error(ErrorKind::kBound, "graph universes need 1..5 vertices");
  std::uint32_t codes = 1;
  for (std::size_t i = 0; i < n; ++i) codes *= 3;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sides;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Oriented> index;
  for (std::uint32_t code = 0; code < codes; ++code) {
    std::uint32_t a = 0, b = 0, c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      // digit 0: only in A, 1: in both, 2: only in B
      if (c % 3 != 2) a |= 1u << i;
      if (c % 3 != 0) b |= 1u << i;
    }
    bool ok = true;
    for (auto [x, y] : graph.edges) {
      bool xa = (a >> x & 1u) && !(b >> x & 1u), xb = (b >> x & 1u) && !(a >> x & 1u);
      bool ya = (a >> y & 1u) && !(b >> y & 1u), yb = (b >> y & 1u) && !(a >> y & 1u);
      if ((xa && yb) || (xb && ya)) ok = false;
    }
    if (!ok) continue;
    index[{a, b}] = static_cast<Oriented>(sides.size());
    sides.emplace_back(a, b);
  }
  const std::size_t m = sides.size();
  if (m > kMaxOriented)
    throw Error(ErrorKind::kBound, "graph has too many separations");
  auto name = [&](std::uint32_t mask) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1u)) continue;
      if (!out.empty()) out += ',';
      out += graph.vertices[i];
    }
    return out;
  };
  std::vector<Oriented> inv(m);
  std::vector<std::string> labels(m);
  std::vector<std::pair<Oriented, Oriented>> leq;
  for (Oriented i = 0; i < m; ++i) {
    auto [a, b] = sides[i];
    inv[i] = index.at({b, a});
    labels[i] = "(" + name(a) + "|" + name(b) + ")";
    for (Oriented j = 0; j < m; ++j) {
      auto [c, d] = sides[j];
      if (i != j && (a & c) == c && (b & d) == b) leq.emplace_back(i, j);
    }
  }
  SeparationSystem sys =
      SeparationSystem::create(m, std::move(inv), leq, std::move(labels));
  std::vector<Oriented> join(m * m), meet(m * m);
  for (Oriented i = 0; i < m; ++i) {
    for (Oriented j = 0; j < m; ++j) {
      auto [a, b] = sides[i];
      auto [c, d] = sides[j];
      join[i * m + j] = index.at({a & c, b | d});
      meet[i * m + j] = index.at({a | c, b & d});
    }
  }
  std::vector<Rational> order(sys.ambient_separations());
  for (Oriented i = 0; i < m; ++i)
    order[sys.sep(i)] = std::popcount(sides[i].first & sides[i].second);
  GraphUniverse out;
  out.order = OrderFunction(sys, std::move(order));
  out.universe = Universe::create(std::move(sys), std::move(join), std::move(meet));
  out.sides = std::move(sides);
  return out;
}

Universe sub_universe(const Universe& u, const OrientedSet& generators,
                      std::vector<Oriented>* old_handles) {
  const SeparationSystem& sys = u.system();
  OrientedSet closed = generators;
  for (bool grew = true; grew;) {
    grew = false;
    OrientedSet next = closed;
    for (Oriented a : closed) {
      next.insert(sys.inv(a));
      for (Oriented b : closed) {
        next.insert(u.join(a, b));
        next.insert(u.meet(a, b));
      }
    }
    if (!(next == closed)) {
      closed = next;
      grew = true;
    }
  }
  std::vector<Oriented> old = closed.to_vector();
  const std::size_t m = old.size();
  std::vector<Oriented> fresh(sys.ambient_size(), kNoOriented);
  for (Oriented i = 0; i < m; ++i) fresh[old[i]] = i;
  std::vector<Oriented> inv(m);
  std::vector<std::string> labels(m);
  std::vector<std::pair<Oriented, Oriented>> leq;
  for (Oriented i = 0; i < m; ++i) {
    inv[i] = fresh[sys.inv(old[i])];
    labels[i] = sys.label(old[i]);
    for (Oriented j = 0; j < m; ++j)
      if (i != j && sys.leq(old[i], old[j])) leq.emplace_back(i, j);
  }
  SeparationSystem sub =
      SeparationSystem::create(m, std::move(inv), leq, std::move(labels));
  std::vector<Oriented> join(m * m), meet(m * m);
  for (Oriented i = 0; i < m; ++i) {
    for (Oriented j = 0; j < m; ++j) {
      join[i * m + j] = fresh[u.join(old[i], old[j])];
      meet[i * m + j] = fresh[u.meet(old[i], old[j])];
    }
  }
  if (old_handles) *old_handles = old;
  return Universe::create(std::move(sub), std::move(join), std::move(meet));
}

std::array<Corner, 4> corners(const Universe& u, Oriented r, Oriented s) {
  const SeparationSystem& sys = u.system();
  Oriented rr[2] = {r, sys.inv(r)}, ss[2] = {s, sys.inv(s)};
  std::array<Corner, 4> out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[2 * i + j] = {rr[i], ss[j], u.meet(rr[i], ss[j])};
  return out;
}

bool same_side(const Universe& u, Oriented t, Oriented t2, Oriented r) {
  const SeparationSystem& sys = u.system();
  for (Oriented side : {r, sys.inv(r)}) {
    bool a = sys.leq(t, side) || sys.leq(sys.inv(t), side);
    bool b = sys.leq(t2, side) || sys.leq(sys.inv(t2), side);
    if (a && b) return true;
  }
  return false;
}

bool is_submodular(const Universe& u, const std::vector<Rational>& f,
                   SubmodularityWitness* witness) {
  const OrientedSet& m = u.system().members();
  for (Oriented r : m) {
    for (Oriented s : m) {
      if (f[u.join(r, s)] + f[u.meet(r, s)] > f[r] + f[s]) {
        if (witness) *witness = {r, s};
        return false;
      }
    }
  }
  return true;
}

bool is_structurally_submodular(const Universe& u,
                                const std::vector<Rational>& f,
                                SubmodularityWitness* witness) {
  const OrientedSet& m = u.system().members();
  for (Oriented r : m) {
    for (Oriented s : m) {
      if (!(f[u.join(r, s)] <= f[r] || f[u.meet(r, s)] <= f[s])) {
        if (witness) *witness = {r, s};
        return false;
      }
    }
  }
  return true;
}

std::vector<Rational> oriented_values(const Universe& u,
                                      const OrderFunction& order) {
  std::vector<Rational> out(u.size());
  for (Oriented a = 0; a < u.size(); ++a) out[a] = order.of(a);
  return out;
}

bool is_submodular(const Universe& u, const OrderFunction& order,
                   SubmodularityWitness* witness) {
  return is_submodular(u, oriented_values(u, order), witness);
}

bool is_structurally_submodular(const Universe& u, const OrderFunction& order,
                                SubmodularityWitness* witness) {
  return is_structurally_submodular(u, oriented_values(u, order), witness);
}

}  // namespace tanglekit
