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

#ifndef TANGLEKIT_UNIVERSE_HPP_
#define TANGLEKIT_UNIVERSE_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tanglekit/order_function.hpp"
#include "tanglekit/rational.hpp"
#include "tanglekit/separation_system.hpp"

namespace tanglekit {

// A separation system whose order is a lattice, with explicit join and meet
// tables over the ambient handles.
class Universe {
 public:
  Universe() = default;
  // Tables are row-major n*n. Only ranges are checked here; see
  // validate_lattice for the axioms.
  static Universe create(SeparationSystem system, std::vector<Oriented> join,
                         std::vector<Oriented> meet);
  // Computes suprema and infima from the order; throws kValidation if some
  // pair lacks one.
  static Universe from_poset(SeparationSystem system);

  const SeparationSystem& system() const { return system_; }
  std::size_t size() const { return system_.ambient_size(); }
  Oriented join(Oriented a, Oriented b) const { return join_[a * size() + b]; }
  Oriented meet(Oriented a, Oriented b) const { return meet_[a * size() + b]; }
  const std::vector<Oriented>& join_table() const { return join_; }
  const std::vector<Oriented>& meet_table() const { return meet_; }

 private:
  SeparationSystem system_;
  std::vector<Oriented> join_;
  std::vector<Oriented> meet_;
};

struct LatticeReport {
  bool ok = true;
  std::string axiom;
  std::vector<Oriented> witness;
};

// Commutativity, associativity, absorption, agreement of both tables with
// the order, and (r v s)* = r* ^ s*.
LatticeReport validate_lattice(const Universe& universe);

// All bipartitions (A, V\A) of {1..n}; handle = bitmask of A. Ordered by
// inclusion of the first side. Throws kBound for n > 8.
Universe bipartition_universe(std::size_t n);

struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;

  int add_vertex(const std::string& name);
  // One edge "a b" per line; a single token declares an isolated vertex;
  // '#' starts a comment. Throws kMalformed with the line number.
  static Graph parse_edge_list(std::string_view text);
};

struct GraphUniverse {
  Universe universe;
  OrderFunction order;  // |A n B|
  // Vertex bitmasks (A, B) of every oriented handle.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> sides;
};

// All separations (A, B) of a simple graph: A u B = V and no edge between
// A\B and B\A. (A,B) <= (C,D) iff A contains C and B is contained in D.
GraphUniverse graph_universe(const Graph& graph);

// Closes `generators` under join, meet and the involution and re-indexes the
// result compactly. `old_handles[new] = old`.
Universe sub_universe(const Universe& universe, const OrientedSet& generators,
                      std::vector<Oriented>* old_handles = nullptr);

struct Corner {
  Oriented r_side;  // orientation of r used
  Oriented s_side;  // orientation of s used
  Oriented corner;  // r_side ^ s_side
};

// The four corners r_i ^ s_j in the order (r,s), (r,s*), (r*,s), (r*,s*).
std::array<Corner, 4> corners(const Universe& universe, Oriented r, Oriented s);

// Both t and t2 have orientations below one fixed orientation of r.
bool same_side(const Universe& universe, Oriented t, Oriented t2, Oriented r);

struct SubmodularityWitness {
  Oriented r = kNoOriented;
  Oriented s = kNoOriented;
};

// u is indexed by ambient oriented handle; checked over all pairs of handles
// of the universe.
bool is_submodular(const Universe& universe, const std::vector<Rational>& u,
                   SubmodularityWitness* witness = nullptr);
bool is_structurally_submodular(const Universe& universe,
                                const std::vector<Rational>& u,
                                SubmodularityWitness* witness = nullptr);
bool is_submodular(const Universe& universe, const OrderFunction& order,
                   SubmodularityWitness* witness = nullptr);
bool is_structurally_submodular(const Universe& universe,
                                const OrderFunction& order,
                                SubmodularityWitness* witness = nullptr);

std::vector<Rational> oriented_values(const Universe& universe,
                                      const OrderFunction& order);

}  // namespace tanglekit

#endif  // TANGLEKIT_UNIVERSE_HPP_
