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


// S-trees, the conversion of F-trees into S-trees, shifting, and the
// tangle-tree dichotomy.

#ifndef TANGLEKIT_DUALITY_HPP_
#define TANGLEKIT_DUALITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tanglekit/core.hpp"
#include "tanglekit/forbidden.hpp"
#include "tanglekit/order_function.hpp"
#include "tanglekit/oriented_set.hpp"
#include "tanglekit/separation_system.hpp"
#include "tanglekit/tst.hpp"
#include "tanglekit/universe.hpp"

namespace tanglekit {

// Oriented edge 2e is the edge e oriented from a to b; 2e+1 from b to a.
using OrientedEdge = std::uint32_t;

struct STreeEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  Oriented alpha = kNoOriented;  // label of the orientation a -> b
};

class STree {
 public:
  explicit STree(std::size_t nodes = 1) : nodes_(nodes) {}

  std::size_t num_nodes() const { return nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<STreeEdge>& edges() const { return edges_; }

  std::uint32_t add_node() { return static_cast<std::uint32_t>(nodes_++); }
  // Adds the edge a - b with alpha(a -> b) = label; returns its index.
  std::uint32_t add_edge(std::uint32_t a, std::uint32_t b, Oriented label);

  std::uint32_t initial(OrientedEdge e) const;
  std::uint32_t terminal(OrientedEdge e) const;
  static OrientedEdge reverse(OrientedEdge e) { return e ^ 1u; }
  Oriented alpha(const SeparationSystem& system, OrientedEdge e) const;

  // Oriented edges pointing to t.
  std::vector<OrientedEdge> incoming(std::uint32_t t) const;
  // alpha of the incoming edges of t.
  OrientedSet star(const SeparationSystem& system, std::uint32_t t) const;

  bool is_tree() const;
  // e > f: f is a different edge and the path from e to f starts at t(e)
  // and ends at i(f).
  bool edge_greater(OrientedEdge e, OrientedEdge f) const;

  friend bool operator==(const STree& x, const STree& y) {
    if (x.nodes_ != y.nodes_ || x.edges_.size() != y.edges_.size())
      return false;
    for (std::size_t i = 0; i < x.edges_.size(); ++i) {
      const auto &p = x.edges_[i], &q = y.edges_[i];
      if (p.a != q.a || p.b != q.b || p.alpha != q.alpha) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint32_t> path(std::uint32_t from, std::uint32_t to) const;

  std::size_t nodes_;
  std::vector<STreeEdge> edges_;
};

// alpha(F_t) is in F for every node t.
bool is_over(const SeparationSystem& system, const STree& tree,
             const ForbiddenFamily& family, std::uint32_t* bad = nullptr);
// e <= f implies alpha(e) <= alpha(f).
bool preserves_order(const SeparationSystem& system, const STree& tree,
                     std::pair<OrientedEdge, OrientedEdge>* witness = nullptr);
bool injective_on_stars(const SeparationSystem& system, const STree& tree,
                        std::uint32_t* bad = nullptr);

// Checks that every orientation of S contains some alpha(F_t). Throws
// kPrecondition unless the tree is an S-tree over F.
struct ExclusionReport {
  bool ok = true;
  std::size_t orientations = 0;
  OrientedSet counterexample;
};
ExclusionReport stree_excludes_tangles(const SeparationSystem& system,
                                       const STree& tree,
                                       const ForbiddenFamily& family,
                                       std::size_t bound = kDefaultEnumerationBound);

struct ConversionMap {
  std::vector<NodeId> node_leaf;   // node of T' -> leaf of T
  std::vector<NodeId> edge_child;  // oriented edge of T' -> child end of an edge of T
  std::vector<NodeId> edge_node;   // edge of T' -> v_e
};

struct Conversion {
  STree tree;
  ConversionMap gamma;
};

struct ConversionCheck {
  bool clause1 = true;  // nodes of T' biject onto the leaves of T
  bool clause2 = true;  // oriented edges of T' biject onto the edges of T
  bool clause3 = true;  // each edge pairs E_{v_e}, v_e distinct
  bool clause4 = true;  // gamma(t(e)) lies above the first edge gamma(e)
  bool clause5 = true;  // alpha = beta o gamma
  bool tree = true;
  bool over_family = true;
  bool image = true;       // alpha image equals beta image
  bool decreasing = true;  // alpha strictly decreases along oriented paths
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

ConversionCheck check_conversion(const SeparationSystem& system,
                                 const SeparationTree& ftree,
                                 const ForbiddenFamily& family,
                                 const Conversion& conversion,
                                 bool require_over = true);

// Converts an irreducible F-tree over a family of stars into an S-tree over
// F. With allow_trivial the system may have trivial elements; the result is
// then not checked to be over F (see trivial_patch).
Conversion convert_ftree(const SeparationSystem& system,
                         const SeparationTree& ftree,
                         const ForbiddenFamily& family,
                         bool allow_trivial = false);

// At every node t' whose star is not in F, adds leaves t with
// alpha(t -> t') = r for the smallest set of trivial r missing from
// alpha(F_t'), each witnessed by a separation with an orientation in
// alpha(F_t'), that completes the star to a member of F. Requires F
// standard; checks the result is over F.
STree trivial_patch(const SeparationSystem& system, const STree& tree,
                    const ForbiddenFamily& family);

struct NestedCheck {
  bool irreducible = false;
  bool nested = false;
  std::vector<std::pair<Oriented, Oriented>> crossing;
  bool holds() const { return !irreducible || nested; }
};
NestedCheck check_nested_corollary(const SeparationSystem& system,
                                   const SeparationTree& ftree,
                                   const ForbiddenFamily& family);

// S-tree over stars for a nested regular system, with alpha onto S and
// injective on every F_t. Nodes are the consistent orientations.
STree stree_from_nested(const SeparationSystem& system,
                        std::size_t bound = kDefaultEnumerationBound);

// The shifting map for r <= s. Case one (x != s* and x <= s) gives x ^ r and
// takes precedence; case two (x* != s* and x* <= s) gives (x* ^ r)*.
Oriented shift_map(const Universe& universe, Oriented r, Oriented s,
                   Oriented x);
OrientedSet shift_set(const Universe& universe, Oriented r, Oriented s,
                      const OrientedSet& sigma);

// t ^ r lies in S for every t in S with s* != t <= s.
bool emulates(const Universe& universe, const SeparationSystem& system,
              Oriented r, Oriented s, Oriented* witness = nullptr);

struct ShiftSelection {
  Oriented r = kNoOriented;
  OrientedSet shifted;
  std::vector<Oriented> candidates;  // every r in tau eclipsing s
};

// The eclipsing r in tau of minimum order, maximal subject to that, and the
// shifted star. Throws kAmbiguity if several maximal choices exist.
ShiftSelection lemma_shift_select(const Universe& universe,
                                  const OrderFunction& order,
                                  const SeparationSystem& system,
                                  const OrientedSet& tau,
                                  const OrientedSet& sigma, Oriented s);

bool closed_under_shifting(const ForbiddenFamily& family,
                           const Universe& universe,
                           const SeparationSystem& system,
                           const OrderFunction& order,
                           EclipseWitness* witness = nullptr,
                           std::size_t bound = kDefaultEnumerationBound);

enum class TrivialPolicy { kReject, kDrop, kPatch };

struct DichotomyOptions {
  bool check_exclusive = false;
  bool trust_rich = false;
  TrivialPolicy trivial = TrivialPolicy::kReject;
  const Universe* universe = nullptr;  // used to refine a non-injective order
  std::size_t bound = kDefaultEnumerationBound;
};

struct DichotomyResult {
  SeparationSystem system;  // after dropping trivial elements, if asked
  OrderFunction order;      // after refinement, if needed
  bool refined = false;
  std::vector<OrientedSet> tangles;
  SeparationTree thorough;
  std::optional<Reduction> reduction;  // the F-tree, when there is no tangle
  std::optional<Conversion> conversion;
  std::optional<STree> stree;  // over F_eff unless patched
  bool stars = false;          // F consists of stars
  bool exclusive_checked = false;
  std::optional<ExclusionReport> exclusion;
  bool has_tangle() const { return !tangles.empty(); }
};

DichotomyResult dichotomy(const SeparationSystem& system,
                          const OrderFunction& order,
                          const ForbiddenFamily& family,
                          const DichotomyOptions& options = {});

struct NewDualityOptions {
  bool check_exclusive = false;
  bool cross_check_rich = false;
  // kReject requires U_l to be trivial-free; kDrop and kPatch are forwarded
  // to the dichotomy.
  TrivialPolicy trivial = TrivialPolicy::kReject;
  std::size_t bound = kDefaultEnumerationBound;
};

struct NewDualityResult {
  SeparationSystem system;  // U_l
  OrderFunction order;      // injective structurally submodular
  bool refined = false;
  bool closed = false;
  std::optional<bool> rich_brute_force;
  DichotomyResult result;
};

NewDualityResult newduality(const Universe& universe, const OrderFunction& order,
                            const Threshold& ell, const ForbiddenFamily& family,
                            const NewDualityOptions& options = {});

}  // namespace tanglekit

#endif  // TANGLEKIT_DUALITY_HPP_
