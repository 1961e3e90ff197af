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

#ifndef TANGLEKIT_FORBIDDEN_HPP_
#define TANGLEKIT_FORBIDDEN_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tanglekit/core.hpp"
#include "tanglekit/order_function.hpp"
#include "tanglekit/oriented_set.hpp"
#include "tanglekit/separation_system.hpp"
#include "tanglekit/universe.hpp"

namespace tanglekit {

enum class Provenance {
  kExplicit,
  kRobustness,   // triples {r, r* v s, r* v s*}
  kProfile,      // triples {r, s, r* v s*}
  kStandardize,  // {s*} for trivial s
  kGraphStars,   // stars whose small sides cover a graph
};

std::string_view to_string(Provenance p);

// A finite set of finite subsets of oriented handles. Members keep their
// insertion order; duplicates are dropped and keep the first provenance.
class ForbiddenFamily {
 public:
  bool add(const OrientedSet& member, Provenance provenance = Provenance::kExplicit);
  void merge(const ForbiddenFamily& other);

  const std::vector<OrientedSet>& members() const { return members_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const OrientedSet& member) const {
    return index_.count(member) != 0;
  }

  // Index of the first member contained in tau.
  std::optional<std::size_t> first_subset_of(const OrientedSet& tau) const;
  std::vector<std::size_t> subsets_of(const OrientedSet& tau) const;
  // Some member containing `added` lies inside tau; the incremental test
  // used while extending partial orientations.
  bool has_subset_containing(const OrientedSet& tau, Oriented added) const;

  // Members lying inside the system.
  ForbiddenFamily restricted_to(const SeparationSystem& system) const;

 private:
  std::vector<OrientedSet> members_;
  std::vector<Provenance> provenance_;
  std::unordered_map<OrientedSet, std::size_t, OrientedSetHash> index_;
  bool has_empty_ = false;
  std::unordered_map<Oriented, std::vector<std::size_t>> by_handle_;
};

// No subset of tau is a member of the family.
bool avoids(const OrientedSet& tau, const ForbiddenFamily& family);

// All F-avoiding consistent orientations, in enumeration order.
std::vector<OrientedSet> enumerate_tangles(
    const SeparationSystem& system, const ForbiddenFamily& family,
    std::size_t bound = kDefaultEnumerationBound);

struct Tangle {
  OrientedSet orientation;
  Threshold k;            // the tangle is a tangle of S_k
  std::size_t level = 0;  // index into the level chain
  bool maximal = false;
};

struct TanglesIn {
  std::vector<Level> levels;
  std::vector<Tangle> tangles;  // grouped by level
  std::vector<Tangle> maximal;
};

// Tangles of every S_k, with maximality: a tangle of S_k is maximal if no
// tangle of a larger level restricts to it.
TanglesIn enumerate_tangles_in(const SeparationSystem& system,
                               const ForbiddenFamily& family,
                               const OrderFunction& order,
                               std::size_t bound = kDefaultEnumerationBound);

// {s*} is a member for every trivial s of the system. `missing` receives the
// trivial elements lacking their singleton.
bool is_standard(const ForbiddenFamily& family, const SeparationSystem& system,
                 OrientedSet* missing = nullptr);
ForbiddenFamily standardize(const ForbiddenFamily& family,
                            const SeparationSystem& system);

struct EclipseFlags {
  bool eclipses = false;
  bool weakly_eclipses = false;
};
// Whether r eclipses / weakly eclipses s.
EclipseFlags eclipse_flags(const SeparationSystem& system,
                           const OrderFunction& order, Oriented r, Oriented s);

// No element of sigma is (weakly) eclipsed by another element of tau. The
// witness is (eclipsing element, eclipsed element).
bool is_efficient(const SeparationSystem& system, const OrderFunction& order,
                  const OrientedSet& sigma, const OrientedSet& tau,
                  PairWitness* witness = nullptr);
bool is_strongly_efficient(const SeparationSystem& system,
                           const OrderFunction& order, const OrientedSet& sigma,
                           const OrientedSet& tau, PairWitness* witness = nullptr);

// Every consistent orientation with a member inside it has a strongly
// efficient member inside it. The counterexample is such an orientation.
bool is_rich(const ForbiddenFamily& family, const SeparationSystem& system,
             const OrderFunction& order, OrientedSet* counterexample = nullptr,
             std::size_t bound = kDefaultEnumerationBound);

// Triples {r, r* v s, r* v s*} with both joins of order below |r|, for r
// and s ranging over the universe; only triples inside `system` are kept,
// and those with degenerate elements only if keep_degenerate is set.
ForbiddenFamily robustness_family(const Universe& universe,
                                  const OrderFunction& order,
                                  const SeparationSystem& system,
                                  bool keep_degenerate = false);

// Triples {r, s, r* v s*} for distinct r, s of the system whose third
// element lies in the system; degenerate-free.
ForbiddenFamily profile_family(const Universe& universe,
                               const SeparationSystem& system);

struct EfficientSubfamily {
  ForbiddenFamily family;
  std::vector<std::size_t> removed;       // indices not efficient in closure
  std::vector<std::size_t> inconsistent;  // indices whose closure is undefined
};
// Members that are efficient in their closure.
EfficientSubfamily f_eff(const ForbiddenFamily& family,
                         const SeparationSystem& system,
                         const OrderFunction& order);

struct EclipseWitness {
  OrientedSet tau;
  OrientedSet sigma;
  Oriented s = kNoOriented;
  Oriented r = kNoOriented;
};
// For every consistent orientation tau, replacing an element of a member
// inside tau by a weakly eclipsing element of tau stays in the family.
bool closed_under_eclipsing(const ForbiddenFamily& family,
                            const SeparationSystem& system,
                            const OrderFunction& order,
                            EclipseWitness* witness = nullptr,
                            std::size_t bound = kDefaultEnumerationBound);

// sigma >= other: every element of sigma has an element of other below it.
bool set_geq(const SeparationSystem& system, const OrientedSet& sigma,
             const OrientedSet& other);

// Members inside tau that no other member inside tau lies strictly below in
// the lifted order.
std::vector<std::size_t> minimal_members_in(const ForbiddenFamily& family,
                                            const SeparationSystem& system,
                                            const OrientedSet& tau);

// Stars of at most three elements of `system` whose small sides cover every
// vertex and edge of the graph.
ForbiddenFamily graph_tangle_stars(const GraphUniverse& graph,
                                   const Graph& g,
                                   const SeparationSystem& system);

// Every member is a star; `bad` receives the first index that is not.
bool all_stars(const ForbiddenFamily& family, const SeparationSystem& system,
               std::size_t* bad = nullptr);

}  // namespace tanglekit

#endif  // TANGLEKIT_FORBIDDEN_HPP_
