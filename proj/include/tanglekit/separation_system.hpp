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

#ifndef TANGLEKIT_SEPARATION_SYSTEM_HPP_
#define TANGLEKIT_SEPARATION_SYSTEM_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tanglekit/oriented_set.hpp"

namespace tanglekit {

// Ambient relation shared between a system and all of its subsystems.
struct PosetData {
  std::size_t n = 0;
  std::vector<Oriented> inv;
  std::vector<OrientedSet> up;    // up[a] = {b : a <= b}
  std::vector<OrientedSet> down;  // down[a] = {b : b <= a}
  std::vector<std::string> labels;
  std::vector<SepId> sep_of;
  // Both orientations of each separation, lower handle first. Degenerate
  // separations list their single handle twice.
  std::vector<std::array<Oriented, 2>> seps;
};

// A finite poset with an order-reversing involution, possibly viewed through
// a subset of its elements that is closed under the involution.
class SeparationSystem {
 public:
  SeparationSystem() = default;

  // Validates reflexivity (reflexive pairs are added), antisymmetry,
  // transitivity, the involution axioms and order reversal. Throws
  // Error(kValidation) naming the violated axiom and a witness pair.
  static SeparationSystem create(std::size_t n, std::vector<Oriented> inv,
                                 const std::vector<std::pair<Oriented, Oriented>>& leq,
                                 std::vector<std::string> labels = {});

  // Subsystem on the given handles; throws kValidation unless `keep` is
  // closed under the involution and contained in this system.
  SeparationSystem restrict(const OrientedSet& keep) const;

  std::size_t ambient_size() const { return data_ ? data_->n : 0; }
  std::size_t ambient_separations() const {
    return data_ ? data_->seps.size() : 0;
  }
  const OrientedSet& members() const { return members_; }
  bool contains(Oriented a) const { return members_.contains(a); }
  std::size_t size() const { return members_.size(); }
  // Unoriented separations present in this system, increasing.
  std::vector<SepId> separations() const;
  std::size_t num_separations() const;

  bool leq(Oriented a, Oriented b) const { return data_->up[a].contains(b); }
  bool lt(Oriented a, Oriented b) const { return a != b && leq(a, b); }
  Oriented inv(Oriented a) const { return data_->inv[a]; }
  SepId sep(Oriented a) const { return data_->sep_of[a]; }
  const std::array<Oriented, 2>& orientations(SepId s) const {
    return data_->seps[s];
  }
  bool degenerate(Oriented a) const { return data_->inv[a] == a; }
  // Ambient up/down sets; intersect with members() for the subsystem view.
  const OrientedSet& up(Oriented a) const { return data_->up[a]; }
  const OrientedSet& down(Oriented a) const { return data_->down[a]; }
  const std::string& label(Oriented a) const { return data_->labels[a]; }
  // Both handles of separation s as a set.
  OrientedSet both(SepId s) const;
  // Handles of all separations meeting `sigma`.
  OrientedSet separations_of(const OrientedSet& sigma) const;
  OrientedSet inverse(const OrientedSet& sigma) const;

  // Every handle must belong to the subsystem; throws kPrecondition otherwise.
  void require_members(const OrientedSet& sigma, const char* what) const;

  const std::shared_ptr<const PosetData>& data() const { return data_; }
  bool same_ambient(const SeparationSystem& other) const {
    return data_ == other.data_;
  }
  friend bool operator==(const SeparationSystem& a, const SeparationSystem& b) {
    return a.data_ == b.data_ && a.members_ == b.members_;
  }

 private:
  std::shared_ptr<const PosetData> data_;
  OrientedSet members_;
};

}  // namespace tanglekit

#endif  // TANGLEKIT_SEPARATION_SYSTEM_HPP_
