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

#ifndef TANGLEKIT_ORDER_FUNCTION_HPP_
#define TANGLEKIT_ORDER_FUNCTION_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "tanglekit/rational.hpp"
#include "tanglekit/separation_system.hpp"

namespace tanglekit {

// Exact order values on the unoriented separations of an ambient system,
// indexed by SepId, with |s->| = |s<-| = |s|.
class OrderFunction {
 public:
  OrderFunction() = default;
  OrderFunction(const SeparationSystem& system, std::vector<Rational> by_sep);

  const Rational& operator()(SepId s) const { return values_[s]; }
  const Rational& of(Oriented a) const { return values_[sep_of_[a]]; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // Injective on the separations of `system`; witness on failure.
  bool injective_on(const SeparationSystem& system,
                    std::pair<SepId, SepId>* witness = nullptr) const;

  friend bool operator==(const OrderFunction& a, const OrderFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  std::vector<SepId> sep_of_;
};

// Upper threshold k of S_k = {s : |s| < k}; nullopt stands for +infinity.
using Threshold = std::optional<Rational>;

SeparationSystem restrict_Sk(const SeparationSystem& system,
                             const OrderFunction& order, const Threshold& k);

// Distinct order values occurring in the system, increasing.
std::vector<Rational> distinct_values(const SeparationSystem& system,
                                      const OrderFunction& order);

// The nested chain L_0 = {} and L_i = {|s| <= v_i} for the distinct values
// v_1 < ... < v_m; every S_k equals one of them. `k` is the smallest
// threshold producing the level.
struct Level {
  Threshold k;
  SeparationSystem system;
};
std::vector<Level> levels(const SeparationSystem& system,
                          const OrderFunction& order);

// Every separation of `system` is below every separation of `ambient`
// outside it, i.e. system = ambient_l for some l.
bool is_initial_segment(const SeparationSystem& ambient,
                        const SeparationSystem& system,
                        const OrderFunction& order);

}  // namespace tanglekit

#endif  // TANGLEKIT_ORDER_FUNCTION_HPP_
