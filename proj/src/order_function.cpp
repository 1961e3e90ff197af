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

#include "tanglekit/order_function.hpp"

#include <algorithm>
#include <map>

#include "tanglekit/error.hpp"

namespace tanglekit {

OrderFunction::OrderFunction(const SeparationSystem& system,
                             std::vector<Rational> by_sep)
    : values_(std::move(by_sep)) {
  if (values_.size() != system.ambient_separations())
    throw Error(ErrorKind::kValidation,
                "order function must assign a value to every separation");
  sep_of_ = system.data()->sep_of;
}

bool OrderFunction::injective_on(const SeparationSystem& system,
                                 std::pair<SepId, SepId>* witness) const {
  std::map<Rational, SepId> seen;
  for (SepId s : system.separations()) {
    auto [it, fresh] = seen.emplace(values_[s], s);
    if (!fresh) {
      if (witness) *witness = {it->second, s};
      return false;
    }
  }
  return true;
}

SeparationSystem restrict_Sk(const SeparationSystem& system,
                             const OrderFunction& order, const Threshold& k) {
  if (!k) return system;
  OrientedSet keep;
  for (Oriented a : system.members())
    if (order.of(a) < *k) keep.insert(a);
  return system.restrict(keep);
}

std::vector<Rational> distinct_values(const SeparationSystem& system,
                                      const OrderFunction& order) {
  std::vector<Rational> v;
  for (SepId s : system.separations()) v.push_back(order(s));
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Level> levels(const SeparationSystem& system,
                          const OrderFunction& order) {
  std::vector<Rational> v = distinct_values(system, order);
  std::vector<Level> out;
  out.push_back({v.empty() ? Threshold{} : Threshold{v[0]},
                 system.restrict(OrientedSet{})});
  for (std::size_t i = 0; i < v.size(); ++i) {
    Threshold k = i + 1 < v.size() ? Threshold{v[i + 1]} : Threshold{};
    out.push_back({k, restrict_Sk(system, order, k)});
  }
  return out;
}

bool is_initial_segment(const SeparationSystem& ambient,
                        const SeparationSystem& system,
                        const OrderFunction& order) {
  for (SepId u : system.separations()) {
    for (SepId w : ambient.separations()) {
      if (system.contains(ambient.orientations(w)[0])) continue;
      if (!(order(u) < order(w))) return false;
    }
  }
  return true;
}

}  // namespace tanglekit
