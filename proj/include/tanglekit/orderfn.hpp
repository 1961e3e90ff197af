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

#ifndef TANGLEKIT_ORDERFN_HPP_
#define TANGLEKIT_ORDERFN_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tanglekit/order_function.hpp"
#include "tanglekit/oriented_set.hpp"
#include "tanglekit/rational.hpp"
#include "tanglekit/universe.hpp"

namespace tanglekit {

class ForbiddenFamily;

// o(r) < o(s) implies refined(r) < refined(s) for all separations of
// `system`. The witness is a pair (r, s) where the implication fails.
bool refines(const SeparationSystem& system, const OrderFunction& refined,
             const OrderFunction& base,
             std::pair<SepId, SepId>* witness = nullptr);

// 0 on the handles below t, 1 elsewhere; indexed by ambient handle.
std::vector<Rational> indicator(const Universe& universe, Oriented t);

// Digit position of every ambient handle. Handles outside the universe's
// members map to kNoDigit.
using Iota = std::vector<std::size_t>;
inline constexpr std::size_t kNoDigit = static_cast<std::size_t>(-1);
// Rank of each member handle in increasing handle order.
Iota lexicographic_iota(const Universe& universe);
// Throws kPrecondition unless iota is a bijection onto 0..|U|-1.
void check_iota(const Universe& universe, const Iota& iota);

// Sum of n^iota(t) over the handles t of the universe with not (s <= t).
BigInt gamma(const Universe& universe, unsigned n, const Iota& iota,
             Oriented s);

// w(s) = u(s) + u(s*) as an order function on separations.
OrderFunction symmetrize(const Universe& universe, const std::vector<Rational>& u);

struct Refinement {
  OrderFunction order;
  Rational epsilon;
  Rational scale;             // delta = scale * gamma
  std::vector<BigInt> gamma;  // symmetrized base-3 value, by SepId
};

// o' = o + delta with delta = (epsilon/2) / 3^|U| * gamma. Throws
// kPrecondition if o is not submodular on the universe.
Refinement refine_injective(const Universe& universe, const OrderFunction& order,
                            const Iota* iota = nullptr);

// Ranks of refine_injective's output in 1..|U|.
OrderFunction enumeration_refinement(const Universe& universe,
                                     const OrderFunction& order,
                                     const Iota* iota = nullptr);

// Every F-tangle of every S_k under `base` is an F-tangle of some S_k'
// under `refined`. The witness is the first tangle that is not.
bool tangles_preserved_under_refinement(const SeparationSystem& system,
                                        const ForbiddenFamily& family,
                                        const OrderFunction& base,
                                        const OrderFunction& refined,
                                        OrientedSet* witness = nullptr);

}  // namespace tanglekit

#endif  // TANGLEKIT_ORDERFN_HPP_
