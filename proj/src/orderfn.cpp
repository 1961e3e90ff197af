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

#include "tanglekit/orderfn.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "tanglekit/error.hpp"
#include "tanglekit/forbidden.hpp"

namespace tanglekit {

bool refines(const SeparationSystem& system, const OrderFunction& refined,
             const OrderFunction& base, std::pair<SepId, SepId>* witness) {
  for (SepId r : system.separations()) {
    for (SepId s : system.separations()) {
      if (base(r) < base(s) && !(refined(r) < refined(s))) {
        if (witness) *witness = {r, s};
        return false;
      }
    }
  }
  return true;
}

std::vector<Rational> indicator(const Universe& u, Oriented t) {
  std::vector<Rational> out(u.size(), Rational(1));
  for (Oriented s : u.system().down(t)) out[s] = 0;
  return out;
}

Iota lexicographic_iota(const Universe& u) {
  Iota iota(u.size(), kNoDigit);
  std::size_t next = 0;
  for (Oriented a : u.system().members()) iota[a] = next++;
  return iota;
}

void check_iota(const Universe& u, const Iota& iota) {
  const OrientedSet& m = u.system().members();
  std::vector<bool> hit(m.size(), false);
  if (iota.size() != u.size())
    throw Error(ErrorKind::kPrecondition, "iota has the wrong size");
  for (Oriented a : m) {
    if (iota[a] >= m.size() || hit[iota[a]])
      throw Error(ErrorKind::kPrecondition, "iota is not a bijection",
                  {OrientedSet{a}});
    hit[iota[a]] = true;
  }
}

BigInt gamma(const Universe& u, unsigned n, const Iota& iota, Oriented s) {
  BigInt total = 0, power;
  for (Oriented t : u.system().members()) {
    if (u.system().leq(s, t)) continue;
    mpz_ui_pow_ui(power.get_mpz_t(), n, iota[t]);
    total += power;
  }
  return total;
}

OrderFunction symmetrize(const Universe& u, const std::vector<Rational>& f) {
  const SeparationSystem& sys = u.system();
  std::vector<Rational> w(sys.ambient_separations());
  for (SepId s = 0; s < w.size(); ++s) {
    Oriented a = sys.orientations(s)[0];
    w[s] = f[a] + f[sys.inv(a)];
  }
  return OrderFunction(sys, std::move(w));
}

Refinement refine_injective(const Universe& u, const OrderFunction& order,
                            const Iota* iota_in) {
  SubmodularityWitness w;
  if (!is_submodular(u, order, &w))
    throw Error(ErrorKind::kPrecondition,
                "order function is not submodular",
                {OrientedSet{w.r, w.s}});
  Iota iota = iota_in ? *iota_in : lexicographic_iota(u);
  check_iota(u, iota);
  const SeparationSystem& sys = u.system();
  const std::vector<SepId> seps = sys.separations();

  std::set<Rational> values;
  for (SepId s : seps) values.insert(order(s));
  Refinement out;
  out.epsilon = 1;
  bool have_gap = false;
  for (auto it = values.begin(); it != values.end(); ++it) {
    auto next = std::next(it);
    if (next == values.end()) break;
    Rational gap = *next - *it;
    if (!have_gap || gap < out.epsilon) out.epsilon = gap;
    have_gap = true;
  }
  BigInt three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, sys.members().size());
  out.scale = out.epsilon / 2 / Rational(three_pow);
  out.scale.canonicalize();

  out.gamma.assign(sys.ambient_separations(), 0);
  std::vector<Rational> refined = order.values();
  for (SepId s : seps) {
    const auto& o = sys.orientations(s);
    out.gamma[s] = gamma(u, 3, iota, o[0]) + gamma(u, 3, iota, sys.inv(o[0]));
    Rational delta = out.scale * Rational(out.gamma[s]);
    refined[s] = order(s) + delta;
    refined[s].canonicalize();
  }
  out.order = OrderFunction(sys, std::move(refined));
  return out;
}

OrderFunction enumeration_refinement(const Universe& u,
                                     const OrderFunction& order,
                                     const Iota* iota) {
  Refinement r = refine_injective(u, order, iota);
  const SeparationSystem& sys = u.system();
  std::vector<SepId> seps = sys.separations();
  std::stable_sort(seps.begin(), seps.end(), [&](SepId a, SepId b) {
    return r.order(a) < r.order(b);
  });
  std::vector<Rational> ranks = order.values();
  for (std::size_t i = 0; i < seps.size(); ++i)
    ranks[seps[i]] = static_cast<long>(i + 1);
  return OrderFunction(sys, std::move(ranks));
}

bool tangles_preserved_under_refinement(const SeparationSystem& system,
                                        const ForbiddenFamily& family,
                                        const OrderFunction& base,
                                        const OrderFunction& refined,
                                        OrientedSet* witness) {
  std::unordered_set<OrientedSet, OrientedSetHash> refined_tangles;
  for (const Level& level : levels(system, refined))
    for (const OrientedSet& t : enumerate_tangles(level.system, family))
      refined_tangles.insert(t);
  for (const Level& level : levels(system, base)) {
    for (const OrientedSet& t : enumerate_tangles(level.system, family)) {
      if (!refined_tangles.count(t)) {
        if (witness) *witness = t;
        return false;
      }
    }
  }
  return true;
}

}  // namespace tanglekit
