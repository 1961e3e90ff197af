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

#include "tanglekit/separation_system.hpp"

#include <string>

#include "tanglekit/error.hpp"

namespace tanglekit {
namespace {

std::string pair_text(Oriented a, Oriented b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

[[noreturn]] void fail(const std::string& axiom, Oriented a, Oriented b) {
  throw Error(ErrorKind::kValidation,
              axiom + " violated at " + pair_text(a, b),
              {OrientedSet{a, b}});
}

}  // namespace

SeparationSystem SeparationSystem::create(
    std::size_t n, std::vector<Oriented> inv,
    const std::vector<std::pair<Oriented, Oriented>>& leq,
    std::vector<std::string> labels) {
  if (n > kMaxOriented)
    throw Error(ErrorKind::kBound, "at most " + std::to_string(kMaxOriented) +
                                       " oriented separations are supported");
  if (inv.size() != n)
    throw Error(ErrorKind::kValidation, "involution table has wrong size");
  for (Oriented a = 0; a < n; ++a) {
    if (inv[a] >= n)
      throw Error(ErrorKind::kValidation,
                  "involution of " + std::to_string(a) + " out of range");
    if (inv[inv[a]] != a) fail("involution (a** = a)", a, inv[a]);
  }
  auto data = std::make_shared<PosetData>();
  data->n = n;
  data->inv = std::move(inv);
  data->up.assign(n, OrientedSet{});
  data->down.assign(n, OrientedSet{});
  for (Oriented a = 0; a < n; ++a) data->up[a].insert(a);
  for (auto [a, b] : leq) {
    if (a >= n || b >= n)
      throw Error(ErrorKind::kValidation,
                  "relation pair " + pair_text(a, b) + " out of range");
    data->up[a].insert(b);
  }
  for (Oriented a = 0; a < n; ++a) {
    for (Oriented b : data->up[a]) {
      if (b != a && data->up[b].contains(a)) fail("antisymmetry", a, b);
      if (!data->up[b].subset_of(data->up[a]))
        fail("transitivity", a, (data->up[b] - data->up[a]).front());
      const auto& iv = data->inv;
      if (!data->up[iv[b]].contains(iv[a])) fail("order reversal", a, b);
    }
  }
  for (Oriented a = 0; a < n; ++a)
    for (Oriented b : data->up[a]) data->down[b].insert(a);

  data->sep_of.assign(n, 0);
  for (Oriented a = 0; a < n; ++a) {
    Oriented b = data->inv[a];
    if (b < a) continue;
    data->sep_of[a] = data->sep_of[b] = static_cast<SepId>(data->seps.size());
    data->seps.push_back({a, b});
  }
  labels.resize(n);
  for (Oriented a = 0; a < n; ++a)
    if (labels[a].empty()) labels[a] = std::to_string(a);
  data->labels = std::move(labels);

  SeparationSystem out;
  out.members_ = OrientedSet::prefix(n);
  out.data_ = std::move(data);
  return out;
}

SeparationSystem SeparationSystem::restrict(const OrientedSet& keep) const {
  if (!keep.subset_of(members_))
    throw Error(ErrorKind::kValidation,
                "restriction is not contained in the system");
  for (Oriented a : keep)
    if (!keep.contains(inv(a)))
      throw Error(ErrorKind::kValidation,
                  "restriction is not closed under the involution",
                  {OrientedSet{a}});
  SeparationSystem out = *this;
  out.members_ = keep;
  return out;
}

std::vector<SepId> SeparationSystem::separations() const {
  std::vector<SepId> out;
  if (!data_) return out;
  for (SepId s = 0; s < data_->seps.size(); ++s)
    if (members_.contains(data_->seps[s][0])) out.push_back(s);
  return out;
}

std::size_t SeparationSystem::num_separations() const {
  return separations().size();
}

OrientedSet SeparationSystem::both(SepId s) const {
  return OrientedSet{data_->seps[s][0], data_->seps[s][1]};
}

OrientedSet SeparationSystem::separations_of(const OrientedSet& sigma) const {
  OrientedSet out;
  for (Oriented a : sigma) {
    out.insert(a);
    out.insert(inv(a));
  }
  return out;
}

OrientedSet SeparationSystem::inverse(const OrientedSet& sigma) const {
  OrientedSet out;
  for (Oriented a : sigma) out.insert(inv(a));
  return out;
}

void SeparationSystem::require_members(const OrientedSet& sigma,
                                       const char* what) const {
  if (!sigma.subset_of(members_)) {
    throw Error(ErrorKind::kPrecondition,
                std::string(what) + " contains unknown oriented separations",
                {sigma - members_});
  }
}

}  // namespace tanglekit
