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

#include "tanglekit/oriented_set.hpp"

#include <algorithm>
#include <functional>

namespace tanglekit {

void OrientedSet::iterator::advance(Oriented from) {
  for (std::size_t w = from >> 6; w < kWords; ++w) {
    std::uint64_t bits = set_->words_[w];
    if (w == (from >> 6)) bits &= ~std::uint64_t{0} << (from & 63u);
    if (bits != 0) {
      current_ = static_cast<Oriented>(w * 64 + std::countr_zero(bits));
      return;
    }
  }
  current_ = static_cast<Oriented>(kMaxOriented);
}

OrientedSet OrientedSet::prefix(std::size_t count) {
  OrientedSet out;
  for (std::size_t i = 0; i < count && i < kMaxOriented; ++i)
    out.insert(static_cast<Oriented>(i));
  return out;
}

Oriented OrientedSet::front() const {
  auto it = begin();
  return it == end() ? kNoOriented : *it;
}

std::vector<Oriented> OrientedSet::to_vector() const {
  std::vector<Oriented> out;
  for (Oriented id : *this) out.push_back(id);
  return out;
}

std::size_t OrientedSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ull;
  return h;
}

std::string OrientedSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Oriented id : *this) {
    if (!first) out += ',';
    out += std::to_string(id);
    first = false;
  }
  return out + "}";
}

bool lex_less(const OrientedSet& a, const OrientedSet& b) {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace tanglekit
