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

#ifndef TANGLEKIT_ORIENTED_SET_HPP_
#define TANGLEKIT_ORIENTED_SET_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace tanglekit {

// Handle of an oriented separation. Handles index the underlying relation
// of a separation system and are shared by all of its subsystems.
using Oriented = std::uint32_t;
// Handle of an unoriented separation (an involution orbit).
using SepId = std::uint32_t;

inline constexpr Oriented kNoOriented = 0xffffffffu;
inline constexpr std::size_t kMaxOriented = 256;

// Fixed-capacity bit set over oriented handles. Iteration yields handles in
// increasing order.
class OrientedSet {
 public:
  static constexpr std::size_t kWords = kMaxOriented / 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Oriented;
    using difference_type = std::ptrdiff_t;
    using pointer = const Oriented*;
    using reference = Oriented;

    iterator() = default;
    Oriented operator*() const { return current_; }
    iterator& operator++() {
      advance(current_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.current_ == b.current_;
    }

   private:
    friend class OrientedSet;
    iterator(const OrientedSet* set, Oriented from) : set_(set) {
      advance(from);
    }
    void advance(Oriented from);

    const OrientedSet* set_ = nullptr;
    Oriented current_ = static_cast<Oriented>(kMaxOriented);
  };

  constexpr OrientedSet() = default;
  OrientedSet(std::initializer_list<Oriented> ids) {
    for (Oriented id : ids) insert(id);
  }
  template <typename Range>
  static OrientedSet from_range(const Range& ids) {
    OrientedSet out;
    for (auto id : ids) out.insert(static_cast<Oriented>(id));
    return out;
  }
  // The set {0, ..., count - 1}.
  static OrientedSet prefix(std::size_t count);

  void insert(Oriented id) { words_[id >> 6] |= bit(id); }
  void erase(Oriented id) { words_[id >> 6] &= ~bit(id); }
  bool contains(Oriented id) const {
    return id < kMaxOriented && (words_[id >> 6] & bit(id)) != 0;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool subset_of(const OrientedSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const OrientedSet& other) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }
  // Smallest handle; kNoOriented when empty.
  Oriented front() const;

  OrientedSet& operator|=(const OrientedSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  OrientedSet& operator&=(const OrientedSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  OrientedSet& operator-=(const OrientedSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend OrientedSet operator|(OrientedSet a, const OrientedSet& b) {
    return a |= b;
  }
  friend OrientedSet operator&(OrientedSet a, const OrientedSet& b) {
    return a &= b;
  }
  friend OrientedSet operator-(OrientedSet a, const OrientedSet& b) {
    return a -= b;
  }
  friend bool operator==(const OrientedSet&, const OrientedSet&) = default;

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(); }

  std::vector<Oriented> to_vector() const;
  std::size_t hash() const;
  // "{0,3,5}"
  std::string to_string() const;

 private:
  static constexpr std::uint64_t bit(Oriented id) {
    return std::uint64_t{1} << (id & 63u);
  }
  std::array<std::uint64_t, kWords> words_{};
};

// Lexicographic comparison of the increasing handle sequences; the order in
// which every enumeration in the library reports its results.
bool lex_less(const OrientedSet& a, const OrientedSet& b);

struct OrientedSetHash {
  std::size_t operator()(const OrientedSet& s) const { return s.hash(); }
};

}  // namespace tanglekit

#endif  // TANGLEKIT_ORIENTED_SET_HPP_
