// Copyright 2026 The dak Authors.
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

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dak/errors.hpp"

namespace dak {

/// Buyers carry dense ids 0..n-1. The seller is not a buyer and has no id.
using BuyerId = std::int32_t;

/// A set of buyer ids, stored as a single 64-bit mask. Everything the
/// library enumerates (diffusion subsets, informed sets) is a set of
/// dense ids, so one word covers every supported instance; instances with
/// more than 64 buyers are rejected at load time.
class IdSet {
 public:
  static constexpr BuyerId kMaxIds = 64;

  constexpr IdSet() = default;
  IdSet(std::initializer_list<BuyerId> ids) {
    for (BuyerId id : ids) insert(id);
  }

  static constexpr IdSet from_mask(std::uint64_t mask) {
    IdSet s;
    s.bits_ = mask;
    return s;
  }

  /// {0, 1, ..., count-1}
  static IdSet full(BuyerId count) {
    check(count == 0 ? 0 : count - 1);
    return from_mask(count == 64 ? ~0ULL : (1ULL << count) - 1);
  }

  std::uint64_t mask() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(BuyerId id) const { return id >= 0 && id < kMaxIds && (bits_ >> id) & 1; }

  void insert(BuyerId id) {
    check(id);
    bits_ |= 1ULL << id;
  }
  void erase(BuyerId id) {
    check(id);
    bits_ &= ~(1ULL << id);
  }

  bool subset_of(const IdSet& other) const { return (bits_ & ~other.bits_) == 0; }

  friend IdSet operator|(IdSet a, IdSet b) { return from_mask(a.bits_ | b.bits_); }
  friend IdSet operator&(IdSet a, IdSet b) { return from_mask(a.bits_ & b.bits_); }
  /// Set difference.
  friend IdSet operator-(IdSet a, IdSet b) { return from_mask(a.bits_ & ~b.bits_); }

  IdSet& operator|=(IdSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend bool operator==(IdSet a, IdSet b) { return a.bits_ == b.bits_; }
  friend bool operator!=(IdSet a, IdSet b) { return a.bits_ != b.bits_; }

  /// Calls fn(id) for each member, ascending.
  template <class F>
  void for_each(F&& fn) const {
    std::uint64_t rest = bits_;
    while (rest != 0) {
      BuyerId id = static_cast<BuyerId>(std::countr_zero(rest));
      fn(id);
      rest &= rest - 1;
    }
  }

  std::vector<BuyerId> to_vector() const {
    std::vector<BuyerId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](BuyerId id) { out.push_back(id); });
    return out;
  }

 private:
  static void check(BuyerId id) {
    if (id < 0 || id >= kMaxIds) {
      throw InvalidInstanceError("buyer id " + std::to_string(id) + " outside supported range [0, " +
                                 std::to_string(kMaxIds) + ")");
    }
  }

  std::uint64_t bits_ = 0;
};

}  // namespace dak
