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

#include <optional>
#include <string>

#include "dak/money.hpp"

namespace dak {

/// A critical bid: the infimum bid with which a buyer wins. Finite values
/// carry an inclusivity flag — with deterministic tie-breaking the infimum
/// may or may not be attained (inclusive = the buyer wins when bidding
/// exactly the value). Infinite marks a buyer who cannot win at any bid.
/// Payment formulas use the numeric value only; the flag exists for
/// probe-correctness checks.
class ExtendedBid {
 public:
  static ExtendedBid infinite() { return ExtendedBid(); }
  static ExtendedBid finite(Money value, bool inclusive) {
    if (value.is_negative()) throw Error("critical bid cannot be negative");
    ExtendedBid b;
    b.finite_.emplace(Finite{std::move(value), inclusive});
    return b;
  }

  bool is_infinite() const { return !finite_.has_value(); }
  bool is_finite() const { return finite_.has_value(); }

  const Money& value() const {
    require();
    return finite_->value;
  }
  bool inclusive() const {
    require();
    return finite_->inclusive;
  }

  /// Numeric order with infinity on top; inclusivity flags are ignored.
  static bool numeric_less_equal(const ExtendedBid& a, const ExtendedBid& b) {
    if (b.is_infinite()) return true;
    if (a.is_infinite()) return false;
    return a.value() <= b.value();
  }

  /// Does a bid of `bid` win against this threshold?
  bool admits(const Money& bid) const {
    if (is_infinite()) return false;
    return inclusive() ? bid >= value() : bid > value();
  }

  friend bool operator==(const ExtendedBid& a, const ExtendedBid& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.value() == b.value() && a.inclusive() == b.inclusive();
  }
  friend bool operator!=(const ExtendedBid& a, const ExtendedBid& b) { return !(a == b); }

  std::string str() const {
    if (is_infinite()) return "inf";
    return finite_->value.str() + (finite_->inclusive ? " (inclusive)" : " (exclusive)");
  }

 private:
  struct Finite {
    Money value;
    bool inclusive;
  };

  void require() const {
    if (!finite_) throw Error("infinite critical bid has no numeric value");
  }

  std::optional<Finite> finite_;
};

}  // namespace dak
