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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dak/errors.hpp"

namespace dak {

/// Exact money value: a reduced rational over int64 with a positive
/// denominator. All bids, payments, revenues and welfare values in the
/// library are Money; there is no floating point anywhere on the money
/// path, so equality and ordering are exact. Operations that would leave
/// the 64-bit range throw OverflowError instead of wrapping.
class Money {
 public:
  constexpr Money() = default;
  constexpr Money(std::int64_t units) : num_(units) {}  // NOLINT(runtime/explicit)

  /// num/den, reduced; den must be nonzero.
  static Money ratio(std::int64_t num, std::int64_t den);

  /// Accepts "12", "-3", "2.50", ".5", "7/2". Anything else throws ParseError.
  static Money parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  /// Canonical text form: integer ("12"), finite decimal ("2.5") when the
  /// denominator is of the form 2^a*5^b, otherwise "num/den". parse(str())
  /// round-trips exactly.
  std::string str() const;

  /// Lossy; for table display only.
  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend Money operator+(const Money& a, const Money& b);
  friend Money operator-(const Money& a, const Money& b);
  friend Money operator*(const Money& a, const Money& b);
  friend Money operator/(const Money& a, const Money& b);
  Money operator-() const;

  Money& operator+=(const Money& o) { return *this = *this + o; }
  Money& operator-=(const Money& o) { return *this = *this - o; }
  Money& operator*=(const Money& o) { return *this = *this * o; }

  friend bool operator==(const Money& a, const Money& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Money& a, const Money& b) { return !(a == b); }
  friend bool operator<(const Money& a, const Money& b);
  friend bool operator>(const Money& a, const Money& b) { return b < a; }
  friend bool operator<=(const Money& a, const Money& b) { return !(b < a); }
  friend bool operator>=(const Money& a, const Money& b) { return !(a < b); }

 private:
  static Money reduced(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;  // > 0, gcd(|num|, den) == 1
};

std::ostream& operator<<(std::ostream& os, const Money& m);

}  // namespace dak
