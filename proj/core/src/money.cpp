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

#include "dak/money.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>

namespace dak {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("money value out of 64-bit range");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Money Money::reduced(i128 num, i128 den) {
  if (den == 0) throw Error("money: division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Money(0);
  i128 g = gcd128(num, den);
  Money m;
  m.num_ = narrow(num / g);
  m.den_ = narrow(den / g);
  return m;
}

Money Money::ratio(std::int64_t num, std::int64_t den) {
  return reduced(static_cast<i128>(num), static_cast<i128>(den));
}

Money operator+(const Money& a, const Money& b) {
  return Money::reduced(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Money operator-(const Money& a, const Money& b) {
  return Money::reduced(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                        static_cast<i128>(a.den_) * b.den_);
}

Money operator*(const Money& a, const Money& b) {
  return Money::reduced(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Money operator/(const Money& a, const Money& b) {
  if (b.num_ == 0) throw Error("money: division by zero");
  return Money::reduced(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
}

Money Money::operator-() const {
  Money m;
  m.num_ = narrow(-static_cast<i128>(num_));
  m.den_ = den_;
  return m;
}

bool operator<(const Money& a, const Money& b) {
  return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
}

Money Money::parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> Money {
    throw ParseError("not a money literal: '" + std::string(original) + "'");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return fail();

  auto digits = [&](std::string_view s, i128& out) -> bool {
    if (s.empty()) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
      if (out > static_cast<i128>(std::numeric_limits<std::int64_t>::max()) * 10) {
        throw OverflowError("money literal too large: '" + std::string(original) + "'");
      }
    }
    return true;
  };

  i128 num = 0;
  i128 den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    i128 p = 0, q = 0;
    if (!digits(text.substr(0, slash), p) || !digits(text.substr(slash + 1), q)) return fail();
    if (q == 0) return fail();
    num = p;
    den = q;
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    i128 w = 0, f = 0;
    if (!whole.empty() && !digits(whole, w)) return fail();
    if (!frac.empty() && !digits(frac, f)) return fail();
    for (std::size_t i = 0; i < frac.size(); ++i) {
      den *= 10;
      if (den > static_cast<i128>(std::numeric_limits<std::int64_t>::max())) {
        throw OverflowError("money literal has too many decimal places: '" +
                            std::string(original) + "'");
      }
    }
    num = w * den + f;
  } else {
    if (!digits(text, num)) return fail();
  }
  return reduced(negative ? -num : num, den);
}

std::string Money::str() const {
  if (den_ == 1) return std::to_string(num_);

  // Finite decimal expansion exists iff den = 2^a * 5^b.
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

  int places = twos > fives ? twos : fives;
  i128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  i128 scaled = static_cast<i128>(num_) * (scale / den_);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;

  std::string digits;
  for (i128 v = scaled; v > 0; v /= 10) {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
  }
  while (static_cast<int>(digits.size()) <= places) digits.insert(digits.begin(), '0');

  std::string out = digits.substr(0, digits.size() - places) + "." +
                    digits.substr(digits.size() - places);
  while (out.back() == '0') out.pop_back();
  if (out.back() == '.') out.pop_back();
  return (neg ? "-" : "") + out;
}

std::ostream& operator<<(std::ostream& os, const Money& m) { return os << m.str(); }

}  // namespace dak
