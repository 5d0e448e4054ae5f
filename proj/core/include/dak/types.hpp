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

#include "dak/ids.hpp"
#include "dak/money.hpp"

namespace dak {

/// A buyer's private type: her valuation and her true neighbor set.
struct TrueType {
  Money valuation;
  IdSet neighbors;
};

/// What a buyer submits: either nil (uninformed, or informed but not
/// joining) or a bid together with the subset of neighbors she forwards
/// the sale to. A nil report forwards nothing.
class Report {
 public:
  Report() = default;  // nil
  Report(Money bid, IdSet diffusion) : body_(Body{std::move(bid), diffusion}) {
    if (body_->bid.is_negative()) {
      throw InvalidInstanceError("bid must be nonnegative, got " + body_->bid.str());
    }
  }

  static Report nil() { return Report(); }

  bool is_nil() const { return !body_.has_value(); }

  const Money& bid() const {
    require();
    return body_->bid;
  }
  const IdSet& diffusion() const {
    require();
    return body_->diffusion;
  }

  friend bool operator==(const Report& a, const Report& b) {
    if (a.is_nil() || b.is_nil()) return a.is_nil() == b.is_nil();
    return a.body_->bid == b.body_->bid && a.body_->diffusion == b.body_->diffusion;
  }
  friend bool operator!=(const Report& a, const Report& b) { return !(a == b); }

  std::string str() const {
    if (is_nil()) return "nil";
    std::string out = "(" + body_->bid.str() + ", {";
    bool first = true;
    body_->diffusion.for_each([&](BuyerId id) {
      if (!first) out += ",";
      out += std::to_string(id);
      first = false;
    });
    return out + "})";
  }

 private:
  struct Body {
    Money bid;
    IdSet diffusion;
  };

  void require() const {
    if (!body_) throw Error("nil report has no bid or diffusion set");
  }

  std::optional<Body> body_;
};

}  // namespace dak
