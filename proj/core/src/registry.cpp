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

#include "dak/registry.hpp"

#include <charconv>

namespace dak {

namespace {

bool consume_prefix(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

}  // namespace

std::unique_ptr<AllocationPolicy> make_policy(std::string_view name) {
  std::string_view rest = name;
  if (name == "efficient") return std::make_unique<EfficientAllocation>();
  if (name == "neighbor-only") return std::make_unique<NeighborOnlyAllocation>();
  if (name == "second-highest") return std::make_unique<SecondHighestAllocation>();
  if (consume_prefix(rest, "depth:")) {
    int depth = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), depth);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || depth < 1) {
      throw RegistryError("bad depth bound in policy name '" + std::string(name) +
                          "', expected depth:<positive integer>");
    }
    return std::make_unique<DepthBoundedAllocation>(depth);
  }
  throw RegistryError("unknown policy '" + std::string(name) + "'");
}

std::unique_ptr<PaymentRule> make_payment(std::string_view name) {
  std::string_view rest = name;
  if (name == "optimal") return std::make_unique<OptimalPayment>();
  if (name == "vcg") return std::make_unique<VcgPayment>();
  if (name == "first-price") return std::make_unique<FirstPricePayment>();
  if (consume_prefix(rest, "alpha:")) {
    Money alpha;
    try {
      alpha = Money::parse(rest);
    } catch (const ParseError&) {
      throw RegistryError("bad alpha in payment name '" + std::string(name) +
                          "', expected alpha:<nonnegative number>");
    }
    if (alpha.is_negative()) {
      throw RegistryError("alpha must be nonnegative in '" + std::string(name) + "'");
    }
    return std::make_unique<AlphaFamilyPayment>(alpha);
  }
  throw RegistryError("unknown payment rule '" + std::string(name) + "'");
}

std::vector<std::string> policy_names() {
  return {"efficient", "neighbor-only", "depth:<d>", "second-highest"};
}

std::vector<std::string> payment_names() {
  return {"optimal", "alpha:<a>", "vcg", "first-price"};
}

}  // namespace dak
