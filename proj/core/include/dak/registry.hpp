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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dak/mechanism.hpp"

namespace dak {

/// Policies by name: "efficient", "neighbor-only", "depth:<d>",
/// "second-highest". Throws RegistryError for anything else.
std::unique_ptr<AllocationPolicy> make_policy(std::string_view name);

/// Payment rules by name: "optimal", "alpha:<a>" (a nonnegative, e.g.
/// alpha:0.5), "vcg", "first-price". Throws RegistryError otherwise.
std::unique_ptr<PaymentRule> make_payment(std::string_view name);

std::vector<std::string> policy_names();
std::vector<std::string> payment_names();

}  // namespace dak
