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

#include "dak/payment.hpp"

namespace dak {

struct MechanismOutcome {
  std::optional<BuyerId> winner;
  std::vector<Money> payments;  // indexed by buyer id; 0 for nil reporters
  Money revenue;                // sum of all payments
  Money welfare;                // winner's reported bid, 0 when no winner
};

/// Runs a full auction: computes the effective profile, asks the policy
/// for a winner (validating feasibility), charges every participating
/// buyer her win or lose payment, and totals revenue and welfare.
MechanismOutcome run_mechanism(const AllocationPolicy& policy, const PaymentRule& payment,
                               const SocialGraph& graph, const ReportProfile& profile);

/// Quasilinear utility of buyer i: allocation times her TRUE valuation,
/// minus her payment.
Money utility(const Money& true_valuation, const MechanismOutcome& outcome, BuyerId i);

/// Buyer i's utility only — same numbers run_mechanism would produce, but
/// skips the other buyers' payments. The verifier's inner loops live here.
Money utility_of(const AllocationPolicy& policy, const PaymentRule& payment,
                 const SocialGraph& graph, const ReportProfile& profile, BuyerId i,
                 const Money& true_valuation);

}  // namespace dak
