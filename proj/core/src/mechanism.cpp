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

#include "dak/mechanism.hpp"

namespace dak {

namespace {

void require_feasible(const AllocationPolicy& policy, const ReportProfile& effective,
                      const std::optional<BuyerId>& winner) {
  if (!winner) return;
  if (*winner < 0 || *winner >= effective.size() || effective[*winner].is_nil()) {
    throw PolicyInconsistencyError("policy '" + policy.name() +
                                   "' allocated the item to a non-participant");
  }
}

}  // namespace

MechanismOutcome run_mechanism(const AllocationPolicy& policy, const PaymentRule& payment,
                               const SocialGraph& graph, const ReportProfile& profile) {
  const ReportProfile effective = effective_profile(graph, profile);
  const std::optional<BuyerId> winner = policy.winner(graph, effective);
  require_feasible(policy, effective, winner);

  MechanismOutcome outcome;
  outcome.winner = winner;
  outcome.payments.assign(static_cast<std::size_t>(effective.size()), Money(0));
  for (BuyerId i = 0; i < effective.size(); ++i) {
    if (effective[i].is_nil()) continue;
    const DecoupledPayment pay = payment.decoupled(policy, graph, effective, i);
    outcome.payments[static_cast<std::size_t>(i)] =
        (winner && *winner == i) ? pay.win_payment : pay.lose_payment;
    outcome.revenue += outcome.payments[static_cast<std::size_t>(i)];
  }
  outcome.welfare = winner ? effective[*winner].bid() : Money(0);
  return outcome;
}

Money utility(const Money& true_valuation, const MechanismOutcome& outcome, BuyerId i) {
  const Money payment = outcome.payments.at(static_cast<std::size_t>(i));
  if (outcome.winner && *outcome.winner == i) return true_valuation - payment;
  return -payment;
}

Money utility_of(const AllocationPolicy& policy, const PaymentRule& payment,
                 const SocialGraph& graph, const ReportProfile& profile, BuyerId i,
                 const Money& true_valuation) {
  const ReportProfile effective = effective_profile(graph, profile);
  const std::optional<BuyerId> winner = policy.winner(graph, effective);
  require_feasible(policy, effective, winner);
  if (effective[i].is_nil()) return Money(0);
  const DecoupledPayment pay = payment.decoupled(policy, graph, effective, i);
  if (winner && *winner == i) return true_valuation - pay.win_payment;
  return -pay.lose_payment;
}

}  // namespace dak
