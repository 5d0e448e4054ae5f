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

#include "dak/payment.hpp"

namespace dak {

namespace {

struct CriticalPair {
  ExtendedBid empty;     // critical bid under empty diffusion
  ExtendedBid reported;  // critical bid under the reported diffusion
};

/// Both critical bids a decoupled rule needs for buyer i, with the
/// infinite cases classified. Returns nullopt for an unlucky buyer (both
/// infinite) — payments are zero then, since the paper-side formulas have
/// no value for her and zero keeps her payment independent of everything
/// she can do.
std::optional<CriticalPair> critical_pair(const AllocationPolicy& policy,
                                          const SocialGraph& graph,
                                          const ReportProfile& profile, BuyerId i) {
  const Report& report = profile[i];
  if (report.is_nil()) throw Error("decoupled payments are undefined for nil reporters");

  CriticalPair pair{critical_bid(policy, graph, profile, i, IdSet()),
                    critical_bid(policy, graph, profile, i, report.diffusion())};
  if (pair.empty.is_infinite() && pair.reported.is_infinite()) return std::nullopt;
  if (pair.empty.is_infinite()) {
    // Shrinking the diffusion set can only remove competitors, so a finite
    // critical bid with more diffusion forces one with less.
    throw PolicyInconsistencyError("policy '" + policy.name() +
                                   "' is not monotonic: buyer " + std::to_string(i) +
                                   " has an infinite critical bid under empty diffusion but a "
                                   "finite one under her reported diffusion");
  }
  if (pair.reported.is_infinite()) {
    throw PolicyInconsistencyError(
        "payment undefined: buyer " + std::to_string(i) + " can win under empty diffusion but "
        "never under her reported diffusion (policy '" + policy.name() + "')");
  }
  return pair;
}

}  // namespace

DecoupledPayment OptimalPayment::decoupled(const AllocationPolicy& policy,
                                           const SocialGraph& graph,
                                           const ReportProfile& profile, BuyerId i) const {
  const auto pair = critical_pair(policy, graph, profile, i);
  if (!pair) return {Money(0), Money(0)};
  const Money& empty = pair->empty.value();
  const Money& reported = pair->reported.value();
  return {empty, empty - reported};
}

DecoupledPayment AlphaFamilyPayment::decoupled(const AllocationPolicy& policy,
                                               const SocialGraph& graph,
                                               const ReportProfile& profile, BuyerId i) const {
  const auto pair = critical_pair(policy, graph, profile, i);
  if (!pair) return {Money(0), Money(0)};
  const Money& empty = pair->empty.value();
  const Money& reported = pair->reported.value();
  const Money shift = (Money(1) + alpha_) * empty;
  return {-(alpha_ * reported) + shift, -((Money(1) + alpha_) * reported) + shift};
}

DecoupledPayment VcgPayment::decoupled(const AllocationPolicy& /*policy*/,
                                       const SocialGraph& graph, const ReportProfile& profile,
                                       BuyerId i) const {
  if (profile[i].is_nil()) throw Error("decoupled payments are undefined for nil reporters");

  // Highest bid among buyers in `who` after recomputing effectiveness.
  auto top_bid = [&](const ReportProfile& p, const IdSet& who) {
    const ReportProfile eff = effective_profile(graph, p);
    Money best(0);
    who.for_each([&](BuyerId j) {
      if (!eff[j].is_nil() && eff[j].bid() > best) best = eff[j].bid();
    });
    return best;
  };

  // Welfare without i's participation at all, and the best the others
  // reach while i still diffuses as reported. The latter equals the
  // realized welfare whenever i loses, which is the only case where the
  // lose payment is charged.
  const Money welfare_without_i =
      top_bid(profile.with(graph, i, Report::nil()), graph.all_buyers());
  const Money others_best = top_bid(profile, graph.all_buyers() - IdSet{i});
  return {welfare_without_i, welfare_without_i - others_best};
}

DecoupledPayment FirstPricePayment::decoupled(const AllocationPolicy& /*policy*/,
                                              const SocialGraph& /*graph*/,
                                              const ReportProfile& profile, BuyerId i) const {
  if (profile[i].is_nil()) throw Error("decoupled payments are undefined for nil reporters");
  return {profile[i].bid(), Money(0)};
}

}  // namespace dak
