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

#include <vector>

#include "dak/generator.hpp"
#include "dak/instance.hpp"
#include "dak/mechanism.hpp"

namespace dak::testing {

inline Instance make_instance(std::vector<BuyerId> seller, std::vector<std::vector<BuyerId>> adj,
                              std::vector<Money> valuations, std::string name = "") {
  IdSet s;
  for (BuyerId id : seller) s.insert(id);
  std::vector<IdSet> neighbors;
  neighbors.reserve(adj.size());
  for (const auto& row : adj) {
    IdSet set;
    for (BuyerId id : row) set.insert(id);
    neighbors.push_back(set);
  }
  return Instance{SocialGraph(static_cast<BuyerId>(adj.size()), s, std::move(neighbors)),
                  std::move(valuations), std::move(name), std::nullopt};
}

/// s -> a -> b with valuations (2, 10). a is the only seller neighbor; b
/// joins only if a forwards the sale.
inline Instance line_instance() {
  return make_instance({0}, {{1}, {}}, {Money(2), Money(10)}, "line");
}

/// s -> {a, b}, a -> c, valuations (3, 1, 5).
inline Instance fork_instance() {
  return make_instance({0, 1}, {{2}, {}, {}}, {Money(3), Money(1), Money(5)}, "fork");
}

/// s -> a -> b -> c, valuations (1, 5, 9).
inline Instance chain3_instance() {
  return make_instance({0}, {{1}, {2}, {}}, {Money(1), Money(5), Money(9)}, "chain3");
}

inline Instance single_instance(Money v) {
  return make_instance({0}, {{}}, {std::move(v)}, "single");
}

/// Mixed tree/gnp batch with integer valuations from {0,1,2,4}, n cycling
/// 1..max_n. Deterministic in `seed`.
inline std::vector<Instance> random_instances(std::size_t count, BuyerId max_n,
                                              std::uint64_t seed) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GenParams params;
    params.n = static_cast<BuyerId>(1 + k % static_cast<std::size_t>(max_n));
    params.model = k % 2 == 0 ? GraphModel::Tree : GraphModel::Gnp;
    params.edge_probability = 0.4;
    params.seed = seed * 1000003ULL + k;
    out.push_back(generate_instance(params));
  }
  return out;
}

/// Independent critical-bid oracle: probes the policy on a dense
/// quarter-step bid grid over [0, ceiling+1]. Valid whenever every other
/// participant's bid is an integer (all desk and generated instances),
/// since the true threshold then lies on the quarter grid: the first
/// winning probe is either the threshold itself (attained) or a quarter
/// step above it (not attained). Shares nothing with the candidate-scan
/// path in critical_bid().
inline ExtendedBid dense_critical_bid(const AllocationPolicy& policy, const SocialGraph& graph,
                                      const ReportProfile& profile, BuyerId i,
                                      const IdSet& diffusion, const Money& ceiling) {
  const Money quarter = Money::ratio(1, 4);
  for (Money bid(0); bid <= ceiling + Money(1); bid += quarter) {
    const auto w =
        policy.winner(graph, effective_profile(graph, profile.with(graph, i, Report(bid, diffusion))));
    if (w && *w == i) {
      if (bid.is_integer()) return ExtendedBid::finite(bid, /*inclusive=*/true);
      return ExtendedBid::finite(bid - quarter, /*inclusive=*/false);
    }
  }
  return ExtendedBid::infinite();
}

inline Money max_valuation(const Instance& instance) {
  Money best(0);
  for (const Money& v : instance.valuations) {
    if (v > best) best = v;
  }
  return best;
}

/// Broken rule: the loser's rebate has its sign flipped, so hiding
/// neighbors lowers what a loser pays. Keeps bid-independence and the
/// critical-bid difference identity; breaks diffusion monotonicity.
class SignFlippedPayment final : public PaymentRule {
 public:
  std::string name() const override { return "sign-flipped"; }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override {
    const ExtendedBid empty = critical_bid(policy, graph, profile, i, IdSet());
    const ExtendedBid reported =
        critical_bid(policy, graph, profile, i, profile[i].diffusion());
    if (empty.is_infinite() || reported.is_infinite()) return {Money(0), Money(0)};
    const Money lose = reported.value() - empty.value();
    return {lose + reported.value(), lose};
  }
};

/// Broken rule: losers are charged a multiple of their critical bid
/// instead of rebated. Truthful losers can end up with negative utility.
class LoserChargingAlphaPayment final : public PaymentRule {
 public:
  explicit LoserChargingAlphaPayment(Money alpha) : alpha_(std::move(alpha)) {}
  std::string name() const override { return "loser-charging-alpha:" + alpha_.str(); }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override {
    const ExtendedBid reported =
        critical_bid(policy, graph, profile, i, profile[i].diffusion());
    if (reported.is_infinite()) return {Money(0), Money(0)};
    const Money lose = (Money(1) + alpha_) * reported.value();
    return {lose + reported.value(), lose};
  }

 private:
  Money alpha_;
};

/// Incentive-compatible but not individually rational: the alpha family
/// with its shift one unit above the bound, so every participant is
/// charged one unit more than the revenue-optimal rule allows.
class OvershiftAlphaPayment final : public PaymentRule {
 public:
  explicit OvershiftAlphaPayment(Money alpha) : alpha_(std::move(alpha)) {}
  std::string name() const override { return "overshift-alpha:" + alpha_.str(); }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override {
    const ExtendedBid empty = critical_bid(policy, graph, profile, i, IdSet());
    const ExtendedBid reported =
        critical_bid(policy, graph, profile, i, profile[i].diffusion());
    if (empty.is_infinite() || reported.is_infinite()) return {Money(0), Money(0)};
    const Money shift = (Money(1) + alpha_) * empty.value() + Money(1);
    return {-(alpha_ * reported.value()) + shift,
            -((Money(1) + alpha_) * reported.value()) + shift};
  }

 private:
  Money alpha_;
};

/// The alpha family with the shift term dropped entirely. Still satisfies
/// every incentive property — the shift only moves payments toward the
/// seller — so this rule is a control for the controls: incentive
/// compatible, individually rational, and strictly revenue-dominated.
class UnshiftedAlphaPayment final : public PaymentRule {
 public:
  explicit UnshiftedAlphaPayment(Money alpha) : alpha_(std::move(alpha)) {}
  std::string name() const override { return "unshifted-alpha:" + alpha_.str(); }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override {
    const ExtendedBid reported =
        critical_bid(policy, graph, profile, i, profile[i].diffusion());
    if (reported.is_infinite()) return {Money(0), Money(0)};
    return {-(alpha_ * reported.value()), -((Money(1) + alpha_) * reported.value())};
  }

 private:
  Money alpha_;
};

}  // namespace dak::testing
