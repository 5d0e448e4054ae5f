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

#include "dak/critical_bid.hpp"

namespace dak {

/// A buyer's payment split by allocation outcome: what she pays if she
/// wins and what she pays if she loses (negative = she is paid). The
/// realized payment composes the two through the allocation indicator.
struct DecoupledPayment {
  Money win_payment;
  Money lose_payment;

  friend bool operator==(const DecoupledPayment& a, const DecoupledPayment& b) {
    return a.win_payment == b.win_payment && a.lose_payment == b.lose_payment;
  }
};

/// Produces the decoupled payment pair for one buyer. `profile` is the
/// report profile as submitted; implementations recompute effectiveness
/// themselves where they need it, so passing an already-effective profile
/// gives the same result. Only called for buyers whose effective report
/// is non-nil; nil reporters pay zero by definition.
class PaymentRule {
 public:
  virtual ~PaymentRule() = default;

  virtual std::string name() const = 0;

  virtual DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                                     const ReportProfile& profile, BuyerId i) const = 0;
};

/// Revenue-maximizing rule for monotonic allocation policies: the winner
/// pays her critical bid under empty diffusion, a loser pays the
/// difference between that and her critical bid under her reported
/// diffusion (so hiding neighbors never helps and full diffusion is
/// subsidized). A buyer who can never win regardless of bid and diffusion
/// pays zero.
class OptimalPayment final : public PaymentRule {
 public:
  std::string name() const override { return "optimal"; }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override;
};

/// One-parameter family of incentive-compatible rules around the same
/// critical bids:
///   win  = -a*c(r') + (1+a)*c(∅)
///   lose = -(1+a)*c(r') + (1+a)*c(∅)
/// where c is the buyer's critical bid. Alpha = 0 reproduces
/// OptimalPayment exactly; larger alpha gives buyers a larger share.
class AlphaFamilyPayment final : public PaymentRule {
 public:
  explicit AlphaFamilyPayment(Money alpha) : alpha_(std::move(alpha)) {
    if (alpha_.is_negative()) throw Error("alpha must be nonnegative, got " + alpha_.str());
  }

  const Money& alpha() const { return alpha_; }
  std::string name() const override { return "alpha:" + alpha_.str(); }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override;

 private:
  Money alpha_;
};

/// Classic externality payment: each buyer pays the welfare the others
/// lose because she participates. Intended for the efficient policy, where
/// it coincides with OptimalPayment; the welfare terms are computed from
/// bid maxima directly, not from the policy argument.
class VcgPayment final : public PaymentRule {
 public:
  std::string name() const override { return "vcg"; }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override;
};

/// Deliberately broken rule for negative testing: the winner pays her own
/// bid, losers pay nothing. Bid-dependent, so truthful bidding is not a
/// dominant strategy.
class FirstPricePayment final : public PaymentRule {
 public:
  std::string name() const override { return "first-price"; }
  DecoupledPayment decoupled(const AllocationPolicy& policy, const SocialGraph& graph,
                             const ReportProfile& profile, BuyerId i) const override;
};

}  // namespace dak
