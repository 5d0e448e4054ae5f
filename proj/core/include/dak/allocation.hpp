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
#include <optional>
#include <string>

#include "dak/extended_bid.hpp"
#include "dak/network.hpp"

namespace dak {

/// Maps an effective report profile to at most one winner. Implementations
/// must be deterministic and pure; the same inputs always produce the same
/// winner, and a winner's report is never nil. All built-in policies break
/// ties by smallest buyer id.
class AllocationPolicy {
 public:
  virtual ~AllocationPolicy() = default;

  virtual std::string name() const = 0;

  /// `effective` must already be an effective profile.
  virtual std::optional<BuyerId> winner(const SocialGraph& graph,
                                        const ReportProfile& effective) const = 0;

  /// True when the outcome depends only on the ordering of bids, not their
  /// magnitudes. Critical bids are computed by candidate probing for such
  /// policies; others must override custom_critical_bid.
  virtual bool comparison_based() const { return true; }

  /// Escape hatch for non-comparison-based policies: return the critical
  /// bid of buyer i fixing her diffusion set, given the other buyers'
  /// reports in `profile`. The default defers to probing.
  virtual std::optional<ExtendedBid> custom_critical_bid(const SocialGraph& /*graph*/,
                                                         const ReportProfile& /*profile*/,
                                                         BuyerId /*i*/,
                                                         const IdSet& /*diffusion*/) const {
    return std::nullopt;
  }
};

/// Highest bid among all informed participants wins.
class EfficientAllocation final : public AllocationPolicy {
 public:
  std::string name() const override { return "efficient"; }
  std::optional<BuyerId> winner(const SocialGraph& graph,
                                const ReportProfile& effective) const override;
};

/// Highest bid among the seller's direct neighbors wins; everyone deeper
/// in the network is ineligible. Degenerates to a classic sealed-bid
/// single-item auction.
class NeighborOnlyAllocation final : public AllocationPolicy {
 public:
  std::string name() const override { return "neighbor-only"; }
  std::optional<BuyerId> winner(const SocialGraph& graph,
                                const ReportProfile& effective) const override;
};

/// Highest bid among participants within `depth` diffusion hops of the
/// seller (seller neighbors are depth 1). depth >= buyer count behaves
/// like EfficientAllocation; depth 1 like NeighborOnlyAllocation.
class DepthBoundedAllocation final : public AllocationPolicy {
 public:
  explicit DepthBoundedAllocation(int depth) : depth_(depth) {
    if (depth < 1) throw Error("depth bound must be at least 1, got " + std::to_string(depth));
  }

  int depth() const { return depth_; }
  std::string name() const override { return "depth:" + std::to_string(depth_); }
  std::optional<BuyerId> winner(const SocialGraph& graph,
                                const ReportProfile& effective) const override;

 private:
  int depth_;
};

/// Deliberately broken policy for negative testing: the second-highest
/// bidder wins (the sole participant when there is only one). Not
/// value-monotonic — raising a bid from second place to first makes the
/// buyer lose.
class SecondHighestAllocation final : public AllocationPolicy {
 public:
  std::string name() const override { return "second-highest"; }
  std::optional<BuyerId> winner(const SocialGraph& graph,
                                const ReportProfile& effective) const override;
};

/// Buyers within `max_depth` diffusion hops of the seller, following only
/// non-nil reporters' diffusion edges.
IdSet depth_limited_informed(const SocialGraph& graph, const ReportProfile& profile,
                             int max_depth);

}  // namespace dak
