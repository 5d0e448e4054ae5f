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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dak/critical_bid.hpp"
#include "test_support.hpp"

using namespace dak;
using dak::testing::dense_critical_bid;
using dak::testing::fork_instance;
using dak::testing::line_instance;
using dak::testing::make_instance;
using dak::testing::max_valuation;
using dak::testing::random_instances;

TEST_CASE("line graph: the competitor's bid is the threshold") {
  const EfficientAllocation efficient;
  const Instance line = line_instance();
  const auto truth = truthful_profile(line);

  // Forwarding to b puts a against b's 10. Ids: a=0 < b=1, so a takes the
  // tie at 10 and the threshold is attained.
  const ExtendedBid with_b = critical_bid(efficient, line.graph, truth, 0, IdSet{1});
  CHECK(with_b == ExtendedBid::finite(Money(10), /*inclusive=*/true));

  // Keeping quiet leaves a alone in the market: she wins at any bid.
  const ExtendedBid alone = critical_bid(efficient, line.graph, truth, 0, IdSet());
  CHECK(alone == ExtendedBid::finite(Money(0), /*inclusive=*/true));

  // b faces a's 2 either way, and loses the tie to the smaller id.
  const ExtendedBid b_bid = critical_bid(efficient, line.graph, truth, 1, IdSet());
  CHECK(b_bid == ExtendedBid::finite(Money(2), /*inclusive=*/false));
}

TEST_CASE("fork graph: c is informed through a regardless of b") {
  const EfficientAllocation efficient;
  const Instance fork = fork_instance();
  const auto truth = truthful_profile(fork);
  // b (id 1) competes against a (3) and c (5) whatever she does; c has the
  // larger id, so b takes the tie at 5.
  const ExtendedBid b_empty = critical_bid(efficient, fork.graph, truth, 1, IdSet());
  CHECK(b_empty == ExtendedBid::finite(Money(5), /*inclusive=*/true));
}

TEST_CASE("unlucky buyers have infinite critical bids") {
  const NeighborOnlyAllocation neighbor_only;
  // s -> a -> b: b can never win a neighbor-only auction.
  const Instance line = line_instance();
  const auto truth = truthful_profile(line);
  CHECK(critical_bid(neighbor_only, line.graph, truth, 1, IdSet()).is_infinite());

  // A buyer cut off from the seller is unlucky under any policy.
  const EfficientAllocation efficient;
  const ReportProfile cut(line.graph, {Report(Money(2), IdSet{}), Report(Money(10), IdSet{})});
  CHECK(critical_bid(efficient, line.graph, cut, 1, IdSet()).is_infinite());
}

TEST_CASE("non-comparison-based policies are rejected without a custom method") {
  struct MagnitudePolicy : AllocationPolicy {
    std::string name() const override { return "magnitude"; }
    bool comparison_based() const override { return false; }
    std::optional<BuyerId> winner(const SocialGraph&, const ReportProfile& eff) const override {
      // Wins only with a bid of at least 100 — invisible to ordering.
      for (BuyerId i = 0; i < eff.size(); ++i) {
        if (!eff[i].is_nil() && eff[i].bid() >= Money(100)) return i;
      }
      return std::nullopt;
    }
  };
  const MagnitudePolicy policy;
  const Instance line = line_instance();
  const auto truth = truthful_profile(line);
  CHECK_THROWS_AS(critical_bid(policy, line.graph, truth, 0, IdSet{1}), UnsupportedPolicyError);

  struct WithCustom final : MagnitudePolicy {
    std::optional<ExtendedBid> custom_critical_bid(const SocialGraph&, const ReportProfile&,
                                                   BuyerId, const IdSet&) const override {
      return ExtendedBid::finite(Money(100), true);
    }
  };
  const WithCustom custom;
  CHECK(critical_bid(custom, line.graph, truth, 0, IdSet{1}) ==
        ExtendedBid::finite(Money(100), true));
}

TEST_CASE("probe scan agrees with the dense oracle on random instances") {
  const EfficientAllocation efficient;
  const NeighborOnlyAllocation neighbor_only;
  const DepthBoundedAllocation depth2(2);
  const std::vector<const AllocationPolicy*> policies{&efficient, &neighbor_only, &depth2};

  for (const Instance& instance : random_instances(60, 6, 23)) {
    const auto truth = truthful_profile(instance);
    const Money ceiling = max_valuation(instance);
    for (const AllocationPolicy* policy : policies) {
      for (BuyerId i = 0; i < instance.graph.buyer_count(); ++i) {
        for (const IdSet& subset :
             {IdSet(), instance.graph.neighbors_of(i)}) {
          const ExtendedBid fast = critical_bid(*policy, instance.graph, truth, i, subset);
          const ExtendedBid dense =
              dense_critical_bid(*policy, instance.graph, truth, i, subset, ceiling);
          CHECK(fast == dense);
        }
      }
    }
  }
}

TEST_CASE("winning is exactly bids above (or at) the threshold") {
  // Probe correctness for a value-monotonic policy: scan a fine grid and
  // compare against the admits() predicate.
  const EfficientAllocation efficient;
  for (const Instance& instance : random_instances(25, 6, 31)) {
    const auto truth = truthful_profile(instance);
    const Money limit = max_valuation(instance) + Money(1);
    for (BuyerId i = 0; i < instance.graph.buyer_count(); ++i) {
      const IdSet full = instance.graph.neighbors_of(i);
      const ExtendedBid threshold = critical_bid(efficient, instance.graph, truth, i, full);
      for (Money bid(0); bid <= limit; bid += Money::ratio(1, 4)) {
        const auto w = efficient.winner(
            instance.graph,
            effective_profile(instance.graph, truth.with(instance.graph, i, Report(bid, full))));
        CHECK((w && *w == i) == threshold.admits(bid));
      }
    }
  }
}

TEST_CASE("extended bid ordering treats infinity as top") {
  const ExtendedBid five = ExtendedBid::finite(Money(5), true);
  const ExtendedBid six = ExtendedBid::finite(Money(6), false);
  const ExtendedBid inf = ExtendedBid::infinite();
  CHECK(ExtendedBid::numeric_less_equal(five, six));
  CHECK(ExtendedBid::numeric_less_equal(five, inf));
  CHECK(ExtendedBid::numeric_less_equal(inf, inf));
  CHECK(!ExtendedBid::numeric_less_equal(inf, six));
  CHECK(ExtendedBid::numeric_less_equal(five, five));
  CHECK_THROWS_AS(inf.value(), Error);
}
