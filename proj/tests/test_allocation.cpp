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

#include "dak/allocation.hpp"
#include "dak/registry.hpp"
#include "test_support.hpp"

using namespace dak;
using dak::testing::chain3_instance;
using dak::testing::fork_instance;
using dak::testing::line_instance;
using dak::testing::make_instance;
using dak::testing::random_instances;

namespace {

std::optional<BuyerId> winner_of(const AllocationPolicy& policy, const Instance& instance,
                                 const ReportProfile& profile) {
  return policy.winner(instance.graph, effective_profile(instance.graph, profile));
}

std::optional<BuyerId> truthful_winner(const AllocationPolicy& policy, const Instance& instance) {
  return winner_of(policy, instance, truthful_profile(instance));
}

}  // namespace

TEST_CASE("efficient allocation picks the highest informed bid") {
  const EfficientAllocation efficient;
  CHECK(truthful_winner(efficient, line_instance()) == 1);
  CHECK(truthful_winner(efficient, fork_instance()) == 2);

  // Ties break toward the smaller id.
  const Instance tie = make_instance({0, 1}, {{}, {}}, {Money(5), Money(5)});
  CHECK(truthful_winner(efficient, tie) == 0);

  // All nil: no winner.
  const Instance line = line_instance();
  const ReportProfile all_nil(line.graph, {Report::nil(), Report::nil()});
  CHECK(!winner_of(efficient, line, all_nil).has_value());
}

TEST_CASE("uninformed high bidders cannot win") {
  const EfficientAllocation efficient;
  const Instance line = line_instance();
  // a cuts b off; b's 10 never reaches the seller.
  const ReportProfile cut(line.graph,
                          {Report(Money(2), IdSet{}), Report(Money(10), IdSet{})});
  CHECK(winner_of(efficient, line, cut) == 0);
}

TEST_CASE("neighbor-only allocation ignores deeper buyers") {
  const NeighborOnlyAllocation neighbor_only;
  // s -> {a, b}, a -> c; c bids highest but is not a seller neighbor.
  const Instance g = make_instance({0, 1}, {{2}, {}, {}}, {Money(3), Money(1), Money(5)});
  CHECK(truthful_winner(neighbor_only, g) == 0);

  // Only b participates.
  const ReportProfile only_b(g.graph,
                             {Report::nil(), Report(Money(1), IdSet{}), Report::nil()});
  CHECK(winner_of(neighbor_only, g, only_b) == 1);

  // All seller neighbors nil: no winner even though c would bid.
  const ReportProfile none(g.graph, {Report::nil(), Report::nil(), Report(Money(5), IdSet{})});
  CHECK(!winner_of(neighbor_only, g, none).has_value());
}

TEST_CASE("depth-bounded allocation") {
  CHECK_THROWS_AS(DepthBoundedAllocation(0), Error);

  // s -> a -> b -> c with bids 1, 5, 9: depth 2 reaches a and b only.
  const DepthBoundedAllocation depth2(2);
  CHECK(truthful_winner(depth2, chain3_instance()) == 1);
  CHECK(truthful_winner(DepthBoundedAllocation(3), chain3_instance()) == 2);
  CHECK(truthful_winner(DepthBoundedAllocation(1), chain3_instance()) == 0);
}

TEST_CASE("depth 1 equals neighbor-only and depth n equals efficient") {
  const NeighborOnlyAllocation neighbor_only;
  const EfficientAllocation efficient;
  for (const Instance& instance : random_instances(60, 7, 5)) {
    const DepthBoundedAllocation depth1(1);
    const DepthBoundedAllocation depth_n(instance.graph.buyer_count());
    const auto truth = truthful_profile(instance);
    CHECK(winner_of(depth1, instance, truth) == winner_of(neighbor_only, instance, truth));
    CHECK(winner_of(depth_n, instance, truth) == winner_of(efficient, instance, truth));

    // Also on a profile with some nil reporters.
    std::vector<Report> reports = truth.reports();
    for (BuyerId i = 0; i < instance.graph.buyer_count(); i += 3) {
      reports[static_cast<std::size_t>(i)] = Report::nil();
    }
    const ReportProfile holes(instance.graph, reports);
    CHECK(winner_of(depth1, instance, holes) == winner_of(neighbor_only, instance, holes));
    CHECK(winner_of(depth_n, instance, holes) == winner_of(efficient, instance, holes));
  }
}

TEST_CASE("second-highest control rewards shading") {
  const SecondHighestAllocation second;
  const Instance pair = make_instance({0, 1}, {{}, {}}, {Money(1), Money(2)});
  // Truthful: sorted (b:2, a:1), the second one wins.
  CHECK(truthful_winner(second, pair) == 0);
  // a raises to 3: now a is first and b second; b wins.
  const ReportProfile raised(pair.graph,
                             {Report(Money(3), IdSet{}), Report(Money(2), IdSet{})});
  CHECK(winner_of(second, pair, raised) == 1);
  // Sole participant still wins.
  const ReportProfile solo(pair.graph, {Report(Money(1), IdSet{}), Report::nil()});
  CHECK(winner_of(second, pair, solo) == 0);
}

TEST_CASE("registry builds policies from names") {
  CHECK(make_policy("efficient")->name() == "efficient");
  CHECK(make_policy("neighbor-only")->name() == "neighbor-only");
  CHECK(make_policy("second-highest")->name() == "second-highest");
  CHECK(make_policy("depth:3")->name() == "depth:3");
  CHECK_THROWS_AS(make_policy("depth:0"), RegistryError);
  CHECK_THROWS_AS(make_policy("depth:x"), RegistryError);
  CHECK_THROWS_AS(make_policy("nope"), RegistryError);
}
