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

#include "dak/network.hpp"
#include "test_support.hpp"

using namespace dak;
using dak::testing::line_instance;
using dak::testing::make_instance;
using dak::testing::random_instances;

namespace {

ReportProfile profile_of(const Instance& instance, std::vector<Report> reports) {
  return ReportProfile(instance.graph, std::move(reports));
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(SocialGraph(2, IdSet{0}, {IdSet{0}, IdSet{}}), InvalidInstanceError);  // self-loop
  CHECK_THROWS_AS(SocialGraph(2, IdSet{5}, {IdSet{}, IdSet{}}), InvalidInstanceError);   // unknown id
  CHECK_THROWS_AS(SocialGraph(1, IdSet{0}, {IdSet{}, IdSet{}}), InvalidInstanceError);   // size mismatch
  CHECK_THROWS_AS(SocialGraph(2, IdSet{0}, {IdSet{5}, IdSet{}}), InvalidInstanceError);
}

TEST_CASE("profile validation rejects diffusion outside true neighbors") {
  const Instance line = line_instance();
  CHECK_THROWS_AS(profile_of(line, {Report(Money(2), IdSet{1}), Report(Money(1), IdSet{0})}),
                  InvalidInstanceError);
  CHECK_THROWS_AS(Report(Money(-1), IdSet{}), InvalidInstanceError);  // negative bid
  CHECK_THROWS_AS(Report::nil().bid(), Error);
}

TEST_CASE("informed set on the line graph") {
  const Instance line = line_instance();

  // a forwards to b: both informed.
  auto p = profile_of(line, {Report(Money(2), IdSet{1}), Report(Money(10), IdSet{})});
  CHECK(informed_set(line.graph, p) == IdSet{0, 1});

  // a keeps quiet: b never hears of the sale.
  p = profile_of(line, {Report(Money(2), IdSet{}), Report(Money(10), IdSet{})});
  CHECK(informed_set(line.graph, p) == IdSet{0});
}

TEST_CASE("nil reporters stay informed but diffuse nothing") {
  // s -> {a, b}, a -> c; a reports nil.
  const Instance g = make_instance({0, 1}, {{2}, {}, {}}, {Money(1), Money(1), Money(1)});
  const auto p = profile_of(g, {Report::nil(), Report(Money(1), IdSet{}), Report(Money(1), IdSet{})});
  CHECK(informed_set(g.graph, p) == IdSet{0, 1});
}

TEST_CASE("effective profile nils the uninformed") {
  const Instance line = line_instance();
  const auto p = profile_of(line, {Report(Money(2), IdSet{}), Report(Money(10), IdSet{})});
  const auto eff = effective_profile(line.graph, p);
  CHECK(eff[0] == Report(Money(2), IdSet{}));
  CHECK(eff[1].is_nil());

  // Fully diffusing profile is untouched.
  const auto full = truthful_profile(line.graph, line.valuations);
  CHECK(effective_profile(line.graph, full) == full);
}

TEST_CASE("effective profile is idempotent and never revives nil") {
  for (const Instance& instance : random_instances(40, 7, 17)) {
    // Perturb: make every odd buyer nil and halve the rest's diffusion.
    std::vector<Report> reports;
    for (BuyerId i = 0; i < instance.graph.buyer_count(); ++i) {
      if (i % 2 == 1) {
        reports.push_back(Report::nil());
      } else {
        IdSet half;
        int k = 0;
        instance.graph.neighbors_of(i).for_each([&](BuyerId j) {
          if (k++ % 2 == 0) half.insert(j);
        });
        reports.push_back(Report(instance.valuations[static_cast<std::size_t>(i)], half));
      }
    }
    const ReportProfile p(instance.graph, reports);
    const auto once = effective_profile(instance.graph, p);
    const auto twice = effective_profile(instance.graph, once);
    CHECK(once == twice);
    for (BuyerId i = 0; i < p.size(); ++i) {
      if (p[i].is_nil()) CHECK(once[i].is_nil());
    }
    // Seller neighbors are always informed.
    const IdSet informed = informed_set(instance.graph, p);
    CHECK(instance.graph.seller_neighbors().subset_of(informed));
  }
}

TEST_CASE("informed set grows monotonically with diffusion sets") {
  for (const Instance& instance : random_instances(25, 7, 3)) {
    const auto truth = truthful_profile(instance.graph, instance.valuations);
    for (BuyerId i = 0; i < instance.graph.buyer_count(); ++i) {
      const auto subsets = all_subsets(instance.graph.neighbors_of(i));
      for (std::size_t s1 = 0; s1 < subsets.size(); ++s1) {
        for (std::size_t s2 = 0; s2 < subsets.size(); ++s2) {
          if (!subsets[s1].subset_of(subsets[s2])) continue;
          const Money& v = instance.valuations[static_cast<std::size_t>(i)];
          const IdSet small = informed_set(
              instance.graph, truth.with(instance.graph, i, Report(v, subsets[s1])));
          const IdSet large = informed_set(
              instance.graph, truth.with(instance.graph, i, Report(v, subsets[s2])));
          CHECK(small.subset_of(large));
        }
      }
    }
  }
}

TEST_CASE("deviations enumerate bids x subsets plus nil") {
  const Instance g =
      make_instance({0}, {{}, {}, {0, 1}}, {Money(1), Money(1), Money(1)});  // buyer 2: r = {0, 1}

  // No neighbors: bids x {∅} plus nil.
  auto devs = deviations(g.graph, 0, {Money(0), Money(1)});
  REQUIRE(devs.size() == 3);
  CHECK(devs[0] == Report(Money(0), IdSet{}));
  CHECK(devs[1] == Report(Money(1), IdSet{}));
  CHECK(devs[2].is_nil());

  // Two neighbors, three bids: 3 * 4 + 1.
  devs = deviations(g.graph, 2, {Money(0), Money(1), Money(2)});
  CHECK(devs.size() == 13);
  CHECK(devs.back().is_nil());

  // One neighbor, two bids: 2 * 2 + 1.
  const Instance line = line_instance();
  CHECK(deviations(line.graph, 0, {Money(0), Money(1)}).size() == 5);
}

TEST_CASE("deviations validate their inputs") {
  const Instance line = line_instance();
  CHECK_THROWS_AS(deviations(line.graph, 0, {}), Error);
  CHECK_THROWS_AS(deviations(line.graph, 0, {Money(1), Money(1)}), Error);
  CHECK_THROWS_AS(deviations(line.graph, 0, {Money(2), Money(1)}), Error);
}

TEST_CASE("enumeration cap fails loudly") {
  // Buyer 0 with 13 neighbors.
  std::vector<std::vector<BuyerId>> adj(14);
  for (BuyerId j = 1; j <= 13; ++j) adj[0].push_back(j);
  std::vector<Money> vals(14, Money(1));
  const Instance big = make_instance({0}, adj, vals);
  CHECK_THROWS_AS(deviations(big.graph, 0, {Money(0)}), EnumerationCapError);
  CHECK(deviations(big.graph, 0, {Money(0)}, 13).size() == (1 << 13) + 1);
}

TEST_CASE("compare_types basics") {
  CHECK(compare_types(Report(Money(5), IdSet{}), Report(Money(3), IdSet{1})) ==
        TypeOrder::GreaterEqual);
  CHECK(compare_types(Report(Money(5), IdSet{1}), Report(Money(3), IdSet{})) ==
        TypeOrder::Incomparable);
  CHECK(compare_types(Report(Money(4), IdSet{1}), Report(Money(4), IdSet{1})) == TypeOrder::Equal);
  CHECK(compare_types(Report(Money(3), IdSet{1, 2}), Report(Money(5), IdSet{1})) ==
        TypeOrder::LessEqual);
  CHECK_THROWS_AS(compare_types(Report::nil(), Report(Money(1), IdSet{})), Error);
}

TEST_CASE("compare_types is transitive over a sampled type set") {
  std::vector<Report> types;
  for (int bid : {0, 2, 5}) {
    for (const IdSet& s : {IdSet{}, IdSet{1}, IdSet{2}, IdSet{1, 2}}) {
      types.push_back(Report(Money(bid), s));
    }
  }
  auto ge = [](const Report& a, const Report& b) {
    const TypeOrder o = compare_types(a, b);
    return o == TypeOrder::GreaterEqual || o == TypeOrder::Equal;
  };
  for (const Report& a : types) {
    for (const Report& b : types) {
      for (const Report& c : types) {
        if (ge(a, b) && ge(b, c)) CHECK(ge(a, c));
      }
    }
  }
}

TEST_CASE("all_subsets is an ascending counter starting at the empty set") {
  const auto subsets = all_subsets(IdSet{1, 3});
  REQUIRE(subsets.size() == 4);
  CHECK(subsets[0] == IdSet{});
  CHECK(subsets[1] == IdSet{1});
  CHECK(subsets[2] == IdSet{3});
  CHECK(subsets[3] == IdSet{1, 3});
}
