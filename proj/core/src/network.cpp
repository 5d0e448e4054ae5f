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

#include "dak/network.hpp"

namespace dak {

ReportProfile truthful_profile(const SocialGraph& graph, const std::vector<Money>& valuations) {
  if (static_cast<BuyerId>(valuations.size()) != graph.buyer_count()) {
    throw InvalidInstanceError("valuation count does not match buyer count");
  }
  std::vector<Report> reports;
  reports.reserve(valuations.size());
  for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
    reports.emplace_back(valuations[static_cast<std::size_t>(i)], graph.neighbors_of(i));
  }
  return ReportProfile(graph, std::move(reports));
}

IdSet informed_set(const SocialGraph& graph, const ReportProfile& profile) {
  IdSet informed = graph.seller_neighbors();
  for (;;) {
    IdSet next = informed;
    informed.for_each([&](BuyerId i) {
      const Report& r = profile[i];
      if (!r.is_nil()) next |= r.diffusion();
    });
    if (next == informed) return informed;
    informed = next;
  }
}

ReportProfile effective_profile(const SocialGraph& graph, const ReportProfile& profile) {
  const IdSet informed = informed_set(graph, profile);
  std::vector<Report> reports = profile.reports();
  for (BuyerId i = 0; i < profile.size(); ++i) {
    if (!informed.contains(i)) reports[static_cast<std::size_t>(i)] = Report::nil();
  }
  return ReportProfile::trusted(std::move(reports));
}

std::vector<IdSet> all_subsets(const IdSet& mask, int neighbor_cap) {
  const std::vector<BuyerId> members = mask.to_vector();
  if (static_cast<int>(members.size()) > neighbor_cap) {
    throw EnumerationCapError("neighbor set of size " + std::to_string(members.size()) +
                              " exceeds the enumeration cap of " + std::to_string(neighbor_cap));
  }
  std::vector<IdSet> subsets;
  subsets.reserve(1ULL << members.size());
  for (std::uint64_t counter = 0; counter < (1ULL << members.size()); ++counter) {
    IdSet s;
    for (std::size_t bit = 0; bit < members.size(); ++bit) {
      if ((counter >> bit) & 1) s.insert(members[bit]);
    }
    subsets.push_back(s);
  }
  return subsets;
}

std::vector<Report> deviations(const SocialGraph& graph, BuyerId i,
                               const std::vector<Money>& bid_candidates, int neighbor_cap) {
  if (bid_candidates.empty()) throw Error("deviations: empty bid candidate list");
  for (std::size_t k = 0; k + 1 < bid_candidates.size(); ++k) {
    if (!(bid_candidates[k] < bid_candidates[k + 1])) {
      throw Error("deviations: bid candidates must be sorted and distinct");
    }
  }
  std::vector<Report> out;
  const std::vector<IdSet> subsets = all_subsets(graph.neighbors_of(i), neighbor_cap);
  out.reserve(subsets.size() * bid_candidates.size() + 1);
  for (const IdSet& s : subsets) {
    for (const Money& bid : bid_candidates) out.emplace_back(bid, s);
  }
  out.push_back(Report::nil());
  return out;
}

TypeOrder compare_types(const Report& a, const Report& b) {
  if (a.is_nil() || b.is_nil()) throw Error("compare_types: nil reports are not ordered");
  const bool a_ge_b = a.bid() >= b.bid() && a.diffusion().subset_of(b.diffusion());
  const bool b_ge_a = b.bid() >= a.bid() && b.diffusion().subset_of(a.diffusion());
  if (a_ge_b && b_ge_a) return TypeOrder::Equal;
  if (a_ge_b) return TypeOrder::GreaterEqual;
  if (b_ge_a) return TypeOrder::LessEqual;
  return TypeOrder::Incomparable;
}

}  // namespace dak
