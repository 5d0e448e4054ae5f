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

#include "dak/critical_bid.hpp"

#include <algorithm>

namespace dak {

ExtendedBid critical_bid(const AllocationPolicy& policy, const SocialGraph& graph,
                         const ReportProfile& profile, BuyerId i, const IdSet& diffusion) {
  if (!policy.comparison_based()) {
    if (auto custom = policy.custom_critical_bid(graph, profile, i, diffusion)) return *custom;
    throw UnsupportedPolicyError("policy '" + policy.name() +
                                 "' is not comparison-based and supplies no critical-bid method");
  }

  // Neither the informed set nor the candidate set depends on i's bid, so
  // the closure is computed once and each probe only swaps i's bid in.
  const ReportProfile base_effective =
      effective_profile(graph, profile.with(graph, i, Report(Money(0), diffusion)));
  const bool participating = !base_effective[i].is_nil();

  std::vector<Money> candidates;
  candidates.push_back(Money(0));
  for (BuyerId j = 0; j < base_effective.size(); ++j) {
    if (j != i && !base_effective[j].is_nil()) candidates.push_back(base_effective[j].bid());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  auto wins_at = [&](const Money& bid) {
    std::vector<Report> reports = base_effective.reports();
    if (participating) reports[static_cast<std::size_t>(i)] = Report(bid, diffusion);
    const auto w = policy.winner(graph, ReportProfile::trusted(std::move(reports)));
    return w.has_value() && *w == i;
  };

  // Ascending scan over candidates and interval interiors. The first
  // winning probe pins both the threshold and whether it is attained.
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (wins_at(candidates[k])) return ExtendedBid::finite(candidates[k], /*inclusive=*/true);
    const Money interior = k + 1 < candidates.size()
                               ? (candidates[k] + candidates[k + 1]) / Money(2)
                               : candidates[k] + Money(1);
    if (wins_at(interior)) return ExtendedBid::finite(candidates[k], /*inclusive=*/false);
  }
  return ExtendedBid::infinite();
}

}  // namespace dak
