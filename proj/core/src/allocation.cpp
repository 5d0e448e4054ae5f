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

#include "dak/allocation.hpp"

namespace dak {

namespace {

/// Highest bidder among `eligible` with a non-nil report; ties go to the
/// smallest id. Ascending id scan with a strict > keeps the tie-break.
std::optional<BuyerId> argmax_bid(const ReportProfile& profile, const IdSet& eligible) {
  std::optional<BuyerId> best;
  eligible.for_each([&](BuyerId i) {
    const Report& r = profile[i];
    if (r.is_nil()) return;
    if (!best || r.bid() > profile[*best].bid()) best = i;
  });
  return best;
}

}  // namespace

std::optional<BuyerId> EfficientAllocation::winner(const SocialGraph& graph,
                                                   const ReportProfile& effective) const {
  return argmax_bid(effective, graph.all_buyers());
}

std::optional<BuyerId> NeighborOnlyAllocation::winner(const SocialGraph& graph,
                                                      const ReportProfile& effective) const {
  return argmax_bid(effective, graph.seller_neighbors());
}

IdSet depth_limited_informed(const SocialGraph& graph, const ReportProfile& profile,
                             int max_depth) {
  IdSet reached = graph.seller_neighbors();
  IdSet frontier = reached;
  for (int depth = 1; depth < max_depth && !frontier.empty(); ++depth) {
    IdSet next;
    frontier.for_each([&](BuyerId i) {
      const Report& r = profile[i];
      if (!r.is_nil()) next |= r.diffusion();
    });
    frontier = next - reached;
    reached |= frontier;
  }
  return reached;
}

std::optional<BuyerId> DepthBoundedAllocation::winner(const SocialGraph& graph,
                                                      const ReportProfile& effective) const {
  return argmax_bid(effective, depth_limited_informed(graph, effective, depth_));
}

std::optional<BuyerId> SecondHighestAllocation::winner(const SocialGraph& graph,
                                                       const ReportProfile& effective) const {
  std::optional<BuyerId> first;
  std::optional<BuyerId> second;
  graph.all_buyers().for_each([&](BuyerId i) {
    if (effective[i].is_nil()) return;
    if (!first || effective[i].bid() > effective[*first].bid()) {
      second = first;
      first = i;
    } else if (!second || effective[i].bid() > effective[*second].bid()) {
      second = i;
    }
  });
  return second ? second : first;
}

}  // namespace dak
