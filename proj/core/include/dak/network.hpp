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

#include "dak/profile.hpp"

namespace dak {

/// Largest neighbor set deviations() will enumerate (2^k subsets).
inline constexpr int kDefaultNeighborCap = 12;

/// The set of buyers who hear about the sale: the least fixed point of
/// "seller neighbors are informed; an informed buyer with a non-nil report
/// informs everyone in her diffusion set". A buyer's own report never
/// affects whether she herself is informed, and a nil reporter informs
/// no one even when she is informed.
IdSet informed_set(const SocialGraph& graph, const ReportProfile& profile);

/// Copy of the profile where every uninformed buyer's report is replaced
/// by nil. Idempotent; never turns a nil report into a non-nil one.
ReportProfile effective_profile(const SocialGraph& graph, const ReportProfile& profile);

/// Buyer i's full strategy space over the given bid candidates: every
/// (bid, diffusion subset) pair plus the nil report. Subsets are
/// enumerated as an ascending binary counter over i's sorted neighbor
/// list, bids ascending within each subset, nil last. Throws
/// EnumerationCapError when |neighbors| > neighbor_cap.
std::vector<Report> deviations(const SocialGraph& graph, BuyerId i,
                               const std::vector<Money>& bid_candidates,
                               int neighbor_cap = kDefaultNeighborCap);

/// Result of comparing two reports under "at least as strong": higher bid
/// and weakly smaller diffusion set.
enum class TypeOrder { Equal, GreaterEqual, LessEqual, Incomparable };

/// a ⪰ b iff a.bid ≥ b.bid and a.diffusion ⊆ b.diffusion. Both reports
/// must be non-nil.
TypeOrder compare_types(const Report& a, const Report& b);

/// Submasks of `mask`, ascending (∅ first, mask last). Used wherever a
/// diffusion subset is quantified over; shared so enumeration order is
/// identical everywhere.
std::vector<IdSet> all_subsets(const IdSet& mask, int neighbor_cap = kDefaultNeighborCap);

}  // namespace dak
