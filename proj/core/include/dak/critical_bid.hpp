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

#include "dak/allocation.hpp"

namespace dak {

/// The minimum bid with which buyer i wins, fixing her diffusion set to
/// `diffusion` and holding the other buyers' reports in `profile` fixed
/// (the effective profile is recomputed for every probe, so shrinking i's
/// diffusion cuts off her downstream buyers). Returns Infinite when i
/// cannot win at any bid.
///
/// For comparison-based policies the winner can only change where i's bid
/// crosses another participant's bid, so probing the candidate bids
/// {0} ∪ {others' effective bids}, the midpoints between consecutive
/// candidates and one value above the maximum decides the threshold and
/// its inclusivity exactly. Policies that are not comparison-based must
/// supply custom_critical_bid; otherwise UnsupportedPolicyError is thrown.
///
/// i's entry in `profile` is ignored. `diffusion` must be a subset of i's
/// true neighbors and, when `profile` has already been made effective, a
/// subset of i's reported diffusion in it.
ExtendedBid critical_bid(const AllocationPolicy& policy, const SocialGraph& graph,
                         const ReportProfile& profile, BuyerId i, const IdSet& diffusion);

}  // namespace dak
