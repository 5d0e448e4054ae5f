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

#include "dak/graph.hpp"
#include "dak/types.hpp"

namespace dak {

/// One report per buyer, validated against a graph on construction: a
/// buyer can only diffuse to buyers she is actually connected to
/// (diffusion ⊆ true neighbors). Value type; never mutated in place.
class ReportProfile {
 public:
  ReportProfile(const SocialGraph& graph, std::vector<Report> reports)
      : reports_(std::move(reports)) {
    if (static_cast<BuyerId>(reports_.size()) != graph.buyer_count()) {
      throw InvalidInstanceError("report count does not match buyer count");
    }
    for (BuyerId i = 0; i < graph.buyer_count(); ++i) {
      const Report& r = reports_[static_cast<std::size_t>(i)];
      if (!r.is_nil() && !r.diffusion().subset_of(graph.neighbors_of(i))) {
        throw InvalidInstanceError("buyer " + std::to_string(i) +
                                   " diffuses to someone outside her neighbor set");
      }
    }
  }

  /// Skips diffusion validation; for hot paths where every report is known
  /// to come from an already-validated profile (probe loops replace only
  /// bids or nil out entries).
  static ReportProfile trusted(std::vector<Report> reports) {
    return ReportProfile(TrustedTag{}, std::move(reports));
  }

  BuyerId size() const { return static_cast<BuyerId>(reports_.size()); }

  const Report& operator[](BuyerId i) const { return reports_[static_cast<std::size_t>(i)]; }

  const std::vector<Report>& reports() const { return reports_; }

  /// Copy of this profile with buyer i's report replaced (revalidated).
  ReportProfile with(const SocialGraph& graph, BuyerId i, Report r) const {
    std::vector<Report> copy = reports_;
    copy.at(static_cast<std::size_t>(i)) = std::move(r);
    return ReportProfile(graph, std::move(copy));
  }

  friend bool operator==(const ReportProfile& a, const ReportProfile& b) {
    return a.reports_ == b.reports_;
  }
  friend bool operator!=(const ReportProfile& a, const ReportProfile& b) { return !(a == b); }

 private:
  struct TrustedTag {};
  ReportProfile(TrustedTag, std::vector<Report> reports) : reports_(std::move(reports)) {}

  std::vector<Report> reports_;
};

/// The profile where every buyer bids her true valuation and diffuses to
/// all of her neighbors.
ReportProfile truthful_profile(const SocialGraph& graph, const std::vector<Money>& valuations);

}  // namespace dak
