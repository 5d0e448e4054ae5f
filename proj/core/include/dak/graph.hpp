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

#include "dak/ids.hpp"

namespace dak {

/// Directed social graph: the seller's neighbor set plus each buyer's true
/// neighbor set. Diffusion travels along these edges only. Undirected
/// networks are encoded as symmetric adjacency by the instance loader.
/// Immutable after construction and safe to share across threads.
class SocialGraph {
 public:
  SocialGraph(BuyerId buyer_count, IdSet seller_neighbors, std::vector<IdSet> neighbors)
      : count_(buyer_count), seller_neighbors_(seller_neighbors), neighbors_(std::move(neighbors)) {
    if (count_ < 0 || count_ > IdSet::kMaxIds) {
      throw InvalidInstanceError("buyer count " + std::to_string(count_) +
                                 " outside supported range [0, 64]");
    }
    if (static_cast<BuyerId>(neighbors_.size()) != count_) {
      throw InvalidInstanceError("neighbor table size does not match buyer count");
    }
    const IdSet everyone = IdSet::full(count_);
    if (!seller_neighbors_.subset_of(everyone)) {
      throw InvalidInstanceError("seller neighbor set names an unknown buyer");
    }
    for (BuyerId i = 0; i < count_; ++i) {
      if (!neighbors_[i].subset_of(everyone)) {
        throw InvalidInstanceError("neighbor set of buyer " + std::to_string(i) +
                                   " names an unknown buyer");
      }
      if (neighbors_[i].contains(i)) {
        throw InvalidInstanceError("buyer " + std::to_string(i) + " lists herself as a neighbor");
      }
    }
  }

  BuyerId buyer_count() const { return count_; }
  const IdSet& seller_neighbors() const { return seller_neighbors_; }
  const IdSet& neighbors_of(BuyerId i) const {
    if (i < 0 || i >= count_) throw InvalidInstanceError("unknown buyer id " + std::to_string(i));
    return neighbors_[static_cast<std::size_t>(i)];
  }
  IdSet all_buyers() const { return IdSet::full(count_); }

 private:
  BuyerId count_;
  IdSet seller_neighbors_;
  std::vector<IdSet> neighbors_;
};

}  // namespace dak
