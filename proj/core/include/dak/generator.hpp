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

#include "dak/instance.hpp"

namespace dak {

enum class GraphModel { Tree, Gnp };

/// Parameters for random instance generation. Everything is driven by the
/// seed: the same parameters always produce byte-identical instances,
/// independent of platform or standard library.
struct GenParams {
  BuyerId n = 5;
  GraphModel model = GraphModel::Tree;
  double edge_probability = 0.3;  // Gnp only
  std::vector<Money> valuation_grid = {Money(0), Money(1), Money(2), Money(4)};
  std::uint64_t seed = 0;
};

/// One instance. Trees are uniformly random recursive trees rooted at the
/// seller; Gnp draws each potential edge (seller-to-buyer, and both
/// directions between buyer pairs jointly, keeping adjacency symmetric)
/// with the given probability and resamples until every buyer is
/// reachable from the seller under full diffusion. Valuations are drawn
/// uniformly from the grid. Throws Error when the parameters cannot be
/// satisfied (n < 1, empty grid, connectivity never reached).
Instance generate_instance(const GenParams& params);

/// `count` instances; instance k is generated from seed mixed with k, so
/// prefixes of a batch are stable when count grows.
std::vector<Instance> generate_instances(const GenParams& params, std::size_t count);

}  // namespace dak
