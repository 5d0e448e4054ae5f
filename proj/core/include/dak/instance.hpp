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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dak/network.hpp"

namespace dak {

/// A concrete auction instance: the social graph together with every
/// buyer's true valuation, plus optional metadata. The buyers' true
/// neighbor sets live in the graph.
struct Instance {
  SocialGraph graph;
  std::vector<Money> valuations;
  std::string name;                      // "" when absent
  std::optional<std::uint64_t> seed;     // generator provenance

  TrueType true_type(BuyerId i) const {
    return TrueType{valuations.at(static_cast<std::size_t>(i)), graph.neighbors_of(i)};
  }
};

/// The profile where everyone reports truthfully and diffuses fully.
ReportProfile truthful_profile(const Instance& instance);

/// Instance JSON:
///   {"seller_neighbors": [0],
///    "buyers": [{"id": 0, "valuation": "2", "neighbors": [1]},
///               {"id": 1, "valuation": "10", "neighbors": []}],
///    "name": "line", "seed": 7}
/// Buyer ids must be dense 0..n-1 (any order in the array); valuations are
/// decimal strings, rational strings ("7/3") or JSON numbers; neighbor
/// lists reject duplicates and self-loops. "name" and "seed" are optional.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::filesystem::path& path);

/// Lossless inverse of parse_instance (valuations as exact strings).
std::string instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

}  // namespace dak
