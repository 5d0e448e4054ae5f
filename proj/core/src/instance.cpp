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

#include "dak/instance.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace dak {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

Money money_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return Money::parse(j.get<std::string>());
  if (j.is_number_integer()) return Money(j.get<std::int64_t>());
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ParseError(where + ": value too large");
    }
    return Money(static_cast<std::int64_t>(v));
  }
  if (j.is_number_float()) {
    // Serialize and reparse: nlohmann prints the shortest decimal that
    // round-trips the double, which recovers the literal the user wrote
    // for anything that fits a double exactly enough.
    return Money::parse(j.dump());
  }
  throw ParseError(where + ": expected a number or a decimal string");
}

IdSet id_list_from_json(const json& j, BuyerId count, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of buyer ids");
  IdSet out;
  for (const auto& entry : j) {
    if (!entry.is_number_integer() && !entry.is_number_unsigned()) {
      throw ParseError(where + ": buyer ids must be integers");
    }
    const auto raw = entry.get<std::int64_t>();
    if (raw < 0 || raw >= count) {
      throw ParseError(where + ": unknown buyer id " + std::to_string(raw));
    }
    const BuyerId id = static_cast<BuyerId>(raw);
    if (out.contains(id)) {
      throw ParseError(where + ": duplicate buyer id " + std::to_string(raw));
    }
    out.insert(id);
  }
  return out;
}

}  // namespace

ReportProfile truthful_profile(const Instance& instance) {
  return truthful_profile(instance.graph, instance.valuations);
}

Instance parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance JSON: top level must be an object");
  if (!doc.contains("buyers") || !doc["buyers"].is_array()) {
    throw ParseError("instance JSON: missing \"buyers\" array");
  }
  if (!doc.contains("seller_neighbors")) {
    throw ParseError("instance JSON: missing \"seller_neighbors\" array");
  }

  const auto& buyers = doc["buyers"];
  const BuyerId count = static_cast<BuyerId>(buyers.size());
  if (count > IdSet::kMaxIds) {
    throw ParseError("instance JSON: " + std::to_string(count) +
                     " buyers exceeds the supported maximum of 64");
  }

  std::vector<Money> valuations(static_cast<std::size_t>(count));
  std::vector<IdSet> neighbors(static_cast<std::size_t>(count));
  std::vector<bool> seen(static_cast<std::size_t>(count), false);
  for (const auto& b : buyers) {
    if (!b.is_object() || !b.contains("id") || !b["id"].is_number_integer()) {
      throw ParseError("instance JSON: each buyer needs an integer \"id\"");
    }
    const auto raw = b["id"].get<std::int64_t>();
    if (raw < 0 || raw >= count) {
      throw ParseError("instance JSON: buyer ids must be dense 0.." + std::to_string(count - 1) +
                       ", got " + std::to_string(raw));
    }
    const auto id = static_cast<std::size_t>(raw);
    if (seen[id]) throw ParseError("instance JSON: duplicate buyer id " + std::to_string(raw));
    seen[id] = true;
    const std::string where = "buyer " + std::to_string(raw);
    if (!b.contains("valuation")) throw ParseError(where + ": missing \"valuation\"");
    valuations[id] = money_from_json(b["valuation"], where + " valuation");
    if (valuations[id].is_negative()) throw ParseError(where + ": valuation must be nonnegative");
    neighbors[id] = id_list_from_json(b.value("neighbors", json::array()), count,
                                      where + " neighbors");
    if (neighbors[id].contains(static_cast<BuyerId>(raw))) {
      throw ParseError(where + ": a buyer cannot be her own neighbor");
    }
  }

  const IdSet seller = id_list_from_json(doc["seller_neighbors"], count, "seller_neighbors");

  Instance instance{SocialGraph(count, seller, std::move(neighbors)), std::move(valuations),
                    doc.value("name", std::string()), std::nullopt};
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw ParseError("instance JSON: \"seed\" must be an integer");
    }
    instance.seed = doc["seed"].get<std::uint64_t>();
  }
  return instance;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open instance file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string instance_to_json(const Instance& instance) {
  ordered_json doc;
  if (!instance.name.empty()) doc["name"] = instance.name;
  if (instance.seed) doc["seed"] = *instance.seed;
  doc["seller_neighbors"] = instance.graph.seller_neighbors().to_vector();
  doc["buyers"] = ordered_json::array();
  for (BuyerId i = 0; i < instance.graph.buyer_count(); ++i) {
    ordered_json buyer;
    buyer["id"] = i;
    buyer["valuation"] = instance.valuations[static_cast<std::size_t>(i)].str();
    buyer["neighbors"] = instance.graph.neighbors_of(i).to_vector();
    doc["buyers"].push_back(std::move(buyer));
  }
  return doc.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write instance file: " + path.string());
  out << instance_to_json(instance);
}

}  // namespace dak
