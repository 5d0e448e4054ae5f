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

#include "dak/generator.hpp"

namespace dak {

namespace {

// splitmix64; self-contained so output never depends on the standard
// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - ~0ULL % bound;
    for (;;) {
      const std::uint64_t v = next();
      if (v < limit) return v % bound;
    }
  }

  /// Bernoulli with probability p, via a 53-bit uniform.
  bool chance(double p) {
    const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::uint64_t state_;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x632be59bd9b4e019ULL + index * 0x9e3779b97f4a7c15ULL));
  return r.next();
}

std::vector<Money> draw_valuations(Rng& rng, BuyerId n, const std::vector<Money>& grid) {
  std::vector<Money> valuations;
  valuations.reserve(static_cast<std::size_t>(n));
  for (BuyerId i = 0; i < n; ++i) {
    valuations.push_back(grid[rng.below(grid.size())]);
  }
  return valuations;
}

SocialGraph random_tree(Rng& rng, BuyerId n) {
  // Node 0 is the seller; buyer k attaches below a uniformly random
  // earlier node. Edges point parent -> child, so diffusion flows away
  // from the seller and every buyer is reachable.
  IdSet seller;
  std::vector<IdSet> neighbors(static_cast<std::size_t>(n));
  for (BuyerId k = 0; k < n; ++k) {
    const std::uint64_t parent = rng.below(static_cast<std::uint64_t>(k) + 1);
    if (parent == 0) {
      seller.insert(k);
    } else {
      neighbors[parent - 1].insert(k);
    }
  }
  return SocialGraph(n, seller, std::move(neighbors));
}

bool connected_from_seller(const SocialGraph& graph) {
  IdSet reached = graph.seller_neighbors();
  for (;;) {
    IdSet next = reached;
    reached.for_each([&](BuyerId i) { next |= graph.neighbors_of(i); });
    if (next == reached) break;
    reached = next;
  }
  return reached == graph.all_buyers();
}

SocialGraph random_gnp(Rng& rng, BuyerId n, double p) {
  constexpr int kMaxAttempts = 100000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    IdSet seller;
    std::vector<IdSet> neighbors(static_cast<std::size_t>(n));
    for (BuyerId i = 0; i < n; ++i) {
      if (rng.chance(p)) seller.insert(i);
    }
    for (BuyerId i = 0; i < n; ++i) {
      for (BuyerId j = i + 1; j < n; ++j) {
        if (rng.chance(p)) {
          neighbors[static_cast<std::size_t>(i)].insert(j);
          neighbors[static_cast<std::size_t>(j)].insert(i);
        }
      }
    }
    SocialGraph graph(n, seller, std::move(neighbors));
    if (connected_from_seller(graph)) return graph;
  }
  throw Error("gnp generator: no graph connected from the seller after " +
              std::to_string(kMaxAttempts) + " attempts (p too small?)");
}

}  // namespace

Instance generate_instance(const GenParams& params) {
  if (params.n < 1) throw Error("generator: need at least one buyer");
  if (params.n > IdSet::kMaxIds) {
    throw Error("generator: at most 64 buyers are supported");
  }
  if (params.valuation_grid.empty()) throw Error("generator: empty valuation grid");
  if (params.model == GraphModel::Gnp &&
      (params.edge_probability < 0.0 || params.edge_probability > 1.0)) {
    throw Error("generator: edge probability must be in [0, 1]");
  }

  Rng rng(mix(params.seed, 0));
  SocialGraph graph = params.model == GraphModel::Tree
                          ? random_tree(rng, params.n)
                          : random_gnp(rng, params.n, params.edge_probability);
  std::vector<Money> valuations = draw_valuations(rng, params.n, params.valuation_grid);

  Instance instance{std::move(graph), std::move(valuations),
                    std::string(params.model == GraphModel::Tree ? "tree" : "gnp") + "-n" +
                        std::to_string(params.n) + "-seed" + std::to_string(params.seed),
                    params.seed};
  return instance;
}

std::vector<Instance> generate_instances(const GenParams& params, std::size_t count) {
  std::vector<Instance> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GenParams p = params;
    p.seed = mix(params.seed, k + 1);
    Instance instance = generate_instance(p);
    instance.name += "-" + std::to_string(k);
    instance.seed = params.seed;
    out.push_back(std::move(instance));
  }
  return out;
}

}  // namespace dak
