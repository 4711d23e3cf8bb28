#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hyperstrength/hypergraph.hpp"

namespace hyperstrength::testing {

// Edges {1,2} and {1,2,i} for i = 3..n (1-indexed), so n - 1 edges in all.
inline Hypergraph star(std::size_t n) {
  std::vector<EdgeRecord> edges{{{0, 1}, 1}};
  for (VertexId i = 2; i < n; ++i) edges.push_back({{0, 1, i}, 1});
  return Hypergraph(n, std::move(edges));
}

// K4 with edge ids 12, 13, 14, 23, 24, 34.
inline Hypergraph k4(Weight w = 1) {
  std::vector<EdgeRecord> edges;
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) edges.push_back({{a, b}, w});
  }
  return Hypergraph(4, std::move(edges));
}

inline constexpr EdgeId kBowtieBridge = 6;

// Triangles {1,2,3} and {4,5,6} as rank-2 edges, then the bridge {3,4}.
inline Hypergraph bowtie(Weight triangle = 1, Weight bridge = 1) {
  return Hypergraph(6, {{{0, 1}, triangle},
                        {{0, 2}, triangle},
                        {{1, 2}, triangle},
                        {{3, 4}, triangle},
                        {{3, 5}, triangle},
                        {{4, 5}, triangle},
                        {{2, 3}, bridge}});
}

inline Hypergraph path(std::vector<Weight> weights) {
  std::vector<EdgeRecord> edges;
  for (VertexId i = 0; i < weights.size(); ++i) edges.push_back({{i, i + 1}, weights[i]});
  return Hypergraph(weights.size() + 1, std::move(edges));
}

struct RandomSpec {
  std::size_t min_n = 2;
  std::size_t max_n = 10;
  std::size_t max_m = 15;
  std::size_t max_rank = 4;
  Weight max_weight = 1;
  bool connected = false;  // add a spanning path of rank-2 edges first
};

inline Hypergraph random_hypergraph(std::mt19937_64& rng, const RandomSpec& spec) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(spec.min_n, spec.max_n);
  std::vector<EdgeRecord> edges;
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  if (spec.connected) {
    std::shuffle(all.begin(), all.end(), rng);
    for (std::size_t i = 0; i + 1 < n && edges.size() < spec.max_m; ++i) {
      edges.push_back({{all[i], all[i + 1]},
                       static_cast<Weight>(pick(1, static_cast<std::size_t>(spec.max_weight)))});
    }
  }
  const std::size_t m = n < 2 ? 0 : pick(edges.size(), std::max(edges.size(), spec.max_m));
  while (edges.size() < m) {
    const std::size_t size = pick(2, std::min(spec.max_rank, n));
    std::shuffle(all.begin(), all.end(), rng);
    edges.push_back({{all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size)},
                     static_cast<Weight>(pick(1, static_cast<std::size_t>(spec.max_weight)))});
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hyperstrength::testing
