#pragma once

#include <algorithm>
#include <vector>

#include "rigpack/graph.hpp"

namespace fixtures {

using rigpack::Edge;
using rigpack::Graph;
using rigpack::VertexId;
using rigpack::VertexSet;

/// Block i of the ring: vertices 7i .. 7i+7 (mod 28), eight in all. Sorted.
inline std::vector<VertexSet> four_k8_blocks() {
  std::vector<VertexSet> blocks;
  for (int i = 0; i < 4; ++i) {
    VertexSet b;
    for (int j = 0; j < 8; ++j) b.push_back((7 * i + j) % 28);
    std::sort(b.begin(), b.end());
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

/// Four K8 blocks in a ring, consecutive blocks sharing one vertex: 28
/// vertices, 112 edges, four rigid bodies joined by hinges into a flexible
/// quadrilateral.
inline Graph four_k8_ring() {
  std::vector<Edge> edges;
  for (const auto& b : four_k8_blocks())
    for (std::size_t x = 0; x < b.size(); ++x)
      for (std::size_t y = x + 1; y < b.size(); ++y) edges.push_back({b[x], b[y]});
  return Graph(28, std::move(edges));
}

}  // namespace fixtures
