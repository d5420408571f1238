#pragma once

#include <utility>
#include <vector>

#include "bordered/ordered_graph.hpp"
#include "oracles.hpp"

namespace support {

using bordered::Edge;
using bordered::OrderedGraph;
using bordered::Vertex;

inline OrderedGraph graph(Vertex n, std::vector<std::pair<Vertex, Vertex>> pairs) { return OrderedGraph::from_edge_list(n, pairs); }

inline OrderedGraph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> es;
  for (auto [a, b] : oracle::mask_edges(n, mask)) es.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return OrderedGraph::from_edges(static_cast<Vertex>(n), std::move(es));
}

inline oracle::Adj adjacency(const OrderedGraph& g) {
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) es.push_back({static_cast<int>(e.lo), static_cast<int>(e.hi)});
  return oracle::adjacency(static_cast<int>(g.vertex_count()), es);
}

inline std::vector<std::vector<int>> as_int(const std::vector<std::vector<Vertex>>& v) {
  std::vector<std::vector<int>> out;
  for (const auto& s : v) out.emplace_back(s.begin(), s.end());
  return out;
}

inline OrderedGraph k22() { return graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

}  // namespace support
