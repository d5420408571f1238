#pragma once

// Seeded random corpora. Only raw mt19937_64 output is consumed, so a seed
// gives the same graph under every standard library.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bordered/detect.hpp"
#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"

namespace bordered {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw InvalidParameter("below(0)");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = gen_();
      if (x < limit) return x % bound;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(i))]);
  }

 private:
  std::mt19937_64 gen_;
};

/// G(n, p) with the vertex order 1..n; pairs visited in lexicographic order.
inline OrderedGraph random_ordered_graph(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (rng.bernoulli(p)) edges.push_back({a, b});
  return OrderedGraph::from_edges(n, std::move(edges));
}

struct LabeledBipartite {
  OrderedGraph graph;
  std::vector<int> classes;  // side 0/1 per vertex, index 0 unused
};

/// Each vertex picks a side with probability 1/2; cross pairs are edges with probability p.
inline LabeledBipartite random_bipartite_graph(Vertex n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<int> side(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) side[v] = rng.bernoulli(0.5) ? 1 : 0;
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (side[a] != side[b] && rng.bernoulli(p)) edges.push_back({a, b});
  return {OrderedGraph::from_edges(n, std::move(edges)), std::move(side)};
}

/// Offers the pairs of 1..n in a seeded random order and keeps a pair when the
/// graph stays free of bordered cycles of the given length (a random maximal
/// free graph when max_edges is not reached). n <= 63.
inline OrderedGraph random_bordered_free_graph(Vertex n, int two_k, std::uint64_t seed, std::size_t max_edges = ~std::size_t{0}) {
  if (n > SmallOrderedGraph::kMaxVertices) throw InvalidParameter("random_bordered_free_graph supports n <= 63");
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b) pairs.push_back({a, b});
  rng.shuffle(pairs);
  SmallOrderedGraph g(n);
  std::size_t kept = 0;
  for (const Edge& e : pairs) {
    if (kept >= max_edges) break;
    g.add(e.lo, e.hi);
    if (has_bordered_cycle(g, two_k))
      g.remove(e.lo, e.hi);
    else
      ++kept;
  }
  return g.to_graph();
}

}  // namespace bordered
