#pragma once

// k-zigzag paths v_0 v_1 ... v_k: even-indexed vertices strictly decrease,
// odd-indexed vertices strictly increase, and v_0 < v_1. Equivalently
//   k even: v_k < v_{k-2} < ... < v_0 < v_1 < v_3 < ... < v_{k-1}
//   k odd:  v_{k-1} < ... < v_0 < v_1 < v_3 < ... < v_k
// The chain forces all vertices distinct, so any adjacent sequence obeying it is a path.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"

namespace bordered {

/// Order condition only (adjacency is the caller's business).
inline bool is_zigzag_order(std::span<const Vertex> seq) {
  if (seq.size() < 2) return false;
  if (seq[0] >= seq[1]) return false;
  for (std::size_t i = 2; i < seq.size(); ++i) {
    if (i % 2 == 0 && seq[i] >= seq[i - 2]) return false;
    if (i % 2 == 1 && seq[i] <= seq[i - 2]) return false;
  }
  return true;
}

inline bool is_zigzag_path(const OrderedGraph& g, std::span<const Vertex> seq) {
  if (!is_zigzag_order(seq)) return false;
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (!g.adjacent(seq[i - 1], seq[i])) return false;
  return true;
}

namespace detail {

inline void check_zigzag_k(int k) {
  if (k < 1) throw InvalidParameter("zigzag length k must be >= 1");
}

/// Allowed neighbors w of v_i = cur when v_{i-1} = prev and w sits at index i+1:
/// odd index -> w > prev, even index -> w < prev (index 1 special-cased by callers).
template <class F>
void for_each_zigzag_step(const OrderedGraph& g, int next_index, Vertex prev, Vertex cur, F&& f) {
  const auto nb = g.neighbors(cur);
  const std::size_t base = g.adjacency_offset(cur);
  if (next_index % 2 == 1) {
    for (auto it = std::upper_bound(nb.begin(), nb.end(), prev); it != nb.end(); ++it)
      f(*it, base + static_cast<std::size_t>(it - nb.begin()));
  } else {
    const auto stop = std::lower_bound(nb.begin(), nb.end(), prev);
    for (auto it = nb.begin(); it != stop; ++it) f(*it, base + static_cast<std::size_t>(it - nb.begin()));
  }
}

}  // namespace detail

/// Number of k-zigzag paths (directed sequences v_0..v_k). Dynamic program over
/// directed edges: ways[i][prev -> cur] counts completions with v_{i-1} = prev, v_i = cur.
inline std::uint64_t count_zigzag_paths(const OrderedGraph& g, int k) {
  detail::check_zigzag_k(k);
  const std::size_t arcs = 2 * g.edge_count();
  // Directed edge x -> neighbors(x)[j] has index adjacency_offset(x) + j.
  std::vector<std::uint64_t> ways(arcs, 1), next(arcs, 0);
  for (int i = k - 1; i >= 1; --i) {
    for (Vertex x = 1; x <= g.vertex_count(); ++x) {
      const auto nb = g.neighbors(x);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        std::uint64_t total = 0;
        detail::for_each_zigzag_step(g, i + 1, x, nb[j], [&](Vertex, std::size_t arc) { total += ways[arc]; });
        next[g.adjacency_offset(x) + j] = total;
      }
    }
    std::swap(ways, next);
  }
  std::uint64_t total = 0;
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    const auto nb = g.neighbors(x);
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (nb[j] > x) total += ways[g.adjacency_offset(x) + j];
  }
  return total;
}

struct ZigzagPairCount {
  Vertex first = 0;
  Vertex last = 0;
  std::uint64_t count = 0;
  bool operator==(const ZigzagPairCount&) const = default;
};

/// Count for every endpoint pair (v_0, v_k) with at least one k-zigzag path,
/// ascending by (first, last). Forward layer propagation from each v_0.
inline std::vector<ZigzagPairCount> zigzag_pair_counts(const OrderedGraph& g, int k) {
  detail::check_zigzag_k(k);
  const std::size_t arcs = 2 * g.edge_count();
  std::vector<Vertex> arc_tail(arcs), arc_head(arcs);
  for (Vertex x = 1; x <= g.vertex_count(); ++x) {
    const auto nb = g.neighbors(x);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      arc_tail[g.adjacency_offset(x) + j] = x;
      arc_head[g.adjacency_offset(x) + j] = nb[j];
    }
  }
  std::vector<std::uint64_t> layer(arcs, 0), scratch(arcs, 0);
  std::vector<std::size_t> active, touched;
  std::vector<std::uint64_t> per_end(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  std::vector<ZigzagPairCount> out;
  for (Vertex v0 = 1; v0 <= g.vertex_count(); ++v0) {
    active.clear();
    const auto nb = g.neighbors(v0);
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (nb[j] > v0) {
        const std::size_t arc = g.adjacency_offset(v0) + j;
        layer[arc] = 1;
        active.push_back(arc);
      }
    for (int i = 2; i <= k && !active.empty(); ++i) {
      touched.clear();
      for (std::size_t arc : active) {
        const std::uint64_t c = layer[arc];
        layer[arc] = 0;
        detail::for_each_zigzag_step(g, i, arc_tail[arc], arc_head[arc], [&](Vertex, std::size_t nxt) {
          if (scratch[nxt] == 0) touched.push_back(nxt);
          scratch[nxt] += c;
        });
      }
      active.swap(touched);
      for (std::size_t arc : active) {
        layer[arc] = scratch[arc];
        scratch[arc] = 0;
      }
    }
    std::vector<Vertex> ends;
    for (std::size_t arc : active) {
      const Vertex end = arc_head[arc];
      if (per_end[end] == 0) ends.push_back(end);
      per_end[end] += layer[arc];
      layer[arc] = 0;
    }
    std::sort(ends.begin(), ends.end());
    for (Vertex e : ends) {
      out.push_back({v0, e, per_end[e]});
      per_end[e] = 0;
    }
  }
  return out;
}

inline std::uint64_t max_zigzag_pair_count(const OrderedGraph& g, int k) {
  std::uint64_t best = 0;
  for (const auto& pc : zigzag_pair_counts(g, k)) best = std::max(best, pc.count);
  return best;
}

/// Up to `limit` k-zigzag paths (0: all) in lexicographic order of the sequence.
inline std::vector<std::vector<Vertex>> enumerate_zigzag_paths(const OrderedGraph& g, int k, std::size_t limit = 0) {
  detail::check_zigzag_k(k);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> seq(static_cast<std::size_t>(k) + 1);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i > k) {
      out.push_back(seq);
      return limit == 0 || out.size() < limit;
    }
    bool go = true;
    detail::for_each_zigzag_step(g, i, seq[static_cast<std::size_t>(i) - 2], seq[static_cast<std::size_t>(i) - 1], [&](Vertex w, std::size_t) {
      if (!go) return;
      seq[static_cast<std::size_t>(i)] = w;
      go = self(self, i + 1);
    });
    return go;
  };
  for (Vertex v0 = 1; v0 <= g.vertex_count(); ++v0) {
    for (Vertex v1 : g.neighbors(v0)) {
      if (v1 <= v0) continue;
      seq[0] = v0;
      seq[1] = v1;
      if (!dfs(dfs, 2)) return out;
    }
  }
  return out;
}

}  // namespace bordered
