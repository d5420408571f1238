#pragma once

// Ordered graphs: simple graphs on vertices 1..n where the linear order is the
// integer order of the labels. Also the bipartite 0-1 matrix view of a
// two-interval graph.

#include <algorithm>
#include <bit>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iterator>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bordered/error.hpp"

namespace bordered {

using Vertex = std::uint32_t;

/// Undirected edge with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Anything the cycle searches can walk: vertex_count(), ascending neighbors(v), adjacent(u, v).
template <class G>
concept OrderedAdjacency = requires(const G& g, Vertex v) {
  { g.vertex_count() } -> std::convertible_to<Vertex>;
  { g.adjacent(v, v) } -> std::convertible_to<bool>;
  { g.neighbors(v) } -> std::ranges::forward_range;
};

/// Immutable ordered graph in CSR form.
class OrderedGraph {
 public:
  OrderedGraph() : offsets_(2, 0) {}

  /// Normalizes pairs (either orientation, duplicates collapsed). The error
  /// names the 1-based position of the offending pair.
  static OrderedGraph from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [a, b] = pairs[i];
      if (a < 1 || b < 1 || a > n || b > n)
        throw InvalidInput(i + 1, "vertex out of range 1.." + std::to_string(n) + " in pair (" + std::to_string(a) + "," +
                                      std::to_string(b) + ")");
      if (a == b) throw InvalidInput(i + 1, "self-loop at vertex " + std::to_string(a));
      edges.push_back(make_edge(a, b));
    }
    return from_edges(n, std::move(edges));
  }

  /// Edges must already satisfy 1 <= lo < hi <= n; order and duplicates are normalized.
  static OrderedGraph from_edges(Vertex n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const Edge& e : edges)
      if (e.lo < 1 || e.lo >= e.hi || e.hi > n) throw InvalidParameter("malformed edge");
    OrderedGraph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.lo + 1];
      ++g.offsets_[e.hi + 1];
    }
    for (std::size_t v = 1; v < g.offsets_.size(); ++v) g.offsets_[v] += g.offsets_[v - 1];
    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (lo, hi), so each list comes out ascending when
    // lower neighbors are written first.
    for (const Edge& e : g.edges_) g.adj_[fill[e.hi]++] = e.lo;
    for (const Edge& e : g.edges_) g.adj_[fill[e.lo]++] = e.hi;
    return g;
  }

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  /// Position of neighbors(v) inside the directed-edge numbering 0..2m-1.
  std::size_t adjacency_offset(Vertex v) const { return offsets_[v]; }

  bool adjacent(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::optional<std::size_t> edge_index(Edge e) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  /// Same vertex set, edges restricted to the given subset.
  OrderedGraph with_edges(std::vector<Edge> subset) const { return from_edges(n_, std::move(subset)); }

  bool operator==(const OrderedGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

/// Range over the set bits of a mask, yielding the bit positions as vertices.
class BitVertexRange {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t m) : m_(m) {}
    Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(m_)); }
    iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t m_ = 0;
  };
  explicit BitVertexRange(std::uint64_t m) : m_(m) {}
  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(0); }

 private:
  std::uint64_t m_;
};

/// Bitmask-backed ordered graph for n <= 63; used by the exhaustive searches.
class SmallOrderedGraph {
 public:
  static constexpr Vertex kMaxVertices = 63;

  explicit SmallOrderedGraph(Vertex n) : n_(n) {
    if (n > kMaxVertices) throw InvalidParameter("SmallOrderedGraph supports at most 63 vertices");
  }
  static SmallOrderedGraph from(const OrderedGraph& g) {
    SmallOrderedGraph s(g.vertex_count());
    for (const Edge& e : g.edges()) s.add(e.lo, e.hi);
    return s;
  }

  void add(Vertex a, Vertex b) {
    adj_[a] |= std::uint64_t{1} << b;
    adj_[b] |= std::uint64_t{1} << a;
  }
  void remove(Vertex a, Vertex b) {
    adj_[a] &= ~(std::uint64_t{1} << b);
    adj_[b] &= ~(std::uint64_t{1} << a);
  }

  Vertex vertex_count() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  BitVertexRange neighbors(Vertex v) const { return BitVertexRange(adj_[v]); }
  std::uint64_t neighbor_mask(Vertex v) const { return adj_[v]; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex a = 1; a <= n_; ++a)
      for (Vertex b : BitVertexRange(adj_[a] & ~((std::uint64_t{2} << a) - 1))) out.push_back({a, b});
    return out;
  }
  OrderedGraph to_graph() const { return OrderedGraph::from_edges(n_, edges()); }

 private:
  Vertex n_;
  std::uint64_t adj_[kMaxVertices + 1] = {};
};

struct SplitNeighborhood {
  std::span<const Vertex> left;   // neighbors below v, ascending
  std::span<const Vertex> right;  // neighbors above v, ascending
};

inline SplitNeighborhood left_right_neighborhoods(const OrderedGraph& g, Vertex v) {
  if (v < 1 || v > g.vertex_count()) throw InvalidParameter("vertex out of range");
  const auto nb = g.neighbors(v);
  const auto mid = std::lower_bound(nb.begin(), nb.end(), v);
  const auto cut = static_cast<std::size_t>(mid - nb.begin());
  return {nb.first(cut), nb.subspan(cut)};
}

/// Starting vertices of the minimum interval partition found by the greedy
/// left-to-right sweep (a new interval opens exactly when the next vertex has a
/// neighbor in the current one).
inline std::vector<Vertex> interval_partition(const OrderedGraph& g) {
  std::vector<Vertex> starts;
  if (g.vertex_count() == 0) return starts;
  starts.push_back(1);
  for (Vertex v = 2; v <= g.vertex_count(); ++v) {
    const auto left = left_right_neighborhoods(g, v).left;
    if (!left.empty() && left.back() >= starts.back()) starts.push_back(v);
  }
  return starts;
}

inline std::size_t interval_chromatic_number(const OrderedGraph& g) { return interval_partition(g).size(); }

/// 0-1 matrix with 1-based rows and columns, stored as sorted cells.
class ZeroOneMatrix {
 public:
  struct Cell {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    auto operator<=>(const Cell&) const = default;
  };

  ZeroOneMatrix() = default;
  ZeroOneMatrix(std::uint32_t rows, std::uint32_t cols, std::vector<Cell> ones) : rows_(rows), cols_(cols) {
    std::sort(ones.begin(), ones.end());
    ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
    for (const Cell& c : ones)
      if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols) throw InvalidParameter("matrix cell out of range");
    row_start_.assign(rows + 2, 0);
    for (const Cell& c : ones) ++row_start_[c.row + 1];
    for (std::size_t r = 1; r < row_start_.size(); ++r) row_start_[r] += row_start_[r - 1];
    cols_of_row_.reserve(ones.size());
    for (const Cell& c : ones) cols_of_row_.push_back(c.col);
    ones_ = std::move(ones);
  }

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::span<const Cell> ones() const { return ones_; }
  std::size_t count() const { return ones_.size(); }

  /// Columns holding a 1 in row r, ascending.
  std::span<const std::uint32_t> row(std::uint32_t r) const {
    return {cols_of_row_.data() + row_start_[r], cols_of_row_.data() + row_start_[r + 1]};
  }
  bool at(std::uint32_t r, std::uint32_t c) const {
    if (r < 1 || r > rows_) return false;
    const auto cs = row(r);
    return std::binary_search(cs.begin(), cs.end(), c);
  }

  bool operator==(const ZeroOneMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && ones_ == o.ones_; }

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<Cell> ones_;
  std::vector<std::size_t> row_start_ = {0, 0};
  std::vector<std::uint32_t> cols_of_row_;
};

/// Result of splitting an ordered graph after vertex s.
struct BipartiteSplit {
  std::optional<ZeroOneMatrix> matrix;
  std::optional<Edge> intra_edge;  // set on failure: an edge inside one interval
  explicit operator bool() const { return matrix.has_value(); }
};

/// Matrix of the edges crossing the split {1..s} | {s+1..n}; intra-interval edges are ignored.
inline ZeroOneMatrix crossing_matrix(const OrderedGraph& g, Vertex s) {
  if (s < 1 || s >= g.vertex_count()) throw InvalidParameter("split must satisfy 1 <= s < n");
  std::vector<ZeroOneMatrix::Cell> cells;
  for (const Edge& e : g.edges())
    if (e.lo <= s && e.hi > s) cells.push_back({e.lo, e.hi - s});
  return ZeroOneMatrix(s, g.vertex_count() - s, std::move(cells));
}

/// Bipartite adjacency matrix at split s: row i is vertex i, column j is vertex s + j.
/// Fails (naming the first offending edge) if an edge lies inside an interval.
inline BipartiteSplit to_bipartite_matrix(const OrderedGraph& g, Vertex s) {
  if (s < 1 || s >= g.vertex_count()) throw InvalidParameter("split must satisfy 1 <= s < n");
  for (const Edge& e : g.edges())
    if (e.hi <= s || e.lo > s) return {std::nullopt, e};
  return {crossing_matrix(g, s), std::nullopt};
}

/// Inverse of to_bipartite_matrix: rows become vertices 1..r, columns r+1..r+c.
inline OrderedGraph from_bipartite_matrix(const ZeroOneMatrix& m) {
  std::vector<Edge> edges;
  for (const auto& c : m.ones()) edges.push_back({c.row, m.rows() + c.col});
  return OrderedGraph::from_edges(m.rows() + m.cols(), std::move(edges));
}

}  // namespace bordered
