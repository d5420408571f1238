#pragma once

// Ordered 2k-cycles with interval chromatic number 2. The first interval is
// {1..k}, the second {k+1..2k}; every edge joins the two intervals. The outer
// border is the edge (1, 2k), the inner border the edge (k, k+1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"

namespace bordered {

enum class BorderClass { Bordered, Inbordered, Outbordered, Unbordered };

inline std::string_view to_string(BorderClass c) {
  switch (c) {
    case BorderClass::Bordered: return "bordered";
    case BorderClass::Inbordered: return "inbordered";
    case BorderClass::Outbordered: return "outbordered";
    case BorderClass::Unbordered: return "unbordered";
  }
  return "?";
}

inline std::optional<BorderClass> parse_border_class(std::string_view s) {
  for (auto c : {BorderClass::Bordered, BorderClass::Inbordered, BorderClass::Outbordered, BorderClass::Unbordered})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

inline BorderClass border_class_of(bool outer, bool inner) {
  if (outer && inner) return BorderClass::Bordered;
  if (inner) return BorderClass::Inbordered;
  if (outer) return BorderClass::Outbordered;
  return BorderClass::Unbordered;
}

struct PatternEdge {
  int u = 0;  // first interval, 1..k
  int v = 0;  // second interval, k+1..2k
  auto operator<=>(const PatternEdge&) const = default;
};

class CyclePattern {
 public:
  /// Validates: k >= 2, 2k edges between the intervals, one Hamiltonian cycle.
  static CyclePattern from_edges(int k, std::vector<PatternEdge> edges) {
    if (k < 2) throw InvalidParameter("cycle pattern needs half-length >= 2");
    std::vector<PatternEdge> norm;
    for (auto e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 1 || e.u > k || e.v <= k || e.v > 2 * k)
        throw InvalidParameter("pattern edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") does not join the two intervals");
      norm.push_back(e);
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    if (norm.size() != static_cast<std::size_t>(2 * k)) throw InvalidParameter("a 2k-cycle pattern needs exactly 2k distinct edges");
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * k + 1));
    for (auto e : norm) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (int x = 1; x <= 2 * k; ++x)
      if (adj[static_cast<std::size_t>(x)].size() != 2) throw InvalidParameter("every pattern vertex needs degree 2");
    // Walk from 1; a single cycle visits all 2k vertices.
    int prev = 0, cur = 1, steps = 0;
    do {
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const int next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != 1 && steps <= 2 * k);
    if (steps != 2 * k) throw InvalidParameter("pattern edges do not form a single cycle");
    CyclePattern p;
    p.k_ = k;
    p.edges_ = std::move(norm);
    return p;
  }

  /// Square k x k matrix; row i is vertex i, column j is vertex k + j.
  static CyclePattern from_matrix(const ZeroOneMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidParameter("cycle pattern matrix must be square");
    std::vector<PatternEdge> edges;
    const int k = static_cast<int>(m.rows());
    for (const auto& c : m.ones()) edges.push_back({static_cast<int>(c.row), k + static_cast<int>(c.col)});
    return from_edges(k, std::move(edges));
  }

  int half_length() const { return k_; }
  int length() const { return 2 * k_; }
  const std::vector<PatternEdge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const { return std::binary_search(edges_.begin(), edges_.end(), PatternEdge{u, v}); }
  bool has_outer() const { return has_edge(1, 2 * k_); }
  bool has_inner() const { return has_edge(k_, k_ + 1); }
  BorderClass border_class() const { return border_class_of(has_outer(), has_inner()); }

  /// The edge set is invariant under rotation and reflection of the traversal,
  /// so its listing serves as the canonical key.
  std::string key() const {
    std::string s = std::to_string(k_) + ":";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(edges_[i].u) + "-" + std::to_string(edges_[i].v);
    }
    return s;
  }

  ZeroOneMatrix matrix() const {
    std::vector<ZeroOneMatrix::Cell> cells;
    for (auto e : edges_) cells.push_back({static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v - k_)});
    return ZeroOneMatrix(static_cast<std::uint32_t>(k_), static_cast<std::uint32_t>(k_), std::move(cells));
  }

  /// Vertex sequence starting at 1 and moving toward its smaller neighbor.
  std::vector<int> traversal() const {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * k_ + 1));
    for (auto e : edges_) {
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> seq{1};
    int prev = 1;
    int cur = std::min(adj[1][0], adj[1][1]);
    while (cur != 1) {
      seq.push_back(cur);
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const int next = nb[0] != prev ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    return seq;
  }

  auto operator<=>(const CyclePattern& o) const {
    if (auto c = k_ <=> o.k_; c != 0) return c;
    return edges_ <=> o.edges_;
  }
  bool operator==(const CyclePattern& o) const = default;

 private:
  CyclePattern() = default;
  int k_ = 0;
  std::vector<PatternEdge> edges_;
};

inline BorderClass classify(const CyclePattern& p) { return p.border_class(); }

/// Maps every edge (u, v) to (u, 3k + 1 - v).
inline CyclePattern reverse_second_interval(const CyclePattern& p) {
  const int k = p.half_length();
  std::vector<PatternEdge> edges;
  for (auto e : p.edges()) edges.push_back({e.u, 3 * k + 1 - e.v});
  return CyclePattern::from_edges(k, std::move(edges));
}

inline constexpr int kMaxEnumeratedCycleLength = 12;

/// All ordered 2k-cycles with interval chromatic number 2, ascending by edge list.
inline std::vector<CyclePattern> enumerate_ordered_cycles(int two_k, int max_two_k = kMaxEnumeratedCycleLength) {
  if (two_k < 4 || two_k % 2 != 0) throw InvalidParameter("cycle length must be an even integer >= 4");
  if (two_k > max_two_k) throw InvalidParameter("cycle length " + std::to_string(two_k) + " exceeds the enumeration cap " + std::to_string(max_two_k));
  const int k = two_k / 2;
  // Traversals 1, v_1, u_2, v_2, ..., u_k, v_k; reflection identified by v_1 < v_k.
  std::vector<int> us(static_cast<std::size_t>(k - 1)), vs(static_cast<std::size_t>(k));
  std::iota(us.begin(), us.end(), 2);
  std::iota(vs.begin(), vs.end(), k + 1);
  std::vector<CyclePattern> out;
  do {
    if (vs.front() > vs.back()) continue;
    do {
      std::vector<PatternEdge> edges;
      int u = 1;
      for (int i = 0; i < k; ++i) {
        const int v = vs[static_cast<std::size_t>(i)];
        edges.push_back({u, v});
        u = i + 1 < k ? us[static_cast<std::size_t>(i)] : 1;
        edges.push_back({u, v});
      }
      out.push_back(CyclePattern::from_edges(k, std::move(edges)));
    } while (std::next_permutation(us.begin(), us.end()));
  } while (std::next_permutation(vs.begin(), vs.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- the six named hexagons, plus named pattern sets.

inline const std::vector<std::pair<std::string, CyclePattern>>& named_hexagons() {
  static const std::vector<std::pair<std::string, CyclePattern>> table = [] {
    auto hex = [](std::vector<int> walk) {
      std::vector<PatternEdge> edges;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        int a = walk[i], b = walk[(i + 1) % walk.size()];
        edges.push_back({std::min(a, b), std::max(a, b)});
      }
      return CyclePattern::from_edges(3, std::move(edges));
    };
    return std::vector<std::pair<std::string, CyclePattern>>{
        {"C6_1", hex({1, 5, 2, 4, 3, 6})}, {"C6_2", hex({1, 5, 3, 4, 2, 6})}, {"C6_3", hex({1, 6, 2, 5, 3, 4})},
        {"C6_O", hex({1, 4, 2, 5, 3, 6})}, {"C6_U", hex({1, 5, 3, 6, 2, 4})}, {"C6_I", hex({1, 5, 2, 6, 3, 4})},
    };
  }();
  return table;
}

inline std::optional<CyclePattern> named_pattern(std::string_view name) {
  for (const auto& [n, p] : named_hexagons())
    if (n == name) return p;
  return std::nullopt;
}

inline std::optional<std::string> pattern_name(const CyclePattern& p) {
  for (const auto& [n, q] : named_hexagons())
    if (q == p) return n;
  return std::nullopt;
}

/// All bordered patterns of the given length.
inline std::vector<CyclePattern> bordered_patterns(int two_k, int max_two_k = kMaxEnumeratedCycleLength) {
  std::vector<CyclePattern> out;
  for (auto& p : enumerate_ordered_cycles(two_k, max_two_k))
    if (p.border_class() == BorderClass::Bordered) out.push_back(std::move(p));
  return out;
}

/// Resolves a hexagon name (C6_1 ... C6_I), a two-hexagon family S1..S4, or a
/// bordered family CB<2k> (CB4, CB6, ...). Throws InvalidParameter otherwise.
inline std::vector<CyclePattern> resolve_pattern_set(std::string_view name) {
  if (auto p = named_pattern(name)) return {*p};
  static const std::map<std::string, std::pair<std::string, std::string>, std::less<>> families = {
      {"S1", {"C6_2", "C6_1"}}, {"S2", {"C6_2", "C6_3"}}, {"S3", {"C6_U", "C6_I"}}, {"S4", {"C6_U", "C6_O"}}};
  if (auto it = families.find(name); it != families.end())
    return {*named_pattern(it->second.first), *named_pattern(it->second.second)};
  if (name.size() > 2 && name.substr(0, 2) == "CB") {
    int len = 0;
    for (char c : name.substr(2)) {
      if (c < '0' || c > '9') throw InvalidParameter("unknown pattern name: " + std::string(name));
      len = len * 10 + (c - '0');
      if (len > 1000) break;
    }
    return bordered_patterns(len);
  }
  throw InvalidParameter("unknown pattern name: " + std::string(name));
}

}  // namespace bordered
