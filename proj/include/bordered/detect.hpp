#pragma once

// Cycle searches in ordered host graphs: bordered cycles, two-interval cycles
// by border class, plain (unordered) cycles, and 0-1 matrix pattern containment.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "bordered/cycle_pattern.hpp"
#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"

namespace bordered {

struct SearchLimits {
  Vertex max_vertices = 10'000;
  std::uint64_t max_search_nodes = 0;  // 0: unlimited
};

/// An embedded 2l-cycle, vertices in canonical traversal order: start at the
/// smallest vertex and move toward its smaller cycle-neighbor.
struct CycleWitness {
  std::vector<Vertex> vertices;
  CyclePattern pattern;

  BorderClass border_class() const { return pattern.border_class(); }
  /// First vertex of the first half with the last of the second half.
  Edge outer_border() const {
    const auto [lo, hi] = std::minmax_element(vertices.begin(), vertices.end());
    return {*lo, *hi};
  }
  /// Last vertex of the first half with the first of the second half.
  Edge inner_border() const {
    auto s = vertices;
    std::sort(s.begin(), s.end());
    return {s[s.size() / 2 - 1], s[s.size() / 2]};
  }
};

/// Builds the witness for a cycle whose sorted vertex set splits into halves
/// with every cycle edge crossing between them.
inline CycleWitness make_witness(std::span<const Vertex> seq) {
  std::vector<Vertex> sorted(seq.begin(), seq.end());
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&](Vertex v) { return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1; };
  std::vector<PatternEdge> edges;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const int a = rank(seq[i]), b = rank(seq[(i + 1) % seq.size()]);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return CycleWitness{std::vector<Vertex>(seq.begin(), seq.end()),
                      CyclePattern::from_edges(static_cast<int>(seq.size() / 2), std::move(edges))};
}

namespace detail {

template <OrderedAdjacency G>
void check_cycle_query(const G& g, int two_l, const SearchLimits& lim) {
  if (two_l < 4 || two_l % 2 != 0) throw InvalidParameter("cycle length must be an even integer >= 4");
  if (g.vertex_count() > lim.max_vertices)
    throw ResourceLimit("host has " + std::to_string(g.vertex_count()) + " vertices; detection cap is " + std::to_string(lim.max_vertices));
}

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (cap_ != 0 && ++spent_ > cap_) throw ResourceLimit("cycle search exceeded " + std::to_string(cap_) + " nodes");
  }

 private:
  std::uint64_t cap_;
  std::uint64_t spent_ = 0;
};

inline bool cyclically_adjacent(std::span<const Vertex> seq, Vertex x, Vertex y) {
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = seq[i], b = seq[(i + 1) % n];
    if ((a == x && b == y) || (a == y && b == x)) return true;
  }
  return false;
}

}  // namespace detail

/// Visits every bordered 2l-cycle exactly once. The search anchors on the
/// outer border (a, b), then alternates between the halves keeping every
/// first-half vertex in (a, min second half) and every second-half vertex in
/// (max first half, b). f receives the canonical traversal and returns false to
/// stop. Returns false iff stopped early.
template <OrderedAdjacency G, class F>
bool for_each_bordered_cycle(const G& g, int two_l, F&& f, const SearchLimits& lim = {}) {
  detail::check_cycle_query(g, two_l, lim);
  const auto len = static_cast<std::size_t>(two_l);
  const Vertex n = g.vertex_count();
  if (n < len) return true;
  std::vector<Vertex> seq(len), canon(len);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  detail::NodeBudget budget(lim.max_search_nodes);
  Vertex a = 0, b = 0;

  auto dfs = [&](auto&& self, std::size_t p, Vertex max_u, Vertex min_v) -> bool {
    budget.tick();
    if (p == len) {
      if (!detail::cyclically_adjacent(seq, max_u, min_v)) return true;
      canon[0] = a;
      for (std::size_t i = 1; i < len; ++i) canon[i] = seq[len - i];
      return f(std::span<const Vertex>(canon));
    }
    const Vertex last = seq[p - 1];
    for (Vertex x : g.neighbors(last)) {
      if (p % 2 == 0) {  // first half
        if (x <= a) continue;
        if (x >= min_v) break;
      } else {  // second half
        if (x <= max_u) continue;
        if (x >= b) break;
        if (p == len - 1 && !g.adjacent(x, a)) continue;
      }
      if (used[x]) continue;
      used[x] = 1;
      seq[p] = x;
      const bool go = p % 2 == 0 ? self(self, p + 1, std::max(max_u, x), min_v) : self(self, p + 1, max_u, std::min(min_v, x));
      used[x] = 0;
      if (!go) return false;
    }
    return true;
  };

  for (a = 1; a <= n; ++a) {
    for (Vertex nb : g.neighbors(a)) {
      if (nb <= a || nb - a + 1 < len) continue;
      b = nb;
      seq[0] = a;
      seq[1] = b;
      used[a] = used[b] = 1;
      const bool go = dfs(dfs, 2, a, b);
      used[a] = used[b] = 0;
      if (!go) return false;
    }
  }
  return true;
}

/// Visits every 2l-cycle with interval chromatic number 2 exactly once, in
/// canonical order. f(seq, has_outer, has_inner) returns false to stop.
template <OrderedAdjacency G, class F>
bool for_each_two_interval_cycle(const G& g, int two_l, F&& f, const SearchLimits& lim = {}) {
  detail::check_cycle_query(g, two_l, lim);
  const auto len = static_cast<std::size_t>(two_l);
  const Vertex n = g.vertex_count();
  if (n < len) return true;
  std::vector<Vertex> seq(len);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  detail::NodeBudget budget(lim.max_search_nodes);
  Vertex a = 0;

  auto dfs = [&](auto&& self, std::size_t p, Vertex max_u, Vertex min_v, Vertex max_v) -> bool {
    budget.tick();
    if (p == len) {
      const bool outer = seq[1] == max_v || seq[len - 1] == max_v;
      const bool inner = detail::cyclically_adjacent(seq, max_u, min_v);
      return f(std::span<const Vertex>(seq), outer, inner);
    }
    const Vertex last = seq[p - 1];
    for (Vertex x : g.neighbors(last)) {
      if (p % 2 == 0) {
        if (x <= a) continue;
        if (x >= min_v) break;
      } else {
        if (x <= max_u) continue;
        if (p == len - 1 && (x <= seq[1] || !g.adjacent(x, a))) continue;
      }
      if (used[x]) continue;
      used[x] = 1;
      seq[p] = x;
      const bool go = p % 2 == 0 ? self(self, p + 1, std::max(max_u, x), min_v, max_v)
                                 : self(self, p + 1, max_u, std::min(min_v, x), std::max(max_v, x));
      used[x] = 0;
      if (!go) return false;
    }
    return true;
  };

  for (a = 1; a <= n; ++a) {
    seq[0] = a;
    used[a] = 1;
    for (Vertex v : g.neighbors(a)) {
      if (v <= a) continue;
      seq[1] = v;
      used[v] = 1;
      const bool go = dfs(dfs, 2, a, v, v);
      used[v] = 0;
      if (!go) {
        used[a] = 0;
        return false;
      }
    }
    used[a] = 0;
  }
  return true;
}

/// Bordered 2l-cycles (borders taken relative to the cycle's own vertex set),
/// sorted by canonical traversal. limit == 0 means unlimited.
template <OrderedAdjacency G>
std::vector<CycleWitness> find_bordered_cycles(const G& g, int two_l, std::size_t limit = 0, const SearchLimits& lim = {}) {
  std::vector<CycleWitness> out;
  for_each_bordered_cycle(
      g, two_l,
      [&](std::span<const Vertex> seq) {
        out.push_back(make_witness(seq));
        return limit == 0 || out.size() < limit;
      },
      lim);
  std::sort(out.begin(), out.end(), [](const CycleWitness& x, const CycleWitness& y) { return x.vertices < y.vertices; });
  return out;
}

template <OrderedAdjacency G>
bool has_bordered_cycle(const G& g, int two_l, const SearchLimits& lim = {}) {
  return !for_each_bordered_cycle(g, two_l, [](std::span<const Vertex>) { return false; }, lim);
}

/// Two-interval 2l-cycles, optionally restricted to one border class.
template <OrderedAdjacency G>
std::vector<CycleWitness> find_two_interval_cycles(const G& g, int two_l, std::optional<BorderClass> filter, std::size_t limit = 0,
                                                   const SearchLimits& lim = {}) {
  std::vector<CycleWitness> out;
  for_each_two_interval_cycle(
      g, two_l,
      [&](std::span<const Vertex> seq, bool outer, bool inner) {
        if (filter && border_class_of(outer, inner) != *filter) return true;
        out.push_back(make_witness(seq));
        return limit == 0 || out.size() < limit;
      },
      lim);
  std::sort(out.begin(), out.end(), [](const CycleWitness& x, const CycleWitness& y) { return x.vertices < y.vertices; });
  return out;
}

/// Some cycle of exactly `length` vertices, ignoring the order (plain graph
/// cycle). Returned as a traversal starting at its smallest vertex.
template <OrderedAdjacency G>
std::optional<std::vector<Vertex>> find_cycle(const G& g, int length, const SearchLimits& lim = {}) {
  if (length < 3) throw InvalidParameter("cycle length must be >= 3");
  if (g.vertex_count() > lim.max_vertices) throw ResourceLimit("host exceeds detection cap");
  const auto len = static_cast<std::size_t>(length);
  const Vertex n = g.vertex_count();
  std::vector<Vertex> seq(len);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  detail::NodeBudget budget(lim.max_search_nodes);
  Vertex s = 0;
  auto dfs = [&](auto&& self, std::size_t p) -> bool {
    budget.tick();
    if (p == len) return true;
    for (Vertex x : g.neighbors(seq[p - 1])) {
      if (x <= s || used[x]) continue;
      if (p == len - 1 && (x <= seq[1] || !g.adjacent(x, s))) continue;
      used[x] = 1;
      seq[p] = x;
      if (self(self, p + 1)) return true;
      used[x] = 0;
    }
    return false;
  };
  for (s = 1; s <= n; ++s) {
    seq[0] = s;
    used[s] = 1;
    if (dfs(dfs, 1)) return seq;
    used[s] = 0;
  }
  return std::nullopt;
}

struct PatternMatch {
  std::vector<std::uint32_t> rows;  // ascending host rows, one per pattern row
  std::vector<std::uint32_t> cols;  // ascending host columns, one per pattern column
};

/// Finds ascending row and column selections under which the host has a 1
/// wherever the pattern does. Backtracks over column assignments; after every
/// column the rows are re-placed greedily (earliest feasible host row), which
/// is exact for monotone row placement and prunes dead column prefixes.
inline std::optional<PatternMatch> contains_pattern(const ZeroOneMatrix& host, const ZeroOneMatrix& pattern) {
  if (pattern.count() == 0) throw InvalidParameter("pattern must contain at least one 1-entry");
  const std::uint32_t pr = pattern.rows(), pc = pattern.cols();
  if (pr > host.rows() || pc > host.cols()) return std::nullopt;

  std::vector<std::uint32_t> col_weight(host.cols() + 1, 0);
  for (const auto& c : host.ones()) ++col_weight[c.col];
  std::vector<std::uint32_t> pattern_weight(pc + 1, 0);
  for (const auto& c : pattern.ones()) ++pattern_weight[c.col];

  std::vector<std::uint32_t> cols(pc + 1, 0), rows(pr + 1, 0);
  auto place_rows = [&](std::uint32_t assigned) -> bool {
    std::uint32_t r = 0;
    for (std::uint32_t i = 1; i <= pr; ++i) {
      const auto need = pattern.row(i);
      for (++r; r + (pr - i) <= host.rows(); ++r) {
        bool ok = true;
        for (std::uint32_t j : need) {
          if (j > assigned) break;
          if (!host.at(r, cols[j])) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
      if (r + (pr - i) > host.rows()) return false;
      rows[i] = r;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::uint32_t j) -> bool {
    if (j > pc) return true;
    for (std::uint32_t c = cols[j - 1] + 1; c + (pc - j) <= host.cols(); ++c) {
      if (col_weight[c] < pattern_weight[j]) continue;
      cols[j] = c;
      if (place_rows(j) && self(self, j + 1)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 1)) return std::nullopt;
  place_rows(pc);
  return PatternMatch{std::vector<std::uint32_t>(rows.begin() + 1, rows.end()), std::vector<std::uint32_t>(cols.begin() + 1, cols.end())};
}

}  // namespace bordered
