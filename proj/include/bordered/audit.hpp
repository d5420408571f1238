#pragma once

// Numeric audit of the zigzag-path counting argument on a concrete host:
// the peeling sequence G_k ⊇ ... ⊇ G_1, the upper bound N^2 on k-zigzag paths
// for hosts free of bordered cycles, the lower bound via the peeled
// neighborhoods, and the closing inequality m < 3k N^(1+1/k). Also an exact
// extremal search over all ordered graphs on at most 7 vertices.
//
// N is the host's vertex count (distinct from the construction parameter n).

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bordered/cycle_pattern.hpp"
#include "bordered/detect.hpp"
#include "bordered/error.hpp"
#include "bordered/extract.hpp"
#include "bordered/ordered_graph.hpp"
#include "bordered/zigzag.hpp"

namespace bordered {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

struct AuditCheck {
  std::string name;
  CheckStatus status = CheckStatus::Skip;
  std::string relation;  // e.g. "<=", read as lhs relation rhs
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

inline AuditCheck make_check(std::string name, bool ok, std::string relation, double lhs, double rhs, std::string note = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(relation), lhs, rhs, std::move(note)};
}

inline AuditCheck skipped(std::string name, std::string relation, double lhs, double rhs, std::string why) {
  return {std::move(name), CheckStatus::Skip, std::move(relation), lhs, rhs, std::move(why)};
}

inline bool all_clean(std::span<const AuditCheck> checks) {
  return std::none_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.status == CheckStatus::Fail; });
}

struct PeelLevel {
  int index = 0;                                // i
  OrderedGraph graph;                           // G_i
  std::vector<std::vector<Vertex>> left_plus;   // L_i^+(x) ascending, index 0 unused
  std::vector<std::vector<Vertex>> right_plus;  // R_i^+(x) ascending
};

struct PeelSequence {
  std::size_t m = 0;
  Vertex N = 0;
  int k = 0;
  std::uint64_t u = 0;
  std::vector<PeelLevel> levels;  // levels[i - 1] holds G_i
  std::vector<AuditCheck> checks;

  const PeelLevel& level(int i) const { return levels.at(static_cast<std::size_t>(i - 1)); }
  bool clean() const { return all_clean(checks); }
};

namespace detail {

/// A < B in the sense max A < min B; vacuous when either side is empty.
inline bool set_precedes(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return a.empty() || b.empty() || a.back() < b.front();
}

inline std::size_t left_degree(const OrderedGraph& g, Vertex x) {
  const auto nb = g.neighbors(x);
  return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), x) - nb.begin());
}

inline std::size_t right_degree(const OrderedGraph& g, Vertex x) { return g.degree(x) - left_degree(g, x); }

}  // namespace detail

/// G_k = G; G_{i-1} drops, for every vertex, the edges to its u smallest left
/// neighbors and its u largest right neighbors in G_i (all of them if fewer).
inline PeelSequence peel(const OrderedGraph& g, int k) {
  if (k < 2) throw InvalidParameter("peel needs k >= 2");
  PeelSequence p;
  p.m = g.edge_count();
  p.N = g.vertex_count();
  p.k = k;
  p.u = p.N == 0 ? 0 : p.m / (2 * static_cast<std::size_t>(k) * p.N);
  p.levels.resize(static_cast<std::size_t>(k));
  const auto u = static_cast<std::size_t>(p.u);

  OrderedGraph cur = g;
  std::vector<std::size_t> removed_per_step;
  for (int i = k; i >= 1; --i) {
    PeelLevel& lv = p.levels[static_cast<std::size_t>(i - 1)];
    lv.index = i;
    lv.left_plus.assign(static_cast<std::size_t>(p.N) + 1, {});
    lv.right_plus.assign(static_cast<std::size_t>(p.N) + 1, {});
    std::vector<Edge> drop;
    for (Vertex x = 1; x <= p.N; ++x) {
      const auto [left, right] = left_right_neighborhoods(cur, x);
      const std::size_t tl = std::min(u, left.size()), tr = std::min(u, right.size());
      lv.left_plus[x].assign(left.begin(), left.begin() + static_cast<std::ptrdiff_t>(tl));
      lv.right_plus[x].assign(right.end() - static_cast<std::ptrdiff_t>(tr), right.end());
      for (Vertex y : lv.left_plus[x]) drop.push_back({y, x});
      for (Vertex y : lv.right_plus[x]) drop.push_back({x, y});
    }
    lv.graph = cur;
    if (i == 1) break;
    std::sort(drop.begin(), drop.end());
    drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
    std::vector<Edge> keep;
    keep.reserve(cur.edge_count());
    std::set_difference(cur.edges().begin(), cur.edges().end(), drop.begin(), drop.end(), std::back_inserter(keep));
    removed_per_step.push_back(drop.size());
    cur = cur.with_edges(std::move(keep));
  }

  // Property 1: at most 2Nu <= m/k edges per step, so |E(G_i)| >= m i / k.
  {
    bool ok = true;
    double worst = 0.0;
    for (int i = 1; i <= k; ++i) {
      const std::size_t ei = p.level(i).graph.edge_count();
      if (ei * static_cast<std::size_t>(k) < p.m * static_cast<std::size_t>(i)) ok = false;
      worst = std::max(worst, static_cast<double>(p.m) * i / k - static_cast<double>(ei));
    }
    for (std::size_t r : removed_per_step)
      if (r > 2 * static_cast<std::size_t>(p.N) * u) ok = false;
    p.checks.push_back(make_check("peel_property_1", ok, ">=", static_cast<double>(p.level(1).graph.edge_count()),
                                  static_cast<double>(p.m) / k, "|E(G_i)| >= m*i/k for all i; worst deficit " + std::to_string(worst)));
  }
  // Property 2, in the orientation the deletions produce: the peeled left sets
  // move right as the level index drops, the peeled right sets move left.
  //   L_{2i+2}^+(x) < L_{2i}^+(x)   and   R_{2i-1}^+(x) < R_{2i+1}^+(x)
  {
    bool ok = true;
    std::size_t compared = 0;
    for (Vertex x = 1; x <= p.N; ++x) {
      for (int i = 1; 2 * i + 2 <= k; ++i) {
        const auto& hi = p.level(2 * i + 2).left_plus[x];
        const auto& lo = p.level(2 * i).left_plus[x];
        ok = ok && detail::set_precedes(hi, lo);
        compared += !hi.empty() && !lo.empty();
      }
      for (int i = 1; 2 * i + 1 <= k; ++i) {
        const auto& a = p.level(2 * i - 1).right_plus[x];
        const auto& b = p.level(2 * i + 1).right_plus[x];
        ok = ok && detail::set_precedes(a, b);
        compared += !a.empty() && !b.empty();
      }
    }
    p.checks.push_back(make_check("peel_property_2", ok, "nested", static_cast<double>(compared), 0.0,
                                  "non-vacuous set comparisons: " + std::to_string(compared)));
  }
  // Property 3: L_{2i-1}(x) nonempty forces |L_{2i}^+(x)| = u; R_{2i}(x)
  // nonempty forces |R_{2i+1}^+(x)| = u.
  {
    bool ok = true;
    for (Vertex x = 1; x <= p.N; ++x) {
      for (int i = 1; 2 * i <= k; ++i)
        if (detail::left_degree(p.level(2 * i - 1).graph, x) > 0 && p.level(2 * i).left_plus[x].size() != u) ok = false;
      for (int i = 1; 2 * i + 1 <= k; ++i)
        if (detail::right_degree(p.level(2 * i).graph, x) > 0 && p.level(2 * i + 1).right_plus[x].size() != u) ok = false;
    }
    p.checks.push_back(make_check("peel_property_3", ok, "==", static_cast<double>(u), static_cast<double>(u)));
  }
  return p;
}

/// Freeness of bordered cycles of every even length 4..2k.
inline InputStatus verify_bordered_girth(const OrderedGraph& g, int k, std::size_t budget_edges, const SearchLimits& lim = {}) {
  if (g.edge_count() > budget_edges) return InputStatus::Conditional;
  try {
    for (int len = 4; len <= 2 * k; len += 2)
      if (has_bordered_cycle(g, len, lim)) return InputStatus::Violated;
  } catch (const ResourceLimit&) {
    return InputStatus::Conditional;
  }
  return InputStatus::Verified;
}

struct AuditOptions {
  std::size_t budget_edges = 20'000;
  SearchLimits limits{};
  std::optional<InputStatus> known_status;
  long double family_budget = 5e7;  // max paths enumerated when checking the u^(k-1) family
};

struct ZigzagAudit {
  std::size_t m = 0;
  Vertex N = 0;
  int k = 0;
  std::uint64_t u = 0;
  InputStatus freeness = InputStatus::Conditional;
  std::uint64_t zigzag_total = 0;
  std::uint64_t per_pair_max = 0;
  std::size_t g1_edges = 0;
  double lower_bound = 0.0;    // m^k / (k^k (3N)^(k-1))
  double upper_bound = 0.0;    // N^2
  double product_bound = 0.0;  // |E(G_1)| u^(k-1)
  double closing_bound = 0.0;  // 3k N^(1+1/k)
  bool u_regime = false;       // u >= m / (3kN)
  std::vector<AuditCheck> checks;

  bool clean() const { return all_clean(checks); }
};

namespace detail {

/// Walks v_i in L_i^+(v_{i-1}) (i even) or R_i^+(v_{i-1}) (i odd) from every
/// edge of G_1. Returns (edges with count != u^(k-1), paths that fail the zigzag test).
inline std::pair<std::size_t, std::size_t> check_zigzag_family(const OrderedGraph& g, const PeelSequence& p) {
  std::uint64_t expect = 1;
  for (int i = 1; i < p.k; ++i) expect *= p.u;
  std::size_t bad_counts = 0, bad_paths = 0;
  std::vector<Vertex> seq(static_cast<std::size_t>(p.k) + 1);
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, int i) -> void {
    if (i > p.k) {
      ++count;
      if (!is_zigzag_path(g, seq)) ++bad_paths;
      return;
    }
    const auto& lv = p.level(i);
    const Vertex prev = seq[static_cast<std::size_t>(i) - 1];
    for (Vertex w : (i % 2 == 0 ? lv.left_plus[prev] : lv.right_plus[prev])) {
      seq[static_cast<std::size_t>(i)] = w;
      self(self, i + 1);
    }
  };
  for (const Edge& e : p.level(1).graph.edges()) {
    seq[0] = e.lo;
    seq[1] = e.hi;
    count = 0;
    dfs(dfs, 2);
    if (count != expect) ++bad_counts;
  }
  return {bad_counts, bad_paths};
}

}  // namespace detail

inline ZigzagAudit zigzag_audit(const OrderedGraph& g, int k, const AuditOptions& opt = {}) {
  if (k < 2) throw InvalidParameter("zigzag audit needs k >= 2");
  ZigzagAudit a;
  a.m = g.edge_count();
  a.N = g.vertex_count();
  a.k = k;
  a.freeness = opt.known_status ? *opt.known_status : verify_bordered_girth(g, k, opt.budget_edges, opt.limits);

  const PeelSequence p = peel(g, k);
  a.u = p.u;
  a.checks = p.checks;
  a.g1_edges = p.level(1).graph.edge_count();
  a.zigzag_total = count_zigzag_paths(g, k);
  a.per_pair_max = max_zigzag_pair_count(g, k);

  const long double m = static_cast<long double>(a.m), N = static_cast<long double>(a.N), kk = k;
  const long double lower = a.N == 0 ? 0.0L : std::pow(m, kk) / (std::pow(kk, kk) * std::pow(3.0L * N, kk - 1));
  const long double product = static_cast<long double>(a.g1_edges) * std::pow(static_cast<long double>(a.u), kk - 1);
  a.lower_bound = static_cast<double>(lower);
  a.upper_bound = static_cast<double>(N * N);
  a.product_bound = static_cast<double>(product);
  a.closing_bound = static_cast<double>(3.0L * kk * std::pow(N, 1.0L + 1.0L / kk));
  a.u_regime = a.N > 0 && 3.0L * kk * N * static_cast<long double>(a.u) >= m;

  const bool verified = a.freeness == InputStatus::Verified;
  const std::string unverified = std::string("host freeness ") + to_string(a.freeness);
  const auto total = static_cast<double>(a.zigzag_total);

  if (verified) {
    a.checks.push_back(make_check("claim1_per_pair_max", a.per_pair_max <= 1, "<=", static_cast<double>(a.per_pair_max), 1.0));
    a.checks.push_back(make_check("claim1_total_le_N2", static_cast<long double>(a.zigzag_total) <= N * N, "<=", total, a.upper_bound));
  } else {
    a.checks.push_back(skipped("claim1_per_pair_max", "<=", static_cast<double>(a.per_pair_max), 1.0, unverified));
    a.checks.push_back(skipped("claim1_total_le_N2", "<=", total, a.upper_bound, unverified));
  }

  if (a.u == 0) {
    const std::string vacuous = "vacuous: u = 0";
    a.checks.push_back(skipped("zigzag_family_exact", "==", 0.0, 0.0, vacuous));
    a.checks.push_back(skipped("claim2_total_ge_product", ">=", total, a.product_bound, vacuous));
    a.checks.push_back(skipped("claim2_product_ge_lower", ">=", a.product_bound, a.lower_bound, vacuous));
  } else {
    if (product > opt.family_budget) {
      a.checks.push_back(skipped("zigzag_family_exact", "==", a.product_bound, a.product_bound, "family larger than the enumeration budget"));
    } else {
      const auto [bad_counts, bad_paths] = detail::check_zigzag_family(g, p);
      a.checks.push_back(make_check("zigzag_family_exact", bad_counts == 0 && bad_paths == 0, "==", static_cast<double>(bad_counts + bad_paths), 0.0,
                                    "edges with a family size other than u^(k-1): " + std::to_string(bad_counts) +
                                        "; non-zigzag members: " + std::to_string(bad_paths)));
    }
    a.checks.push_back(make_check("claim2_total_ge_product", static_cast<long double>(a.zigzag_total) >= product, ">=", total, a.product_bound));
    a.checks.push_back(make_check("claim2_product_ge_lower", product >= lower, ">=", a.product_bound, a.lower_bound,
                                  a.u_regime ? "u >= m/(3kN)" : "outside the regime u >= m/(3kN)"));
  }

  if (verified) {
    a.checks.push_back(make_check("closing_lower_le_N2", lower <= N * N, "<=", a.lower_bound, a.upper_bound));
    a.checks.push_back(make_check("closing_m_bound", m < 3.0L * kk * std::pow(N, 1.0L + 1.0L / kk), "<", static_cast<double>(a.m), a.closing_bound));
  } else {
    a.checks.push_back(skipped("closing_lower_le_N2", "<=", a.lower_bound, a.upper_bound, unverified));
    a.checks.push_back(skipped("closing_m_bound", "<", static_cast<double>(a.m), a.closing_bound, unverified));
  }
  return a;
}

// --- exact extremal numbers on tiny hosts

/// Every labeled ordered graph on 1..n as a bitmask over the edges in
/// lexicographic order, and the masks of all embeddings of a pattern set.
class TinyPatternFilter {
 public:
  static constexpr int kMaxVertices = 11;

  TinyPatternFilter(int n, std::span<const CyclePattern> forbidden) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw ResourceLimit("tiny search supports at most " + std::to_string(kMaxVertices) + " vertices");
    index_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), -1);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        index_[slot(a, b)] = static_cast<int>(edges_.size());
        edges_.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
      }
    by_top_.resize(edges_.size());
    for (const auto& p : forbidden) {
      const int len = p.length();
      if (len > n) continue;
      // Every increasing choice of len host vertices, pattern vertex i -> i-th chosen.
      std::vector<int> w(static_cast<std::size_t>(len));
      auto choose = [&](auto&& self, int pos, int from) -> void {
        if (pos == len) {
          std::uint64_t mask = 0;
          for (auto e : p.edges()) mask |= std::uint64_t{1} << bit(w[static_cast<std::size_t>(e.u - 1)], w[static_cast<std::size_t>(e.v - 1)]);
          masks_.push_back(mask);
          return;
        }
        for (int x = from; x <= n - (len - pos - 1); ++x) {
          w[static_cast<std::size_t>(pos)] = x;
          self(self, pos + 1, x + 1);
        }
      };
      choose(choose, 0, 1);
    }
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    for (std::uint64_t mk : masks_) by_top_[static_cast<std::size_t>(63 - std::countl_zero(mk))].push_back(mk);
  }

  int vertex_count() const { return n_; }
  std::size_t edge_slots() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const std::uint64_t> forbidden_masks() const { return masks_; }

  int bit(int a, int b) const { return index_[slot(std::min(a, b), std::max(a, b))]; }

  bool is_free(std::uint64_t mask) const {
    return std::none_of(masks_.begin(), masks_.end(), [&](std::uint64_t f) { return (mask & f) == f; });
  }

  /// Freeness of mask | bit(e) given that mask alone is free and has no bit above e.
  bool can_add(std::uint64_t mask, std::size_t e) const {
    const std::uint64_t with = mask | (std::uint64_t{1} << e);
    for (std::uint64_t f : by_top_[e])
      if ((with & f) == f) return false;
    return true;
  }

  OrderedGraph graph(std::uint64_t mask) const {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (mask >> i & 1) es.push_back(edges_[i]);
    return OrderedGraph::from_edges(static_cast<Vertex>(n_), std::move(es));
  }

 private:
  std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(b); }

  int n_;
  std::vector<int> index_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<std::uint64_t>> by_top_;  // forbidden masks keyed by their highest edge
};

/// Visits every free graph once (include-first order). Supergraphs of a
/// violator are never generated. f(mask) returns false to stop.
template <class F>
bool for_each_free_graph(const TinyPatternFilter& filter, F&& f) {
  const std::size_t slots = filter.edge_slots();
  auto rec = [&](auto&& self, std::size_t e, std::uint64_t mask) -> bool {
    if (e == slots) return f(mask);
    if (filter.can_add(mask, e) && !self(self, e + 1, mask | (std::uint64_t{1} << e))) return false;
    return self(self, e + 1, mask);
  };
  return rec(rec, 0, 0);
}

struct TinyExtremal {
  int n = 0;
  std::size_t max_edges = 0;
  OrderedGraph witness;      // lexicographically smallest edge list among maximizers
  std::uint64_t nodes = 0;   // search nodes visited
};

/// Maximum edge count over ordered graphs on 1..n with no forbidden pattern as
/// an ordered subgraph. Include-first branch and bound: the first maximizer
/// reached is the lexicographically smallest one.
inline TinyExtremal exact_extremal_tiny(int n, std::span<const CyclePattern> forbidden) {
  if (n < 1) throw InvalidParameter("exact_extremal_tiny needs n >= 1");
  if (n > 7) throw ResourceLimit("exact_extremal_tiny is limited to n <= 7");
  const TinyPatternFilter filter(n, forbidden);
  const std::size_t slots = filter.edge_slots();
  long best = -1;
  std::uint64_t best_mask = 0, nodes = 0;
  auto rec = [&](auto&& self, std::size_t e, std::uint64_t mask, long count) -> void {
    ++nodes;
    if (count + static_cast<long>(slots - e) <= best) return;
    if (e == slots) {
      best = count;
      best_mask = mask;
      return;
    }
    if (filter.can_add(mask, e)) self(self, e + 1, mask | (std::uint64_t{1} << e), count + 1);
    self(self, e + 1, mask, count);
  };
  rec(rec, 0, 0, 0);
  return {n, static_cast<std::size_t>(best), filter.graph(best_mask), nodes};
}

}  // namespace bordered
