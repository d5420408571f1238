#pragma once

// The dense construction avoiding every cycle of length <= 2k that has a border
// edge. From a B_k set S inside {1..n}, the 2n x 2n bipartite matrix has
// A(i, j) = 1 iff 1 <= i <= n and i - j + n is in S. Rows are vertices 1..2n,
// columns are vertices 2n+1..4n, both ascending.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bordered/detect.hpp"
#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"
#include "bordered/sidon.hpp"

namespace bordered {

struct ConstructionRecord {
  Integer n = 0;
  int k = 2;
  BkSet set;
  OrderedGraph graph;
  std::size_t edge_count = 0;

  /// Matrix coordinates (row i, column j) of an edge.
  std::pair<std::int64_t, std::int64_t> cell(Edge e) const {
    return {static_cast<std::int64_t>(e.lo), static_cast<std::int64_t>(e.hi) - 2 * static_cast<std::int64_t>(n)};
  }
};

namespace detail {

inline ConstructionRecord build_graph(Integer n, int k, const BkSet& s) {
  if (n < 1) throw InvalidParameter("construction needs n >= 1");
  if (n > (Integer{1} << 29)) throw ResourceLimit("construction too large for 32-bit vertex labels");
  std::vector<Edge> edges;
  edges.reserve(n * s.size());
  for (Integer i = 1; i <= n; ++i)
    for (Integer x : s.elements()) {
      const Integer j = i + n - x;  // lies in 1..2n-1 for x in 1..n
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(2 * n + j)});
    }
  OrderedGraph g = OrderedGraph::from_edges(static_cast<Vertex>(4 * n), std::move(edges));
  const std::size_t m = g.edge_count();
  if (m != n * s.size()) throw InvariantViolation("construction edge count differs from n*|S|");
  return ConstructionRecord{n, k, s, std::move(g), m};
}

}  // namespace detail

/// Builds the construction. S must lie in {1..n} and be a B_k set.
inline ConstructionRecord build_construction(Integer n, int k, const BkSet& s) {
  if (k < 2) throw InvalidParameter("construction needs k >= 2");
  if (!s.elements().empty() && (s.elements().front() < 1 || s.elements().back() > n))
    throw InvalidParameter("B_k set must lie inside 1.." + std::to_string(n));
  const auto verdict = verify_bk(s.elements(), k);
  if (!verdict) {
    auto show = [](const Multiset& m) {
      std::string t = "{";
      for (std::size_t i = 0; i < m.size(); ++i) t += (i ? "," : "") + std::to_string(m[i]);
      return t + "}";
    };
    throw InvalidParameter("set is not B_" + std::to_string(k) + ": " + show(verdict.collision->first) + " and " +
                           show(verdict.collision->second) + " both sum to " + std::to_string(verdict.collision->sum));
  }
  return detail::build_graph(n, k, s);
}

/// Skips the B_k check (range is still enforced). Test harnesses only.
inline ConstructionRecord build_construction_unchecked(Integer n, int k, const BkSet& s) {
  if (!s.elements().empty() && (s.elements().front() < 1 || s.elements().back() > n))
    throw InvalidParameter("set must lie inside 1..n");
  return detail::build_graph(n, k, s);
}

/// Construction on the best available B_k set inside {1..n}.
inline ConstructionRecord build_construction(Integer n, int k) { return build_construction(n, k, best_bk_for_budget(n, k).set); }

/// Alternating-edge identity of a cycle in the construction: with
/// t_s = i_s - j_s + n along the traversal, the even-position and odd-position
/// terms have equal sums. Equal multisets would contradict a border edge, so a
/// witness always exposes two different l-sums of S with the same value.
struct SumIdentityCheck {
  std::vector<std::int64_t> even_terms;  // sorted
  std::vector<std::int64_t> odd_terms;   // sorted
  bool sums_equal = false;
  bool multisets_equal = false;
};

inline SumIdentityCheck sum_identity(const ConstructionRecord& rec, std::span<const Vertex> cycle) {
  SumIdentityCheck out;
  std::int64_t even_sum = 0, odd_sum = 0;
  for (std::size_t s = 0; s < cycle.size(); ++s) {
    const auto [i, j] = rec.cell(make_edge(cycle[s], cycle[(s + 1) % cycle.size()]));
    const std::int64_t t = i - j + static_cast<std::int64_t>(rec.n);
    (s % 2 == 0 ? out.even_terms : out.odd_terms).push_back(t);
    (s % 2 == 0 ? even_sum : odd_sum) += t;
  }
  std::sort(out.even_terms.begin(), out.even_terms.end());
  std::sort(out.odd_terms.begin(), out.odd_terms.end());
  out.sums_equal = even_sum == odd_sum;
  out.multisets_equal = out.even_terms == out.odd_terms;
  return out;
}

struct LengthCertificate {
  int length = 0;
  bool free = true;
  std::optional<CycleWitness> witness;
  std::optional<SumIdentityCheck> identity;
};

/// Runs the bordered-cycle detector for every even length 4..2k.
inline std::vector<LengthCertificate> certify_freeness(const ConstructionRecord& rec, const SearchLimits& lim = {}) {
  std::vector<LengthCertificate> out;
  for (int len = 4; len <= 2 * rec.k; len += 2) {
    LengthCertificate c;
    c.length = len;
    auto found = find_bordered_cycles(rec.graph, len, 1, lim);
    if (!found.empty()) {
      c.free = false;
      c.identity = sum_identity(rec, found.front().vertices);
      c.witness = std::move(found.front());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace bordered
