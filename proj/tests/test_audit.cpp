#include <gtest/gtest.h>

#include <set>

#include "bordered/audit.hpp"
#include "bordered/construct.hpp"
#include "bordered/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bordered;
using support::graph;

namespace {

const AuditCheck& check(const std::vector<AuditCheck>& cs, const std::string& name) {
  for (const auto& c : cs)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

// Edge counts of G_k, ..., G_1 by deleting from adjacency sets directly.
std::vector<std::size_t> peel_oracle(const OrderedGraph& g, int k) {
  const int n = static_cast<int>(g.vertex_count());
  std::set<std::pair<int, int>> cur;
  for (auto e : g.edges()) cur.insert({static_cast<int>(e.lo), static_cast<int>(e.hi)});
  const std::size_t u = n == 0 ? 0 : cur.size() / (2 * static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
  std::vector<std::size_t> sizes{cur.size()};
  for (int step = 1; step < k; ++step) {
    std::set<std::pair<int, int>> drop;
    for (int x = 1; x <= n; ++x) {
      std::vector<int> left, right;
      for (int y = 1; y <= n; ++y) {
        if (cur.count({std::min(x, y), std::max(x, y)}) == 0) continue;
        (y < x ? left : right).push_back(y);
      }
      for (std::size_t i = 0; i < std::min(u, left.size()); ++i) drop.insert({left[i], x});
      for (std::size_t i = 0; i < std::min(u, right.size()); ++i) drop.insert({x, right[right.size() - 1 - i]});
    }
    for (auto e : drop) cur.erase(e);
    sizes.push_back(cur.size());
  }
  return sizes;
}

// Maximum edges over all masks free of the patterns, with the lexicographically
// smallest maximizer, using the cycle oracle as the membership test.
std::pair<std::size_t, std::vector<std::pair<int, int>>> brute_extremal(int n, int two_k) {
  std::size_t best = 0;
  std::vector<std::pair<int, int>> witness;
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const auto es = oracle::mask_edges(n, mask);
    if (es.size() < best) continue;
    if (!oracle::bordered_cycles(oracle::adjacency(n, es), two_k).empty()) continue;
    if (es.size() > best || es < witness) {
      best = es.size();
      witness = es;
    }
  }
  return {best, witness};
}

}  // namespace

TEST(Peel, EmptyGraph) {
  const auto p = peel(graph(0, {}), 3);
  EXPECT_EQ(p.u, 0u);
  EXPECT_EQ(p.levels.size(), 3u);
  EXPECT_TRUE(p.clean());
  const auto q = peel(graph(5, {}), 2);
  EXPECT_EQ(q.level(1).graph.edge_count(), 0u);
  EXPECT_TRUE(q.clean());
  EXPECT_THROW(peel(graph(3, {}), 1), InvalidParameter);
}

TEST(Peel, SparseGraphsKeepEverything) {
  // m < 2kN gives u = 0, so nothing is removed.
  const auto g = random_ordered_graph(20, 0.1, 1);
  const auto p = peel(g, 3);
  EXPECT_EQ(p.u, 0u);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(p.level(i).graph, g);
  EXPECT_TRUE(p.clean());
}

TEST(Peel, MatchesDeletionOracleAndProperties) {
  int multi = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = 2 + static_cast<int>(seed % 3);
    const auto g = random_ordered_graph(20 + static_cast<Vertex>(seed % 11), 0.7 + 0.1 * static_cast<double>(seed % 3), seed);
    const auto p = peel(g, k);
    multi += p.u >= 2;
    const auto ref = peel_oracle(g, k);
    for (int i = k; i >= 1; --i) EXPECT_EQ(p.level(i).graph.edge_count(), ref[static_cast<std::size_t>(k - i)]) << seed << " " << i;
    EXPECT_TRUE(p.clean()) << seed;
    for (const auto& c : p.checks) EXPECT_EQ(c.status, CheckStatus::Pass) << c.name << " " << seed;
  }
  EXPECT_GT(multi, 10);
}

TEST(Peel, ConstructionPropertyOne) {
  const auto rec = build_construction(100, 2);
  const auto p = peel(rec.graph, 2);
  EXPECT_EQ(check(p.checks, "peel_property_1").status, CheckStatus::Pass);
  EXPECT_GE(2 * p.level(1).graph.edge_count(), p.m);
}

TEST(ZigzagAudit, ConstructionIsClean) {
  for (int k = 2; k <= 3; ++k) {
    const auto rec = build_construction(50, k);
    const auto a = zigzag_audit(rec.graph, k);
    EXPECT_EQ(a.freeness, InputStatus::Verified);
    EXPECT_TRUE(a.clean());
    EXPECT_LE(a.per_pair_max, 1u);
    EXPECT_LE(static_cast<double>(a.zigzag_total), a.upper_bound);
    EXPECT_EQ(check(a.checks, "closing_m_bound").status, CheckStatus::Pass);
    EXPECT_EQ(check(a.checks, "claim1_total_le_N2").status, CheckStatus::Pass);
    EXPECT_DOUBLE_EQ(a.upper_bound, 200.0 * 200.0);
    if (a.u == 0) {
      EXPECT_EQ(check(a.checks, "claim2_total_ge_product").status, CheckStatus::Skip);
    }
  }
}

TEST(ZigzagAudit, EdgelessHost) {
  const auto a = zigzag_audit(graph(6, {}), 2);
  EXPECT_EQ(a.m, 0u);
  EXPECT_EQ(a.zigzag_total, 0u);
  EXPECT_TRUE(a.clean());
  EXPECT_DOUBLE_EQ(a.lower_bound, 0.0);
}

TEST(ZigzagAudit, DenseHostExercisesFamily) {
  // Dense enough for u >= 1; the family bound holds for any host.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int k = 2 + static_cast<int>(seed % 2);
    const auto g = random_ordered_graph(14, 0.95, seed);
    const auto a = zigzag_audit(g, k);
    ASSERT_GE(a.u, 1u);
    EXPECT_EQ(a.freeness, InputStatus::Violated);
    EXPECT_EQ(check(a.checks, "zigzag_family_exact").status, CheckStatus::Pass) << check(a.checks, "zigzag_family_exact").note;
    EXPECT_EQ(check(a.checks, "claim2_total_ge_product").status, CheckStatus::Pass);
    EXPECT_EQ(check(a.checks, "claim1_per_pair_max").status, CheckStatus::Skip);
    EXPECT_EQ(check(a.checks, "closing_m_bound").status, CheckStatus::Skip);
    std::uint64_t pow = 1;
    for (int i = 1; i < k; ++i) pow *= a.u;
    EXPECT_DOUBLE_EQ(a.product_bound, static_cast<double>(a.g1_edges * pow));
  }
}

TEST(ZigzagAudit, KnownStatusOverrides) {
  AuditOptions opt;
  opt.known_status = InputStatus::Conditional;
  const auto a = zigzag_audit(support::k22(), 2, opt);
  EXPECT_EQ(a.freeness, InputStatus::Conditional);
  EXPECT_EQ(check(a.checks, "claim1_per_pair_max").status, CheckStatus::Skip);
  EXPECT_EQ(verify_bordered_girth(support::k22(), 2, 100), InputStatus::Violated);
  EXPECT_EQ(verify_bordered_girth(support::k22(), 2, 3), InputStatus::Conditional);
}

TEST(ExactTiny, KnownValues) {
  const auto cb4 = bordered_patterns(4);
  EXPECT_EQ(exact_extremal_tiny(3, cb4).max_edges, 3u);
  EXPECT_EQ(exact_extremal_tiny(4, cb4).max_edges, 5u);
  EXPECT_EQ(exact_extremal_tiny(5, std::vector<CyclePattern>{}).max_edges, 10u);
  EXPECT_EQ(exact_extremal_tiny(1, cb4).max_edges, 0u);
  const auto w = exact_extremal_tiny(4, cb4).witness;
  EXPECT_EQ(w.edge_count(), 5u);
  EXPECT_FALSE(has_bordered_cycle(w, 4));
  EXPECT_THROW(exact_extremal_tiny(8, cb4), ResourceLimit);
  EXPECT_THROW(exact_extremal_tiny(0, cb4), InvalidParameter);
}

TEST(ExactTiny, MatchesBruteForce) {
  for (int two_k : {4, 6}) {
    const auto pats = bordered_patterns(two_k);
    for (int n = 1; n <= 6; ++n) {
      const auto t = exact_extremal_tiny(n, pats);
      const auto [best, witness] = brute_extremal(n, two_k);
      EXPECT_EQ(t.max_edges, best) << n << " " << two_k;
      std::vector<std::pair<int, int>> got;
      for (auto e : t.witness.edges()) got.push_back({static_cast<int>(e.lo), static_cast<int>(e.hi)});
      EXPECT_EQ(got, witness) << n << " " << two_k;
    }
  }
}

TEST(ExactTiny, MonotoneInN) {
  const auto cb4 = bordered_patterns(4);
  std::size_t prev = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto t = exact_extremal_tiny(n, cb4);
    EXPECT_GE(t.max_edges, prev);
    prev = t.max_edges;
  }
}

TEST(ExactTiny, FreeGraphEnumerationMatchesCycleOracle) {
  const auto pats = bordered_patterns(4);
  for (int n = 2; n <= 6; ++n) {
    const TinyPatternFilter filter(n, pats);
    std::set<std::uint64_t> seen;
    for_each_free_graph(filter, [&](std::uint64_t mask) {
      seen.insert(mask);
      return true;
    });
    std::set<std::uint64_t> ref;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (oracle::bordered_cycles(oracle::adjacency(n, oracle::mask_edges(n, mask)), 4).empty()) ref.insert(mask);
    EXPECT_EQ(seen, ref) << n;
    for (std::uint64_t mask : ref) EXPECT_TRUE(filter.is_free(mask));
  }
}
