#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bordered/extract.hpp"
#include "bordered/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bordered;
using support::graph;

namespace {

// Two nested bordered 4-cycles: (1,6) -> (2,5) -> (3,4).
OrderedGraph nested_pair() { return graph(6, {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {2, 4}, {3, 4}, {3, 5}}); }

std::vector<Edge> edges_of(const OrderedGraph& g) { return {g.edges().begin(), g.edges().end()}; }

// Removes an edge of some plain cycle of the given length until none is left.
OrderedGraph strip_cycles(OrderedGraph g, int length) {
  while (auto c = find_cycle(g, length)) {
    const Edge drop = make_edge((*c)[0], (*c)[1]);
    std::vector<Edge> keep;
    for (auto e : g.edges())
      if (!(e == drop)) keep.push_back(e);
    g = g.with_edges(std::move(keep));
  }
  return g;
}

}  // namespace

TEST(BorderDigraph, K22) {
  const auto g = support::k22();
  const auto h = border_digraph(g, 4);
  ASSERT_EQ(h.arcs().size(), 1u);
  EXPECT_EQ(h.vertices()[h.arcs()[0].tail], (Edge{1, 4}));
  EXPECT_EQ(h.vertices()[h.arcs()[0].head], (Edge{2, 3}));
  EXPECT_EQ(h.arcs()[0].witness, (std::vector<Vertex>{1, 3, 2, 4}));
  EXPECT_TRUE(arc_is_nested(h, h.arcs()[0]));
}

TEST(BorderDigraph, MatchesCycleOracle) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const Vertex n = 6 + static_cast<Vertex>(seed % 4);
    const auto g = random_ordered_graph(n, 0.4 + 0.1 * static_cast<double>(seed % 3), seed);
    const auto a = support::adjacency(g);
    for (int len = 4; len <= 6; len += 2) {
      std::map<std::pair<Edge, Edge>, std::vector<int>> ref;
      for (const auto& c : oracle::bordered_cycles(a, len)) {
        auto s = c;
        std::sort(s.begin(), s.end());
        const Edge outer{static_cast<Vertex>(s.front()), static_cast<Vertex>(s.back())};
        const Edge inner{static_cast<Vertex>(s[s.size() / 2 - 1]), static_cast<Vertex>(s[s.size() / 2])};
        auto [it, fresh] = ref.try_emplace({outer, inner}, c);
        if (!fresh) it->second = std::min(it->second, c);
      }
      const auto h = border_digraph(g, len);
      std::map<std::pair<Edge, Edge>, std::vector<int>> got;
      for (const auto& arc : h.arcs()) {
        EXPECT_TRUE(arc_is_nested(h, arc));
        got[{h.vertices()[arc.tail], h.vertices()[arc.head]}] = std::vector<int>(arc.witness.begin(), arc.witness.end());
      }
      ASSERT_EQ(got, ref) << seed << " " << len;
    }
  }
}

TEST(LevelColoring, MatchesLongestPathOracle) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_ordered_graph(10, 0.5, seed);
    const auto h = border_digraph(g, 4);
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : h.arcs()) arcs.push_back({static_cast<int>(a.tail), static_cast<int>(a.head)});
    const auto ref = oracle::longest_paths(static_cast<int>(h.vertex_count()), arcs);
    const auto c = gallai_roy_coloring(h);
    ASSERT_EQ(c.color, ref) << seed;
    const int longest = ref.empty() ? 0 : *std::max_element(ref.begin(), ref.end());
    EXPECT_EQ(c.longest_path, longest);
    for (const auto& a : h.arcs()) EXPECT_NE(c.color[a.tail], c.color[a.head]);
  }
}

TEST(LevelColoring, SpliceGluesNestedCycles) {
  const auto g = nested_pair();
  const auto h = border_digraph(g, 4);
  const auto c = gallai_roy_coloring(h);
  EXPECT_EQ(c.longest_path, 2);
  std::size_t start = 0;
  while (c.color[start] < 2) ++start;
  EXPECT_EQ(h.vertices()[start], (Edge{1, 6}));
  const auto path = descend(h, c, start, 2);
  ASSERT_EQ(path.size(), 2u);
  const auto cyc = splice_border_chain(h, path);
  EXPECT_EQ(cyc, (std::vector<Vertex>{1, 5, 3, 4, 2, 6}));
  const auto w = make_witness(cyc);
  EXPECT_EQ(w.border_class(), BorderClass::Bordered);
  const auto a = support::adjacency(g);
  const auto ref = oracle::bordered_cycles(a, 6);
  EXPECT_NE(std::find(ref.begin(), ref.end(), std::vector<int>(cyc.begin(), cyc.end())), ref.end());
}

TEST(Extract, K22) {
  const auto res = extract_c2l_free(support::k22(), 3, 2);
  EXPECT_EQ(edges_of(res.subgraph), (std::vector<Edge>{{1, 3}, {2, 3}, {2, 4}}));
  const auto& r = res.report;
  EXPECT_EQ(r.edges_in, 4u);
  EXPECT_EQ(r.edges_kept, 3u);
  EXPECT_DOUBLE_EQ(r.fraction, 0.75);
  EXPECT_DOUBLE_EQ(r.bound, 0.5);
  EXPECT_EQ(r.colors_used, 2);
  EXPECT_EQ(r.longest_path, 1);
  EXPECT_TRUE(r.certified_free);
  EXPECT_TRUE(r.divisible);
  EXPECT_EQ(r.h, 2);
  EXPECT_EQ(r.input_status, InputStatus::Verified);
  EXPECT_TRUE(r.bound_met);
  EXPECT_FALSE(r.spliced_cycle);
}

TEST(Extract, EmptyAndBadParameters) {
  const auto res = extract_c2l_free(graph(5, {}), 3, 2);
  EXPECT_EQ(res.report.edges_kept, 0u);
  EXPECT_DOUBLE_EQ(res.report.fraction, 1.0);
  EXPECT_TRUE(res.report.certified_free);
  EXPECT_THROW(extract_c2l_free(support::k22(), 1, 2), InvalidParameter);
  EXPECT_THROW(extract_c2l_free(support::k22(), 3, 1), InvalidParameter);
}

TEST(Extract, LongChainExposesInput) {
  const auto g = nested_pair();
  const auto res = extract_c2l_free(g, 3, 2);
  EXPECT_EQ(res.report.input_status, InputStatus::Violated);
  ASSERT_TRUE(res.report.spliced_cycle);
  EXPECT_EQ(*res.report.spliced_cycle, (std::vector<Vertex>{1, 5, 3, 4, 2, 6}));
  EXPECT_TRUE(res.report.certified_free);

  ExtractOptions opt;
  opt.known_input_status = InputStatus::Verified;
  EXPECT_THROW(extract_c2l_free(g, 3, 2, opt), InvariantViolation);
  // Not divisible: no chain length is guaranteed, so nothing is spliced.
  const auto nd = extract_c2l_free(g, 4, 3);
  EXPECT_FALSE(nd.report.divisible);
  EXPECT_FALSE(nd.report.spliced_cycle);
}

TEST(Extract, BoundOnRandomFreeGraphs) {
  const std::vector<std::pair<int, int>> kl = {{3, 2}, {5, 3}, {4, 2}, {7, 3}, {7, 4}};
  for (auto [k, l] : kl) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const auto g = random_bordered_free_graph(12 + static_cast<Vertex>(seed % 3), 2 * k, seed);
      ASSERT_FALSE(has_bordered_cycle(g, 2 * k));
      const auto res = extract_c2l_free(g, k, l);
      const auto& r = res.report;
      EXPECT_EQ(r.input_status, InputStatus::Verified);
      EXPECT_TRUE(r.certified_free);
      if (l <= 3) {
        EXPECT_TRUE(oracle::bordered_cycles(support::adjacency(res.subgraph), 2 * l).empty());
      }
      EXPECT_GE(r.edges_kept * static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1) * r.edges_in) << k << " " << l << " " << seed;
      EXPECT_TRUE(r.bound_met);
      EXPECT_LE(r.longest_path, (k - 1) / (l - 1) - 1);
      for (auto e : res.subgraph.edges()) EXPECT_TRUE(g.edge_index(e).has_value());
    }
  }
}

TEST(Iterated, ThreeLevels) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_bordered_free_graph(14, 6, seed);
    const auto res = iterated_extract(g, 3);
    const auto& r = res.report;
    EXPECT_EQ(r.k, 3);
    EXPECT_DOUBLE_EQ(r.bound, 0.5);
    ASSERT_EQ(r.steps.size(), 2u);
    EXPECT_EQ(r.steps[0].l, 3);
    EXPECT_EQ(r.steps[1].l, 2);
    ASSERT_EQ(r.free.size(), 2u);
    EXPECT_EQ(r.free[0], (std::pair<int, bool>{4, true}));
    EXPECT_EQ(r.free[1], (std::pair<int, bool>{6, true}));
    EXPECT_GE(2 * r.edges_kept, r.edges_in);
    EXPECT_TRUE(r.bound_met);
    const auto a = support::adjacency(res.subgraph);
    EXPECT_TRUE(oracle::bordered_cycles(a, 4).empty());
  }
  EXPECT_THROW(iterated_extract(support::k22(), 1), InvalidParameter);
  EXPECT_THROW(iterated_extract(support::k22(), 6), InvalidParameter);
}

TEST(Iterated, TwoLevelsIsSingleStep) {
  const auto g = random_bordered_free_graph(12, 4, 5);
  const auto res = iterated_extract(g, 2);
  EXPECT_EQ(res.report.k, 2);
  ASSERT_EQ(res.report.steps.size(), 1u);
  EXPECT_EQ(res.subgraph, g);
  EXPECT_DOUBLE_EQ(res.report.fraction, 1.0);
}

TEST(Ko, Examples) {
  const auto k22 = support::k22();
  const std::vector<int> sides{0, 0, 0, 1, 1};
  const auto r = ko_reduction(k22, sides, 3);
  EXPECT_EQ(r.subgraph.edge_count(), 3u);
  EXPECT_TRUE(r.report.c4_free);
  EXPECT_EQ(r.report.input_status, InputStatus::Verified);
  EXPECT_TRUE(r.report.bound_met);

  // A 6-cycle has neither C_8 nor C_4, so nothing is dropped.
  const auto hex = graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
  const auto hs = *two_coloring(hex);
  const auto rh = ko_reduction(hex, hs, 4);
  EXPECT_EQ(rh.subgraph, hex);
  EXPECT_EQ(rh.report.input_status, InputStatus::Verified);

  const auto star = graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const auto rs = ko_reduction(star, *two_coloring(star), 3);
  EXPECT_EQ(rs.subgraph, star);

  const auto tri = graph(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_FALSE(two_coloring(tri));
  EXPECT_THROW(ko_reduction(tri, {0, 0, 1, 1}, 3), InvalidParameter);
  EXPECT_THROW(ko_reduction(k22, {0, 0, 0}, 3), InvalidParameter);
}

TEST(Ko, RandomBipartiteFreeGraphs) {
  for (int k : {3, 4}) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto lb = random_bipartite_graph(10, 0.45, seed + 50 * static_cast<std::uint64_t>(k));
      const auto g = strip_cycles(lb.graph, 2 * k);
      ASSERT_TRUE(oracle::all_cycles(support::adjacency(g), 2 * k).empty());
      const auto r = ko_reduction(g, lb.classes, k);
      EXPECT_EQ(r.report.input_status, InputStatus::Verified);
      EXPECT_TRUE(r.report.c4_free);
      EXPECT_TRUE(oracle::all_cycles(support::adjacency(r.subgraph), 4).empty());
      EXPECT_GE(r.subgraph.edge_count() * static_cast<std::size_t>(k - 1), g.edge_count()) << k << " " << seed;
      for (auto e : r.subgraph.edges()) EXPECT_TRUE(g.edge_index(e).has_value());
    }
  }
}
