#include <gtest/gtest.h>

#include <sstream>

#include "bordered/io.hpp"
#include "bordered/random.hpp"
#include "support.hpp"

using namespace bordered;

namespace {

template <class F>
std::size_t failing_line(const std::string& text, F&& read) {
  std::istringstream is(text);
  try {
    read(is);
  } catch (const InvalidInput& e) {
    return e.line();
  }
  return 0;
}

std::size_t graph_error(const std::string& text) { return failing_line(text, [](std::istream& is) { read_graph(is); }); }

}  // namespace

TEST(GraphIo, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_ordered_graph(15, 0.3, seed);
    std::ostringstream os;
    write_graph(os, g, {{"seed", std::to_string(seed)}, {"source", "random"}});
    const std::string text = os.str();
    EXPECT_NE(text.find("# seed=" + std::to_string(seed) + "\n"), std::string::npos);
    std::istringstream is(text);
    EXPECT_EQ(read_graph(is), g);
  }
}

TEST(GraphIo, ExactText) {
  std::ostringstream os;
  write_graph(os, support::k22());
  EXPECT_EQ(os.str(), "4 4\n1 3\n1 4\n2 3\n2 4\n");
  std::istringstream is("# leading comment\n3 1\n# between\n1 3\n\n");
  EXPECT_EQ(read_graph(is), support::graph(3, {{1, 3}}));
}

TEST(GraphIo, ErrorsCarryLineNumbers) {
  EXPECT_EQ(graph_error(""), 1u);
  EXPECT_EQ(graph_error("3\n"), 1u);
  EXPECT_EQ(graph_error("3 2\n1 2\n"), 3u);
  EXPECT_EQ(graph_error("3 2\n1 2\n2 1\n"), 3u);
  EXPECT_EQ(graph_error("3 2\n1 2\n1 2\n"), 3u);
  EXPECT_EQ(graph_error("3 1\n1 4\n"), 2u);
  EXPECT_EQ(graph_error("3 1\n0 2\n"), 2u);
  EXPECT_EQ(graph_error("3 1\n1 x\n"), 2u);
  EXPECT_EQ(graph_error("3 1\n1 2 3\n"), 2u);
  EXPECT_EQ(graph_error("3 1\n1 2\n2 3\n"), 3u);
  EXPECT_EQ(graph_error("# c\n3 1\n# c\n2 2\n"), 4u);
}

TEST(MatrixIo, RoundTripAndErrors) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<ZeroOneMatrix::Cell> cells;
    const auto r = static_cast<std::uint32_t>(1 + rng.below(5)), c = static_cast<std::uint32_t>(1 + rng.below(5));
    for (std::uint32_t i = 1; i <= r; ++i)
      for (std::uint32_t j = 1; j <= c; ++j)
        if (rng.bernoulli(0.5)) cells.push_back({i, j});
    const ZeroOneMatrix m(r, c, cells);
    std::ostringstream os;
    write_matrix(os, m);
    std::istringstream is(os.str());
    EXPECT_EQ(read_matrix(is), m);
  }
  auto err = [](const std::string& s) { return failing_line(s, [](std::istream& is) { read_matrix(is); }); };
  EXPECT_EQ(err("2 2\n01\n1\n"), 3u);
  EXPECT_EQ(err("2 2\n01\n12\n"), 3u);
  EXPECT_EQ(err("2 2\n01\n"), 3u);
  EXPECT_EQ(err("1 2\n01\n11\n"), 3u);
}

TEST(PatternIo, BothFormats) {
  for (const auto& p : enumerate_ordered_cycles(8)) {
    std::ostringstream os;
    write_pattern(os, p);
    std::istringstream is(os.str());
    EXPECT_EQ(read_pattern(is), p);
    std::ostringstream ms;
    write_matrix(ms, p.matrix());
    std::istringstream mi(ms.str());
    EXPECT_EQ(read_pattern(mi), p);
  }
  std::ostringstream os;
  write_pattern(os, *named_pattern("C6_3"));
  EXPECT_EQ(os.str(), "3\n1 4\n1 6\n2 5\n2 6\n3 4\n3 5\n");
}

TEST(PatternIo, Errors) {
  auto err = [](const std::string& s) { return failing_line(s, [](std::istream& is) { read_pattern(is); }); };
  EXPECT_EQ(err(""), 1u);
  EXPECT_EQ(err("1\n"), 1u);
  EXPECT_EQ(err("2\n1 3\n1 4\n2 3\n"), 5u);
  EXPECT_EQ(err("2\n1 3\n1 4\n2 3\n2 2\n"), 1u);
  // A valid matrix that is not a single cycle.
  EXPECT_EQ(err("2 2\n11\n10\n"), 1u);
}
