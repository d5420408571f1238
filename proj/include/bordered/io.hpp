#pragma once

// Text formats.
//   graph:   "n m", then m lines "i j" with i < j
//   matrix:  "r c", then r lines of c characters from {0,1}
//   pattern: "k", then 2k lines "u v"; or a k x k matrix
// Lines starting with '#' are comments. Writers put metadata comments after the data.

#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bordered/cycle_pattern.hpp"
#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"
#include "bordered/text.hpp"

namespace bordered {

using Metadata = std::vector<std::pair<std::string, std::string>>;

namespace detail {

inline void write_metadata(std::ostream& os, const Metadata& meta) {
  for (const auto& [key, value] : meta) os << "# " << key << '=' << value << '\n';
}

inline std::vector<std::string_view> expect_fields(std::string_view line, std::size_t count, std::size_t lineno, const char* what) {
  auto f = text::fields(line);
  if (f.size() != count) throw InvalidInput(lineno, std::string("expected ") + what);
  return f;
}

inline Vertex parse_vertex(std::string_view s, std::size_t lineno) {
  const auto v = text::parse_unsigned(s, lineno);
  if (v > 0xffffffffu) throw InvalidInput(lineno, "vertex label too large");
  return static_cast<Vertex>(v);
}

}  // namespace detail

inline void write_graph(std::ostream& os, const OrderedGraph& g, const Metadata& meta = {}) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.lo << ' ' << e.hi << '\n';
  detail::write_metadata(os, meta);
}

inline OrderedGraph read_graph(std::istream& is) {
  text::LineReader in(is);
  std::string line;
  if (!in.next(line)) throw InvalidInput(in.lineno() + 1, "missing 'n m' header");
  const auto head = detail::expect_fields(line, 2, in.lineno(), "'n m' header");
  const Vertex n = detail::parse_vertex(head[0], in.lineno());
  const auto m = text::parse_unsigned(head[1], in.lineno());
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!in.next(line)) throw InvalidInput(in.lineno() + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
    const auto f = detail::expect_fields(line, 2, in.lineno(), "edge line 'i j'");
    const Vertex a = detail::parse_vertex(f[0], in.lineno()), b = detail::parse_vertex(f[1], in.lineno());
    if (a < 1 || b > n) throw InvalidInput(in.lineno(), "vertex out of range 1.." + std::to_string(n));
    if (a >= b) throw InvalidInput(in.lineno(), "edge must be written with i < j");
    if (!seen.insert({a, b}).second) throw InvalidInput(in.lineno(), "duplicate edge");
    edges.push_back({a, b});
  }
  while (in.next(line))
    if (!line.empty()) throw InvalidInput(in.lineno(), "unexpected data after the edge list");
  return OrderedGraph::from_edges(n, std::move(edges));
}

inline void write_matrix(std::ostream& os, const ZeroOneMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::uint32_t r = 1; r <= m.rows(); ++r) {
    std::string row(m.cols(), '0');
    for (std::uint32_t c : m.row(r)) row[c - 1] = '1';
    os << row << '\n';
  }
}

namespace detail {

inline ZeroOneMatrix read_matrix_body(text::LineReader& in, std::string_view header) {
  const auto head = expect_fields(header, 2, in.lineno(), "'r c' header");
  const auto r = text::parse_unsigned(head[0], in.lineno()), c = text::parse_unsigned(head[1], in.lineno());
  if (r > 1'000'000 || c > 1'000'000) throw InvalidInput(in.lineno(), "matrix dimensions too large");
  std::vector<ZeroOneMatrix::Cell> cells;
  std::string line;
  for (std::uint64_t i = 1; i <= r; ++i) {
    if (!in.next(line)) throw InvalidInput(in.lineno() + 1, "expected " + std::to_string(r) + " matrix rows");
    if (line.size() != c) throw InvalidInput(in.lineno(), "row must have exactly " + std::to_string(c) + " characters");
    for (std::size_t j = 0; j < line.size(); ++j) {
      if (line[j] == '1')
        cells.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j + 1)});
      else if (line[j] != '0')
        throw InvalidInput(in.lineno(), "matrix entries must be 0 or 1");
    }
  }
  while (in.next(line))
    if (!line.empty()) throw InvalidInput(in.lineno(), "unexpected data after the matrix");
  return ZeroOneMatrix(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c), std::move(cells));
}

}  // namespace detail

inline ZeroOneMatrix read_matrix(std::istream& is) {
  text::LineReader in(is);
  std::string line;
  if (!in.next(line)) throw InvalidInput(1, "missing 'r c' header");
  return detail::read_matrix_body(in, line);
}

inline void write_pattern(std::ostream& os, const CyclePattern& p) {
  os << p.half_length() << '\n';
  for (const auto& e : p.edges()) os << e.u << ' ' << e.v << '\n';
}

inline CyclePattern read_pattern(std::istream& is) {
  text::LineReader in(is);
  std::string line;
  if (!in.next(line)) throw InvalidInput(1, "missing pattern header");
  if (text::fields(line).size() == 2) {
    const std::size_t at = in.lineno();
    const auto m = detail::read_matrix_body(in, line);
    try {
      return CyclePattern::from_matrix(m);
    } catch (const InvalidParameter& e) {
      throw InvalidInput(at, e.what());
    }
  }
  const auto head = detail::expect_fields(line, 1, in.lineno(), "'k' or 'r c' header");
  const std::size_t at = in.lineno();
  const auto k = text::parse_unsigned(head[0], at);
  if (k < 2 || k > 1000) throw InvalidInput(at, "half-length must be in 2..1000");
  std::vector<PatternEdge> edges;
  for (std::uint64_t i = 0; i < 2 * k; ++i) {
    if (!in.next(line)) throw InvalidInput(in.lineno() + 1, "expected " + std::to_string(2 * k) + " edge lines");
    const auto f = detail::expect_fields(line, 2, in.lineno(), "edge line 'u v'");
    edges.push_back({static_cast<int>(text::parse_unsigned(f[0], in.lineno())), static_cast<int>(text::parse_unsigned(f[1], in.lineno()))});
  }
  while (in.next(line))
    if (!line.empty()) throw InvalidInput(in.lineno(), "unexpected data after the pattern");
  try {
    return CyclePattern::from_edges(static_cast<int>(k), std::move(edges));
  } catch (const InvalidParameter& e) {
    throw InvalidInput(at, e.what());
  }
}

}  // namespace bordered
