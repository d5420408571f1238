#pragma once

// Extraction of large subgraphs free of bordered 2l-cycles from a graph free
// of bordered 2k-cycles, when (l - 1) divides (k - 1).
//
// The border digraph has the host's edges as vertices and an arc from the
// outer to the inner border of every bordered 2l-cycle. Borders nest strictly,
// so it is acyclic; coloring every vertex by the length of the longest
// directed path leaving it is proper, and any color class is independent in the
// digraph, hence spans no bordered 2l-cycle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bordered/detect.hpp"
#include "bordered/error.hpp"
#include "bordered/ordered_graph.hpp"

namespace bordered {

struct BorderArc {
  std::size_t tail = 0;  // index of the outer border in the host edge list
  std::size_t head = 0;  // index of the inner border
  std::vector<Vertex> witness;  // canonical traversal of the smallest such cycle
};

class BorderDigraph {
 public:
  BorderDigraph(std::vector<Edge> vertices, std::vector<BorderArc> arcs, int half_length)
      : vertices_(std::move(vertices)), arcs_(std::move(arcs)), half_length_(half_length) {}

  std::span<const Edge> vertices() const { return vertices_; }
  std::span<const BorderArc> arcs() const { return arcs_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  int half_length() const { return half_length_; }

 private:
  std::vector<Edge> vertices_;
  std::vector<BorderArc> arcs_;
  int half_length_;
};

/// Strict nesting of an arc's borders: a < a' < b' < b.
inline bool arc_is_nested(const BorderDigraph& h, const BorderArc& arc) {
  const Edge f = h.vertices()[arc.tail], f2 = h.vertices()[arc.head];
  return f.lo < f2.lo && f2.lo < f2.hi && f2.hi < f.hi;
}

inline BorderDigraph border_digraph(const OrderedGraph& g, int two_l, const SearchLimits& lim = {}) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Vertex>> arcs;
  for_each_bordered_cycle(
      g, two_l,
      [&](std::span<const Vertex> seq) {
        auto s = std::vector<Vertex>(seq.begin(), seq.end());
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t half = sorted.size() / 2;
        const auto outer = g.edge_index({sorted.front(), sorted.back()});
        const auto inner = g.edge_index({sorted[half - 1], sorted[half]});
        if (!outer || !inner) throw InvariantViolation("bordered cycle border is not a host edge");
        auto [it, fresh] = arcs.try_emplace({*outer, *inner}, s);
        if (!fresh && s < it->second) it->second = std::move(s);
        return true;
      },
      lim);
  std::vector<BorderArc> list;
  list.reserve(arcs.size());
  for (auto& [key, w] : arcs) list.push_back({key.first, key.second, std::move(w)});
  BorderDigraph h(std::vector<Edge>(g.edges().begin(), g.edges().end()), std::move(list), two_l / 2);
  for (const auto& arc : h.arcs())
    if (!arc_is_nested(h, arc)) throw InvariantViolation("border digraph arc violates strict nesting");
  return h;
}

struct LevelColoring {
  std::vector<int> color;  // longest directed path (in arcs) leaving each vertex
  int colors_used = 0;
  int longest_path = 0;
};

/// Longest-path levels by dynamic programming over a topological order.
inline LevelColoring gallai_roy_coloring(const BorderDigraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : h.arcs()) {
    out[a.tail].push_back(a.head);
    ++indeg[a.head];
  }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t w : out[order[i]])
      if (--indeg[w] == 0) order.push_back(w);
  if (order.size() != n) throw InvariantViolation("border digraph contains a directed cycle");
  LevelColoring c;
  c.color.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t v = order[i];
    for (std::size_t w : out[v]) c.color[v] = std::max(c.color[v], c.color[w] + 1);
    c.longest_path = std::max(c.longest_path, c.color[v]);
  }
  c.colors_used = n == 0 ? 0 : c.longest_path + 1;
  return c;
}

/// Arcs along one longest-from-vertex chain of `steps` arcs starting at `from`.
inline std::vector<const BorderArc*> descend(const BorderDigraph& h, const LevelColoring& c, std::size_t from, int steps) {
  std::vector<const BorderArc*> path;
  std::size_t v = from;
  for (int s = 0; s < steps; ++s) {
    const BorderArc* pick = nullptr;
    for (const auto& a : h.arcs())
      if (a.tail == v && c.color[a.head] == c.color[v] - 1) {
        pick = &a;
        break;
      }
    if (!pick) throw InvariantViolation("longest-path levels are inconsistent");
    path.push_back(pick);
    v = pick->head;
  }
  return path;
}

/// Glues the witness cycles of a directed path f_1 -> ... -> f_{h+1} into one
/// cycle: union of the cycles minus the shared borders f_2..f_h. The result is
/// a bordered cycle of length 2lh - 2h + 2 with outer border f_1 and inner
/// border f_{h+1}.
inline std::vector<Vertex> splice_border_chain(const BorderDigraph& h, std::span<const BorderArc* const> path) {
  std::map<Edge, int> mult;
  for (const BorderArc* a : path) {
    const auto& w = a->witness;
    for (std::size_t i = 0; i < w.size(); ++i) ++mult[make_edge(w[i], w[(i + 1) % w.size()])];
  }
  for (std::size_t i = 1; i < path.size(); ++i) mult.erase(h.vertices()[path[i]->tail]);
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [e, c] : mult) {
    if (c != 1) throw InvariantViolation("spliced cycles share a non-border edge");
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) throw InvariantViolation("spliced edge set is not a cycle");
  std::vector<Vertex> seq{adj.begin()->first};
  Vertex prev = seq[0], cur = std::min(adj.begin()->second[0], adj.begin()->second[1]);
  while (cur != seq[0]) {
    seq.push_back(cur);
    const auto& nb = adj[cur];
    const Vertex next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  }
  if (seq.size() != mult.size()) throw InvariantViolation("spliced edge set is not a single cycle");
  return seq;
}

enum class InputStatus { Verified, Conditional, Violated };

inline const char* to_string(InputStatus s) {
  switch (s) {
    case InputStatus::Verified: return "verified";
    case InputStatus::Conditional: return "conditional";
    case InputStatus::Violated: return "violated";
  }
  return "?";
}

struct ExtractOptions {
  std::size_t budget_edges = 20'000;  // brute-force verification of the input only up to this size
  SearchLimits limits{};
  std::optional<InputStatus> known_input_status;  // skip re-verification (e.g. for subgraphs of a verified host)
};

struct ExtractionReport {
  std::size_t edges_in = 0;
  std::size_t edges_kept = 0;
  double fraction = 1.0;
  double bound = 0.0;
  int colors_used = 0;
  int longest_path = 0;
  bool certified_free = false;

  int k = 0;
  int l = 0;
  bool divisible = false;              // (l - 1) | (k - 1): the fraction guarantee applies
  std::optional<int> h;                // (k - 1) / (l - 1) when divisible
  InputStatus input_status = InputStatus::Conditional;
  bool bound_met = false;              // kept * (k - 1) >= (l - 1) * edges_in
  std::optional<std::vector<Vertex>> spliced_cycle;  // bordered 2k-cycle found by gluing a long digraph path
};

struct ExtractionResult {
  OrderedGraph subgraph;
  ExtractionReport report;
};

namespace detail {

inline InputStatus verify_cb_free(const OrderedGraph& g, int two_k, const ExtractOptions& opt) {
  if (g.vertex_count() < static_cast<Vertex>(two_k)) return InputStatus::Verified;
  if (g.edge_count() > opt.budget_edges) return InputStatus::Conditional;
  try {
    return has_bordered_cycle(g, two_k, opt.limits) ? InputStatus::Violated : InputStatus::Verified;
  } catch (const ResourceLimit&) {
    return InputStatus::Conditional;
  }
}

}  // namespace detail

/// Keeps the largest color class (smallest color on ties) of the level
/// coloring of the border digraph for 2l-cycles.
inline ExtractionResult extract_c2l_free(const OrderedGraph& g, int k, int l, const ExtractOptions& opt = {}) {
  if (l < 2 || k < 2) throw InvalidParameter("extraction needs k, l >= 2");
  ExtractionReport r;
  r.k = k;
  r.l = l;
  r.divisible = (k - 1) % (l - 1) == 0;
  if (r.divisible) r.h = (k - 1) / (l - 1);
  r.bound = static_cast<double>(l - 1) / static_cast<double>(k - 1);
  r.edges_in = g.edge_count();
  r.input_status = opt.known_input_status ? *opt.known_input_status : detail::verify_cb_free(g, 2 * k, opt);
  if (g.edge_count() == 0) {
    r.certified_free = true;
    r.bound_met = true;
    return {g, r};
  }

  const BorderDigraph hd = border_digraph(g, 2 * l, opt.limits);
  const LevelColoring col = gallai_roy_coloring(hd);
  r.colors_used = col.colors_used;
  r.longest_path = col.longest_path;

  if (r.h && col.longest_path >= *r.h) {
    std::size_t start = 0;
    while (col.color[start] < *r.h) ++start;
    const auto path = descend(hd, col, start, *r.h);
    auto cycle = splice_border_chain(hd, path);
    const auto witness = make_witness(cycle);
    if (witness.border_class() != BorderClass::Bordered || witness.vertices.size() != static_cast<std::size_t>(2 * k))
      throw InvariantViolation("spliced cycle is not a bordered 2k-cycle");
    if (r.input_status == InputStatus::Verified)
      throw InvariantViolation("long border chain in a host verified free of bordered 2k-cycles");
    r.input_status = InputStatus::Violated;
    r.spliced_cycle = witness.vertices;
  }

  std::vector<std::size_t> class_size(static_cast<std::size_t>(col.colors_used), 0);
  for (int c : col.color) ++class_size[static_cast<std::size_t>(c)];
  const auto best = static_cast<int>(std::max_element(class_size.begin(), class_size.end()) - class_size.begin());
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < hd.vertex_count(); ++i)
    if (col.color[i] == best) kept.push_back(hd.vertices()[i]);

  ExtractionResult out{g.with_edges(std::move(kept)), r};
  auto& rep = out.report;
  rep.edges_kept = out.subgraph.edge_count();
  rep.fraction = static_cast<double>(rep.edges_kept) / static_cast<double>(rep.edges_in);
  rep.bound_met = rep.edges_kept * static_cast<std::size_t>(k - 1) >= static_cast<std::size_t>(l - 1) * rep.edges_in;
  rep.certified_free = !has_bordered_cycle(out.subgraph, 2 * l, opt.limits);
  return out;
}

inline std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

struct IteratedReport {
  int m = 0;
  int k = 0;
  std::size_t edges_in = 0;
  std::size_t edges_kept = 0;
  double fraction = 1.0;
  double bound = 0.0;  // (m-1)! / (k-1)^(m-1)
  bool bound_met = false;
  InputStatus input_status = InputStatus::Conditional;
  std::vector<ExtractionReport> steps;     // l = m, m-1, ..., 2
  std::vector<std::pair<int, bool>> free;  // (length, certified free) for 4..2m
};

struct IteratedResult {
  OrderedGraph subgraph;
  IteratedReport report;
};

/// Applies extract_c2l_free for l = m, m-1, ..., 2 with k = (m-1)! + 1.
inline IteratedResult iterated_extract(const OrderedGraph& g, int m, const ExtractOptions& opt = {}) {
  if (m < 2 || m > 5) throw InvalidParameter("iterated extraction supports 2 <= m <= 5");
  IteratedReport r;
  r.m = m;
  r.k = static_cast<int>(factorial(m - 1)) + 1;
  r.edges_in = g.edge_count();
  r.bound = static_cast<double>(factorial(m - 1));
  for (int i = 0; i < m - 1; ++i) r.bound /= static_cast<double>(r.k - 1);
  r.input_status = opt.known_input_status ? *opt.known_input_status : detail::verify_cb_free(g, 2 * r.k, opt);

  OrderedGraph cur = g;
  ExtractOptions step = opt;
  step.known_input_status = r.input_status;
  for (int l = m; l >= 2; --l) {
    auto res = extract_c2l_free(cur, r.k, l, step);
    if (res.report.input_status == InputStatus::Violated) step.known_input_status = r.input_status = InputStatus::Violated;
    r.steps.push_back(res.report);
    cur = std::move(res.subgraph);
  }
  r.edges_kept = cur.edge_count();
  r.fraction = r.edges_in == 0 ? 1.0 : static_cast<double>(r.edges_kept) / static_cast<double>(r.edges_in);
  r.bound_met = static_cast<double>(r.edges_kept) >= r.bound * static_cast<double>(r.edges_in) * (1.0 - 1e-12);
  for (int len = 4; len <= 2 * m; len += 2) r.free.emplace_back(len, !has_bordered_cycle(cur, len, opt.limits));
  return {std::move(cur), std::move(r)};
}

/// 2-coloring side (0 or 1) per vertex 1..n, index 0 unused. The smallest
/// vertex of every component gets side 0. nullopt if not bipartite.
inline std::optional<std::vector<int>> two_coloring(const OrderedGraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= g.vertex_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  side[0] = 0;
  return side;
}

struct KoReport {
  int k = 0;
  InputStatus input_status = InputStatus::Conditional;  // C_{2k}-freeness of the unordered input
  ExtractionReport extraction;                          // on the class-ordered relabeling
  bool c4_free = false;
  double fraction = 1.0;
  double bound = 0.0;
  bool bound_met = false;
};

struct KoResult {
  OrderedGraph subgraph;  // original labels
  KoReport report;
};

/// With class 0 placed entirely before class 1 every 4-cycle is bordered, so
/// the l = 2 extraction yields a C_4-free subgraph.
inline KoResult ko_reduction(const OrderedGraph& g, const std::vector<int>& classes, int k, const ExtractOptions& opt = {}) {
  if (k < 2) throw InvalidParameter("ko_reduction needs k >= 2");
  const Vertex n = g.vertex_count();
  if (classes.size() != static_cast<std::size_t>(n) + 1) throw InvalidParameter("classes must give a side for every vertex");
  for (Vertex v = 1; v <= n; ++v)
    if (classes[v] != 0 && classes[v] != 1) throw InvalidParameter("class labels must be 0 or 1");
  for (const Edge& e : g.edges())
    if (classes[e.lo] == classes[e.hi])
      throw InvalidParameter("not bipartite for the given classes: edge {" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}");

  KoReport r;
  r.k = k;
  r.bound = 1.0 / static_cast<double>(k - 1);
  if (g.edge_count() > opt.budget_edges) {
    r.input_status = InputStatus::Conditional;
  } else {
    try {
      r.input_status = find_cycle(g, 2 * k, opt.limits) ? InputStatus::Violated : InputStatus::Verified;
    } catch (const ResourceLimit&) {
      r.input_status = InputStatus::Conditional;
    }
  }

  std::vector<Vertex> to_new(static_cast<std::size_t>(n) + 1), to_old(static_cast<std::size_t>(n) + 1);
  Vertex next = 1;
  for (int side = 0; side <= 1; ++side)
    for (Vertex v = 1; v <= n; ++v)
      if (classes[v] == side) {
        to_new[v] = next;
        to_old[next] = v;
        ++next;
      }
  std::vector<Edge> relabeled;
  for (const Edge& e : g.edges()) relabeled.push_back(make_edge(to_new[e.lo], to_new[e.hi]));
  const OrderedGraph ordered = OrderedGraph::from_edges(n, std::move(relabeled));

  ExtractOptions step = opt;
  // An unordered C_{2k}-free graph has no bordered 2k-cycle in any order.
  if (r.input_status == InputStatus::Verified) step.known_input_status = InputStatus::Verified;
  auto res = extract_c2l_free(ordered, k, 2, step);
  r.extraction = res.report;

  std::vector<Edge> back;
  for (const Edge& e : res.subgraph.edges()) back.push_back(make_edge(to_old[e.lo], to_old[e.hi]));
  OrderedGraph sub = OrderedGraph::from_edges(n, std::move(back));
  r.c4_free = !find_cycle(sub, 4, opt.limits);
  r.fraction = g.edge_count() == 0 ? 1.0 : static_cast<double>(sub.edge_count()) / static_cast<double>(g.edge_count());
  r.bound_met = sub.edge_count() * static_cast<std::size_t>(k - 1) >= g.edge_count();
  return {std::move(sub), r};
}

}  // namespace bordered
