// bordered: command-line front end.
//
// Exit codes: 0 success, 1 invalid parameters or input, 2 resource limit,
// 3 internal invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bordered/bordered.hpp"
#include "bordered/report_json.hpp"

namespace {

using namespace bordered;

struct Globals {
  std::uint64_t seed = 0;
  int max_cycle_len = kMaxEnumeratedCycleLength;
  std::size_t budget_edges = 20'000;
  Vertex max_vertices = 10'000;
  std::uint64_t max_nodes = 0;
  std::string out;
  std::string format;
};

SearchLimits limits(const Globals& g) { return {g.max_vertices, g.max_nodes}; }

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw InvalidParameter("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

OrderedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidParameter("cannot open graph file: " + path);
  try {
    return read_graph(in);
  } catch (const InvalidInput& e) {
    throw InvalidInput(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(':') + 2));
  }
}

std::string format_or(const Globals& g, const char* fallback, std::initializer_list<const char*> allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  for (const char* a : allowed)
    if (f == a) return f;
  throw InvalidParameter("format '" + f + "' is not supported by this command");
}

void print_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

// --- sidon

struct SidonArgs {
  Integer n = 0;
  int k = 2;
  std::string method = "best";
  Integer q = 0;
};

void cmd_sidon(const Globals& g, const SidonArgs& a) {
  const std::string fmt = format_or(g, "text", {"text", "json"});
  BkSet set = BkSet::unchecked({}, a.k, 1);
  std::string source;
  Integer q = 0;
  if (a.method == "greedy") {
    if (a.n < 1) throw InvalidParameter("--n is required for the greedy method");
    set = greedy_bk(a.n, a.k);
    source = "greedy";
  } else if (a.method == "bose-chowla") {
    if (a.q) {
      q = a.q;
    } else {
      const auto found = a.n >= 1 ? largest_prime_power_within(a.n, a.k) : std::nullopt;
      if (!found) throw InvalidParameter("give --q, or an --n with some prime power q^k - 1 <= n");
      q = *found;
    }
    set = bose_chowla(q, a.k);
    source = "bose-chowla";
  } else if (a.method == "best") {
    if (a.n < 1) throw InvalidParameter("--n is required for the best method");
    auto choice = best_bk_for_budget(a.n, a.k);
    set = std::move(choice.set);
    source = to_string(choice.source);
    if (choice.source == BkSource::BoseChowla) q = *choice.q;
  } else {
    throw InvalidParameter("unknown method: " + a.method);
  }
  Output out(g.out);
  if (fmt == "json") {
    Json j;
    j["k"] = set.k();
    j["n"] = set.universe_bound();
    j["source"] = source;
    if (q) j["q"] = q;
    j["size"] = set.size();
    j["elements"] = set.elements();
    print_json(out.stream(), j);
  } else {
    write_bk_set(out.stream(), set);
  }
}

// --- construct

struct ConstructArgs {
  Integer n = 0;
  int k = 2;
  std::string set_file;
  std::string cert;
  bool no_certify = false;
};

void cmd_construct(const Globals& g, const ConstructArgs& a) {
  format_or(g, "text", {"text"});
  ConstructionRecord rec = [&] {
    if (a.set_file.empty()) return build_construction(a.n, a.k);
    std::ifstream in(a.set_file, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open set file: " + a.set_file);
    const BkSet s = read_bk_set(in);
    if (s.k() < a.k) throw InvalidParameter("set file is B_" + std::to_string(s.k()) + ", construction needs B_" + std::to_string(a.k));
    return build_construction(a.n, a.k, BkSet::unchecked(s.elements(), a.k, a.n));
  }();
  Output out(g.out);
  write_graph(out.stream(), rec.graph,
              {{"construction", "n=" + std::to_string(rec.n) + " k=" + std::to_string(rec.k)}, {"set_size", std::to_string(rec.set.size())}});
  if (a.no_certify) return;
  std::ofstream cert_file;
  if (!a.cert.empty()) {
    cert_file.open(a.cert, std::ios::binary);
    if (!cert_file) throw InvalidParameter("cannot open certificate file: " + a.cert);
  }
  std::ostream& cert = a.cert.empty() ? std::cerr : cert_file;
  for (const auto& c : certify_freeness(rec, limits(g))) cert << certificate_json(c).dump() << '\n';
}

// --- detect

struct DetectArgs {
  std::string graph;
  int length = 4;
  std::string cls = "bordered";
  std::size_t limit = 0;
};

void cmd_detect(const Globals& g, const DetectArgs& a) {
  const std::string fmt = format_or(g, "text", {"text", "json"});
  if (a.length > g.max_cycle_len)
    throw ResourceLimit("cycle length " + std::to_string(a.length) + " exceeds --max-cycle-len " + std::to_string(g.max_cycle_len));
  const OrderedGraph graph = load_graph(a.graph);
  std::vector<CycleWitness> found;
  if (a.cls == "bordered") {
    found = find_bordered_cycles(graph, a.length, a.limit, limits(g));
  } else {
    std::optional<BorderClass> filter;
    if (a.cls != "all") {
      filter = parse_border_class(a.cls);
      if (!filter) throw InvalidParameter("unknown cycle class: " + a.cls);
    }
    found = find_two_interval_cycles(graph, a.length, filter, a.limit, limits(g));
  }
  Output out(g.out);
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& w : found) arr.push_back(witness_json(w));
    print_json(out.stream(), arr);
    return;
  }
  for (const auto& w : found) {
    out.stream() << to_string(w.border_class());
    for (Vertex v : w.vertices) out.stream() << ' ' << v;
    out.stream() << '\n';
  }
  out.stream() << "# witnesses=" << found.size() << '\n';
}

// --- zigzag

struct ZigzagArgs {
  std::string graph;
  int k = 2;
};

void cmd_zigzag(const Globals& g, const ZigzagArgs& a) {
  const std::string fmt = format_or(g, "json", {"json", "text"});
  const OrderedGraph graph = load_graph(a.graph);
  AuditOptions opt;
  opt.budget_edges = g.budget_edges;
  opt.limits = limits(g);
  const ZigzagAudit audit = zigzag_audit(graph, a.k, opt);
  Output out(g.out);
  if (fmt == "json") {
    print_json(out.stream(), audit_json(audit));
    return;
  }
  out.stream() << "m=" << audit.m << " N=" << audit.N << " k=" << audit.k << " u=" << audit.u << " zigzag_total=" << audit.zigzag_total
               << " per_pair_max=" << audit.per_pair_max << " freeness=" << to_string(audit.freeness) << '\n';
  for (const auto& c : audit.checks)
    out.stream() << to_string(c.status) << ' ' << c.name << ' ' << c.lhs << ' ' << c.relation << ' ' << c.rhs << (c.note.empty() ? "" : "  # " + c.note) << '\n';
}

// --- extract

struct ExtractArgs {
  std::string graph;
  int k = 0;
  int l = 0;
  int iterated = 0;
  int ko = 0;
  std::string report;
};

void cmd_extract(const Globals& g, const ExtractArgs& a) {
  format_or(g, "json", {"json"});
  const OrderedGraph graph = load_graph(a.graph);
  ExtractOptions opt;
  opt.budget_edges = g.budget_edges;
  opt.limits = limits(g);
  const int modes = (a.l ? 1 : 0) + (a.iterated ? 1 : 0) + (a.ko ? 1 : 0);
  if (modes != 1) throw InvalidParameter("choose exactly one of --l, --iterated, --ko");
  OrderedGraph sub = graph;
  Json report;
  Metadata meta;
  if (a.l) {
    if (!a.k) throw InvalidParameter("--l needs --k");
    auto res = extract_c2l_free(graph, a.k, a.l, opt);
    sub = std::move(res.subgraph);
    report = extraction_json(res.report);
    meta = {{"extract", "k=" + std::to_string(a.k) + " l=" + std::to_string(a.l)}};
  } else if (a.iterated) {
    auto res = iterated_extract(graph, a.iterated, opt);
    sub = std::move(res.subgraph);
    report = iterated_json(res.report);
    meta = {{"extract", "iterated m=" + std::to_string(a.iterated)}};
  } else {
    const auto classes = two_coloring(graph);
    if (!classes) throw InvalidParameter("--ko needs a bipartite graph");
    auto res = ko_reduction(graph, *classes, a.ko, opt);
    sub = std::move(res.subgraph);
    report = ko_json(res.report);
    meta = {{"extract", "ko k=" + std::to_string(a.ko)}};
  }
  if (!g.out.empty()) {
    Output out(g.out);
    write_graph(out.stream(), sub, meta);
  }
  if (!a.report.empty()) {
    std::ofstream rep(a.report, std::ios::binary);
    if (!rep) throw InvalidParameter("cannot open report file: " + a.report);
    print_json(rep, report);
  } else {
    print_json(std::cout, report);
  }
}

// --- patterns

struct PatternsArgs {
  int length = 6;
  std::string dir;
};

void cmd_patterns(const Globals& g, const PatternsArgs& a) {
  const std::string fmt = format_or(g, "text", {"text", "csv", "json"});
  const auto pats = enumerate_ordered_cycles(a.length, g.max_cycle_len);
  if (!a.dir.empty()) {
    std::filesystem::create_directories(a.dir);
    for (std::size_t i = 0; i < pats.size(); ++i) {
      std::ostringstream name;
      name << "pattern_" << a.length << '_' << std::setw(3) << std::setfill('0') << i + 1 << ".txt";
      std::ofstream f(std::filesystem::path(a.dir) / name.str(), std::ios::binary);
      if (!f) throw InvalidParameter("cannot write into " + a.dir);
      write_pattern(f, pats[i]);
    }
  }
  Output out(g.out);
  auto& os = out.stream();
  std::size_t counts[4] = {};
  for (const auto& p : pats) ++counts[static_cast<int>(p.border_class())];
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& p : pats) {
      Json j;
      j["key"] = p.key();
      j["class"] = std::string(to_string(p.border_class()));
      if (auto n = pattern_name(p)) j["name"] = *n;
      j["traversal"] = p.traversal();
      arr.push_back(j);
    }
    print_json(os, {{"length", a.length}, {"count", pats.size()}, {"patterns", arr}});
    return;
  }
  if (fmt == "csv") os << "index,class,name,key\n";
  for (std::size_t i = 0; i < pats.size(); ++i) {
    const auto name = pattern_name(pats[i]).value_or("-");
    if (fmt == "csv")
      os << i + 1 << ',' << to_string(pats[i].border_class()) << ',' << name << ",\"" << pats[i].key() << "\"\n";
    else
      os << std::setw(4) << i + 1 << "  " << std::left << std::setw(12) << to_string(pats[i].border_class()) << std::setw(6) << name << std::right
         << pats[i].key() << '\n';
  }
  if (fmt == "text")
    os << "# total=" << pats.size() << " bordered=" << counts[0] << " inbordered=" << counts[1] << " outbordered=" << counts[2]
       << " unbordered=" << counts[3] << '\n';
}

// --- exact-tiny

struct TinyArgs {
  int n = 4;
  std::vector<std::string> patterns;
};

void cmd_exact_tiny(const Globals& g, const TinyArgs& a) {
  const std::string fmt = format_or(g, "text", {"text", "json"});
  std::vector<CyclePattern> forbidden;
  for (const auto& item : a.patterns) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ','))
      if (!name.empty())
        for (auto& p : resolve_pattern_set(name)) forbidden.push_back(std::move(p));
  }
  const TinyExtremal res = exact_extremal_tiny(a.n, forbidden);
  Output out(g.out);
  if (fmt == "json") {
    Json edges = Json::array();
    for (const Edge& e : res.witness.edges()) edges.push_back(edge_json(e));
    print_json(out.stream(), {{"n", a.n}, {"forbidden", forbidden.size()}, {"max_edges", res.max_edges}, {"witness", edges}});
    return;
  }
  out.stream() << "max_edges=" << res.max_edges << '\n';
  write_graph(out.stream(), res.witness, {{"forbidden_patterns", std::to_string(forbidden.size())}});
}

// --- scale

struct ScaleArgs {
  int k = 2;
  std::vector<Integer> ns;
  std::uint64_t max_total = 40'000;
};

void cmd_scale(const Globals& g, const ScaleArgs& a) {
  const std::string fmt = format_or(g, "csv", {"csv", "json"});
  const auto ns = a.ns.empty() ? natural_scale_points(a.k, a.max_total) : a.ns;
  const ScalingRecord rec = run_scaling(a.k, ns);
  Output out(g.out);
  if (fmt == "json") {
    print_json(out.stream(), scaling_json(rec));
    return;
  }
  auto& os = out.stream();
  os << "k,N,set_size,edges,log_fit_exponent\n";
  for (const auto& r : rec.rows) os << rec.k << ',' << r.N_total << ',' << r.set_size << ',' << r.edges << ',' << fixed(rec.fit.slope, 6) << '\n';
  os << "# fit=ols log(edges)~log(N) points=" << rec.fit.points << " target=" << fixed(rec.target, 6) << '\n';
  os << "# window=" << (a.ns.empty() ? "n=q^k-1 for prime powers q, 4n<=" + std::to_string(a.max_total) : std::string("explicit n list")) << '\n';
}

// --- random

struct RandomArgs {
  Vertex n = 10;
  double p = 0.3;
  bool bipartite = false;
  int free_length = 0;
};

void cmd_random(const Globals& g, const RandomArgs& a) {
  format_or(g, "text", {"text"});
  OrderedGraph graph;
  Metadata meta{{"seed", std::to_string(g.seed)}, {"n", std::to_string(a.n)}};
  if (a.free_length) {
    graph = random_bordered_free_graph(a.n, a.free_length, g.seed);
    meta.push_back({"model", "random maximal bordered-C" + std::to_string(a.free_length) + "-free"});
  } else if (a.bipartite) {
    graph = random_bipartite_graph(a.n, a.p, g.seed).graph;
    meta.push_back({"model", "random bipartite p=" + fixed(a.p, 6)});
  } else {
    graph = random_ordered_graph(a.n, a.p, g.seed);
    meta.push_back({"model", "G(n,p) p=" + fixed(a.p, 6)});
  }
  Output out(g.out);
  write_graph(out.stream(), graph, meta);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered graphs avoiding bordered cycles: constructions, detection, extraction, audits."};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for random corpora");
  app.add_option("--max-cycle-len", g.max_cycle_len, "Cap on enumerated and detected cycle lengths");
  app.add_option("--budget-edges", g.budget_edges, "Largest host verified by brute force");
  app.add_option("--max-vertices", g.max_vertices, "Largest host accepted by the detectors");
  app.add_option("--max-nodes", g.max_nodes, "Search node budget per detection (0: unlimited)");
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--format", g.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.fallthrough();

  SidonArgs sidon;
  auto* s = app.add_subcommand("sidon", "Generate a B_k set");
  s->add_option("--n", sidon.n, "Universe bound");
  s->add_option("--k", sidon.k, "Sum arity")->required();
  s->add_option("--method", sidon.method, "best, greedy or bose-chowla");
  s->add_option("--q", sidon.q, "Field size for bose-chowla");

  ConstructArgs cons;
  auto* c = app.add_subcommand("construct", "Build the dense bordered-cycle-free construction");
  c->add_option("--n", cons.n, "Scale parameter (4n vertices)")->required();
  c->add_option("--k", cons.k, "Cycle parameter")->required();
  c->add_option("--set", cons.set_file, "B_k set file (default: best available)");
  c->add_option("--cert", cons.cert, "Certificate JSON-lines path (default stderr)");
  c->add_flag("--no-certify", cons.no_certify, "Skip the freeness certificate");

  DetectArgs det;
  auto* d = app.add_subcommand("detect", "List two-interval cycles of a given length");
  d->add_option("graph", det.graph, "Graph file")->required();
  d->add_option("--length", det.length, "Cycle length 2l")->required();
  d->add_option("--class", det.cls, "bordered, inbordered, outbordered, unbordered or all");
  d->add_option("--limit", det.limit, "Stop after this many witnesses (0: all)");

  ZigzagArgs zz;
  auto* z = app.add_subcommand("zigzag", "Zigzag-path audit");
  z->add_option("graph", zz.graph, "Graph file")->required();
  z->add_option("--k", zz.k, "Path length k")->required();

  ExtractArgs ex;
  auto* e = app.add_subcommand("extract", "Extract a subgraph free of shorter bordered cycles");
  e->add_option("graph", ex.graph, "Graph file")->required();
  e->add_option("--k", ex.k, "Host is free of bordered 2k-cycles");
  e->add_option("--l", ex.l, "Target: free of bordered 2l-cycles");
  e->add_option("--iterated", ex.iterated, "Iterate l = m..2 with k = (m-1)! + 1");
  e->add_option("--ko", ex.ko, "Bipartite C_2k-free host to C_4-free subgraph");
  e->add_option("--report", ex.report, "Report path (default stdout)");

  PatternsArgs pat;
  auto* p = app.add_subcommand("patterns", "Enumerate ordered two-interval cycles");
  p->add_option("--length", pat.length, "Cycle length 2k")->required();
  p->add_option("--dir", pat.dir, "Write one pattern file per cycle here");

  TinyArgs tiny;
  auto* t = app.add_subcommand("exact-tiny", "Exact ordered extremal number for n <= 7");
  t->add_option("--n", tiny.n, "Vertex count")->required();
  t->add_option("--patterns", tiny.patterns, "Forbidden: C6_1..C6_I, S1..S4, CB<2k>");

  ScaleArgs sc;
  auto* sc_cmd = app.add_subcommand("scale", "Edge counts and log-log exponent fit");
  sc_cmd->add_option("--k", sc.k, "Cycle parameter")->required();
  sc_cmd->add_option("--n", sc.ns, "Explicit scale parameters (default: n = q^k - 1)");
  sc_cmd->add_option("--max-total", sc.max_total, "Largest vertex count 4n for the default list");

  RandomArgs rnd;
  auto* r = app.add_subcommand("random", "Seeded random graph");
  r->add_option("--n", rnd.n, "Vertex count")->required();
  r->add_option("--p", rnd.p, "Edge probability");
  r->add_flag("--bipartite", rnd.bipartite, "Random bipartite host");
  r->add_option("--free-length", rnd.free_length, "Random maximal graph free of bordered cycles of this length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*s) cmd_sidon(g, sidon);
    else if (*c) cmd_construct(g, cons);
    else if (*d) cmd_detect(g, det);
    else if (*z) cmd_zigzag(g, zz);
    else if (*e) cmd_extract(g, ex);
    else if (*p) cmd_patterns(g, pat);
    else if (*t) cmd_exact_tiny(g, tiny);
    else if (*sc_cmd) cmd_scale(g, sc);
    else if (*r) cmd_random(g, rnd);
    std::cout.flush();
    return 0;
  } catch (const ResourceLimit& err) {
    std::cerr << "resource limit: " << err.what() << '\n';
    return 2;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const InvariantViolation& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return 3;
  }
}
