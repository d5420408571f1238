#pragma once

// JSON views of the reports. Keys keep insertion order so output is stable.

#include <json.hpp>

#include <string>
#include <vector>

#include "bordered/audit.hpp"
#include "bordered/construct.hpp"
#include "bordered/detect.hpp"
#include "bordered/extract.hpp"
#include "bordered/scaling.hpp"

namespace bordered {

using Json = nlohmann::ordered_json;

inline Json edge_json(Edge e) { return Json::array({e.lo, e.hi}); }

inline Json witness_json(const CycleWitness& w) {
  Json j;
  j["vertices"] = w.vertices;
  j["class"] = std::string(to_string(w.border_class()));
  j["pattern"] = w.pattern.key();
  j["outer"] = edge_json(w.outer_border());
  j["inner"] = edge_json(w.inner_border());
  return j;
}

inline Json certificate_json(const LengthCertificate& c) {
  Json j;
  j["length"] = c.length;
  j["free"] = c.free;
  if (c.witness) j["witness"] = c.witness->vertices;
  if (c.identity) {
    j["even_terms"] = c.identity->even_terms;
    j["odd_terms"] = c.identity->odd_terms;
    j["sums_equal"] = c.identity->sums_equal;
    j["multisets_equal"] = c.identity->multisets_equal;
  }
  return j;
}

inline Json extraction_json(const ExtractionReport& r) {
  Json j;
  j["edges_in"] = r.edges_in;
  j["edges_kept"] = r.edges_kept;
  j["fraction"] = r.fraction;
  j["bound"] = r.bound;
  j["colors_used"] = r.colors_used;
  j["longest_path"] = r.longest_path;
  j["certified_free"] = r.certified_free;
  j["k"] = r.k;
  j["l"] = r.l;
  j["guarantee"] = r.divisible ? (r.input_status == InputStatus::Verified ? "holds" : "conditional") : "inapplicable";
  if (r.h) j["h"] = *r.h;
  j["input_status"] = to_string(r.input_status);
  j["bound_met"] = r.bound_met;
  if (r.spliced_cycle) j["spliced_cycle"] = *r.spliced_cycle;
  return j;
}

inline Json iterated_json(const IteratedReport& r) {
  Json j;
  j["edges_in"] = r.edges_in;
  j["edges_kept"] = r.edges_kept;
  j["fraction"] = r.fraction;
  j["bound"] = r.bound;
  j["m"] = r.m;
  j["k"] = r.k;
  j["input_status"] = to_string(r.input_status);
  j["bound_met"] = r.bound_met;
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(extraction_json(s));
  j["steps"] = steps;
  Json free = Json::array();
  for (const auto& [len, ok] : r.free) free.push_back({{"length", len}, {"free", ok}});
  j["certified"] = free;
  return j;
}

inline Json ko_json(const KoReport& r) {
  Json j;
  j["edges_in"] = r.extraction.edges_in;
  j["edges_kept"] = r.extraction.edges_kept;
  j["fraction"] = r.fraction;
  j["bound"] = r.bound;
  j["colors_used"] = r.extraction.colors_used;
  j["longest_path"] = r.extraction.longest_path;
  j["certified_free"] = r.c4_free;
  j["k"] = r.k;
  j["input_status"] = to_string(r.input_status);
  j["bound_met"] = r.bound_met;
  return j;
}

inline Json check_json(const AuditCheck& c) {
  Json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["relation"] = c.relation;
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline Json audit_json(const ZigzagAudit& a) {
  Json j;
  j["m"] = a.m;
  j["N"] = a.N;
  j["k"] = a.k;
  j["u"] = a.u;
  j["freeness"] = to_string(a.freeness);
  j["zigzag_total"] = a.zigzag_total;
  j["per_pair_max"] = a.per_pair_max;
  j["g1_edges"] = a.g1_edges;
  j["lower_bound"] = a.lower_bound;
  j["upper_bound"] = a.upper_bound;
  j["product_bound"] = a.product_bound;
  j["closing_bound"] = a.closing_bound;
  j["u_regime"] = a.u_regime;
  Json checks = Json::array();
  for (const auto& c : a.checks) checks.push_back(check_json(c));
  j["checks"] = checks;
  j["clean"] = a.clean();
  return j;
}

inline Json scaling_json(const ScalingRecord& r) {
  Json j;
  j["k"] = r.k;
  j["target"] = r.target;
  j["fit_exponent"] = r.fit.slope;
  j["fit_intercept"] = r.fit.intercept;
  j["points"] = r.fit.points;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o;
    o["n"] = row.n;
    o["N"] = row.N_total;
    o["source"] = to_string(row.source);
    if (row.q) o["q"] = row.q;
    o["set_size"] = row.set_size;
    o["edges"] = row.edges;
    rows.push_back(o);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace bordered
