#pragma once

// Edge counts of the construction across a range of sizes and the
// least-squares slope of log(edges) against log(total vertex count).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bordered/construct.hpp"
#include "bordered/error.hpp"
#include "bordered/galois.hpp"
#include "bordered/sidon.hpp"

namespace bordered {

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
};

/// Ordinary least squares of log y on log x. Needs at least 3 points with
/// positive coordinates and at least two distinct x.
inline LogLogFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidParameter("fit needs paired samples");
  if (x.size() < 3) throw InvalidParameter("fit needs at least 3 points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw InvalidParameter("log-log fit needs positive values");
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double n = static_cast<double>(x.size()), mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y[i]) - my);
  }
  if (sxx == 0) throw InvalidParameter("log-log fit needs two distinct x values");
  return {sxy / sxx, my - sxy / sxx * mx, x.size()};
}

/// n = q^k - 1 for every prime power q >= 2 with 4n <= max_total, ascending.
/// These are the sizes at which the Bose-Chowla set fills its whole range.
inline std::vector<Integer> natural_scale_points(int k, std::uint64_t max_total) {
  if (k < 2) throw InvalidParameter("scaling needs k >= 2");
  std::vector<Integer> out;
  for (Integer q = 2;; ++q) {
    const auto qk = gf::bounded_pow(q, static_cast<unsigned>(k), max_total / 4 + 2);
    if (!qk || 4 * (*qk - 1) > max_total) break;
    if (gf::prime_power_decomposition(q)) out.push_back(*qk - 1);
  }
  return out;
}

struct ScalingRow {
  Integer n = 0;
  std::uint64_t N_total = 0;  // 4n
  BkSource source = BkSource::Greedy;
  Integer q = 0;  // field size when the Bose-Chowla set won
  std::size_t set_size = 0;
  std::size_t edges = 0;
};

struct ScalingRecord {
  int k = 0;
  std::vector<ScalingRow> rows;  // ascending N_total
  LogLogFit fit;
  double target = 0.0;  // 1 + 1/k
};

/// Builds the construction for every n and fits the exponent. `ns` is sorted
/// and deduplicated first.
inline ScalingRecord run_scaling(int k, std::vector<Integer> ns) {
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  ScalingRecord rec;
  rec.k = k;
  rec.target = 1.0 + 1.0 / k;
  std::vector<double> xs, ys;
  for (Integer n : ns) {
    const BkChoice choice = best_bk_for_budget(n, k);
    const ConstructionRecord c = build_construction(n, k, choice.set);
    ScalingRow row{n, 4 * n, choice.source, choice.source == BkSource::BoseChowla ? *choice.q : 0, choice.set.size(), c.edge_count};
    rec.rows.push_back(row);
    xs.push_back(static_cast<double>(row.N_total));
    ys.push_back(static_cast<double>(row.edges));
  }
  rec.fit = fit_loglog(xs, ys);
  return rec;
}

}  // namespace bordered
