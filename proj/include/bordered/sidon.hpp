#pragma once

// B_k sets: finite sets of positive integers in which all sums of k elements
// (repetition allowed) are pairwise distinct.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "bordered/error.hpp"
#include "bordered/galois.hpp"
#include "bordered/text.hpp"

namespace bordered {

using Integer = std::uint64_t;
using Multiset = std::vector<Integer>;  // ascending

struct BkCollision {
  Multiset first;
  Multiset second;
  Integer sum = 0;
};

/// Outcome of a B_k test. Converts to true iff the set is B_k.
struct BkVerdict {
  bool is_bk = true;
  std::optional<BkCollision> collision;
  explicit operator bool() const { return is_bk; }
};

namespace detail {

inline std::vector<Integer> sorted_unique(std::span<const Integer> s) {
  std::vector<Integer> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// First two k-multisets (lexicographic over ascending element sequences) with the given sum.
inline BkCollision first_two_with_sum(const std::vector<Integer>& s, int k, Integer target) {
  std::vector<Multiset> found;
  Multiset cur;
  auto rec = [&](auto&& self, std::size_t from, int left, Integer remaining) -> void {
    if (found.size() == 2) return;
    if (left == 0) {
      if (remaining == 0) found.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < s.size() && found.size() < 2; ++i) {
      if (s[i] * static_cast<Integer>(left) > remaining) break;
      cur.push_back(s[i]);
      self(self, i, left - 1, remaining - s[i]);
      cur.pop_back();
    }
  };
  rec(rec, 0, k, target);
  if (found.size() != 2) throw InvariantViolation("collision witness reconstruction failed");
  return BkCollision{std::move(found[0]), std::move(found[1]), target};
}

/// Calls f(sum) for every k-multiset of s[0..limit) joined with at least one copy of x.
template <class F>
bool for_each_sum_with(const std::vector<Integer>& s, std::size_t limit, int k, Integer x, F&& f) {
  // t copies of x (t >= 1) plus a (k - t)-multiset from the prefix.
  auto rec = [&](auto&& self, std::size_t from, int left, Integer acc) -> bool {
    if (left == 0) return f(acc);
    for (std::size_t i = from; i < limit; ++i)
      if (!self(self, i, left - 1, acc + s[i])) return false;
    return true;
  };
  for (int t = 1; t <= k; ++t)
    if (!rec(rec, 0, k - t, x * static_cast<Integer>(t))) return false;
  return true;
}

}  // namespace detail

/// Grows a B_k set one element at a time, keeping the set of all k-sums.
/// Elements must be added in strictly increasing order.
class BkAccumulator {
 public:
  explicit BkAccumulator(int k) : k_(k) {
    if (k < 2) throw InvalidParameter("B_k requires k >= 2");
  }

  /// Adds x when the set stays B_k; otherwise leaves the state unchanged and
  /// returns the colliding sum.
  std::optional<Integer> try_add(Integer x) {
    if (!elements_.empty() && x <= elements_.back()) throw InvalidParameter("elements must be added in increasing order");
    std::vector<Integer> fresh;
    std::optional<Integer> clash;
    detail::for_each_sum_with(elements_, elements_.size(), k_, x, [&](Integer sum) {
      if (sums_.count(sum)) {
        clash = sum;
        return false;
      }
      fresh.push_back(sum);
      return true;
    });
    if (!clash) {
      std::sort(fresh.begin(), fresh.end());
      if (auto it = std::adjacent_find(fresh.begin(), fresh.end()); it != fresh.end()) clash = *it;
    }
    if (clash) return clash;
    sums_.insert(fresh.begin(), fresh.end());
    elements_.push_back(x);
    return std::nullopt;
  }

  const std::vector<Integer>& elements() const { return elements_; }
  int k() const { return k_; }

 private:
  int k_;
  std::vector<Integer> elements_;
  std::unordered_set<Integer> sums_;
};

/// Multiset counts above this use the incremental (per-element) route.
inline constexpr double kDirectEnumerationLimit = 1e8;

/// Exact B_k test. Duplicates in the candidate are ignored. On failure the
/// witness is the first pair of distinct k-multisets sharing a sum. Sets with
/// more than direct_limit k-multisets go through the incremental route.
inline BkVerdict verify_bk(std::span<const Integer> candidate, int k, double direct_limit = kDirectEnumerationLimit) {
  if (k < 2) throw InvalidParameter("B_k requires k >= 2");
  const auto s = detail::sorted_unique(candidate);
  if (s.empty()) return {};
  std::optional<Integer> clash;
  if (std::pow(static_cast<double>(s.size()), k) <= direct_limit) {
    std::unordered_set<Integer> seen;
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    while (true) {
      Integer sum = 0;
      for (auto i : idx) sum += s[i];
      if (!seen.insert(sum).second) {
        clash = sum;
        break;
      }
      // next non-decreasing index tuple
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == s.size() - 1) --pos;
      if (pos < 0) break;
      const auto v = ++idx[static_cast<std::size_t>(pos)];
      for (std::size_t j = static_cast<std::size_t>(pos) + 1; j < idx.size(); ++j) idx[j] = v;
    }
  } else {
    BkAccumulator acc(k);
    for (std::size_t i = 0; i < s.size() && !clash; ++i) clash = acc.try_add(s[i]);
  }
  if (!clash) return {};
  return BkVerdict{false, detail::first_two_with_sum(s, k, *clash)};
}

/// The derived l-sum property: verdicts for every l in 2..k.
inline std::vector<BkVerdict> verify_lsums(std::span<const Integer> candidate, int k) {
  std::vector<BkVerdict> out;
  for (int l = 2; l <= k; ++l) out.push_back(verify_bk(candidate, l));
  return out;
}

/// A verified B_k set inside {1, ..., universe_bound}.
class BkSet {
 public:
  /// Validates ordering, range and the B_k property.
  static BkSet make(std::vector<Integer> elements, int k, Integer universe_bound) {
    BkSet s = unchecked(std::move(elements), k, universe_bound);
    if (!std::is_sorted(s.elements_.begin(), s.elements_.end()) ||
        std::adjacent_find(s.elements_.begin(), s.elements_.end()) != s.elements_.end())
      throw InvalidParameter("B_k elements must be strictly increasing");
    if (!s.elements_.empty() && (s.elements_.front() < 1 || s.elements_.back() > universe_bound))
      throw InvalidParameter("B_k elements must lie in 1.." + std::to_string(universe_bound));
    const auto verdict = verify_bk(s.elements_, k);
    if (!verdict) throw InvalidParameter("not a B_" + std::to_string(k) + " set: sum " + std::to_string(verdict.collision->sum) + " repeats");
    return s;
  }

  /// No validation at all. For adversarial test harnesses only.
  static BkSet unchecked(std::vector<Integer> elements, int k, Integer universe_bound) {
    if (k < 2) throw InvalidParameter("B_k requires k >= 2");
    BkSet s;
    s.elements_ = std::move(elements);
    s.k_ = k;
    s.bound_ = universe_bound;
    return s;
  }

  const std::vector<Integer>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  int k() const { return k_; }
  Integer universe_bound() const { return bound_; }

  bool operator==(const BkSet&) const = default;

 private:
  BkSet() = default;
  std::vector<Integer> elements_;
  int k_ = 2;
  Integer bound_ = 0;
};

/// Largest q^k - 1 accepted by bose_chowla; the construction walks all q^k - 1 powers.
inline constexpr Integer kBoseChowlaBudget = 1'000'000'000;

/// Bose-Chowla: with theta a generator of GF(q^k)^*, the discrete logs of
/// theta + a for a in GF(q) form a B_k set modulo q^k - 1; shifted by +1 they
/// lie in {1, ..., q^k - 1}.
inline BkSet bose_chowla(Integer q, int k) {
  if (k < 2) throw InvalidParameter("B_k requires k >= 2");
  if (!gf::prime_power_decomposition(q)) throw InvalidParameter("not a prime power: " + std::to_string(q));
  const auto order = gf::bounded_pow(q, static_cast<unsigned>(k), kBoseChowlaBudget + 1);
  if (!order) throw ResourceLimit("q^k exceeds the Bose-Chowla budget");
  const gf::ExtensionField field(gf::PrimePowerField(q), static_cast<unsigned>(k));
  const auto theta = field.generator();
  const Integer group = *order - 1;

  std::vector<Integer> logs;
  logs.reserve(q);
  auto power = field.one();
  for (Integer i = 0; i < group; ++i) {
    // power - theta lies in GF(q) iff all non-constant coefficients agree.
    if (std::equal(power.begin() + 1, power.end(), theta.begin() + 1)) logs.push_back(i + 1);
    power = field.mul(power, theta);
  }
  if (logs.size() != q) throw InvariantViolation("Bose-Chowla produced " + std::to_string(logs.size()) + " residues");
  return BkSet::make(std::move(logs), k, group);
}

/// Scans 1..n and keeps x whenever the set stays B_k.
inline BkSet greedy_bk(Integer n, int k) {
  if (n < 1) throw InvalidParameter("greedy_bk requires n >= 1");
  BkAccumulator acc(k);
  for (Integer x = 1; x <= n; ++x) acc.try_add(x);
  return BkSet::unchecked(acc.elements(), k, n);
}

enum class BkSource { Greedy, BoseChowla };

inline const char* to_string(BkSource s) { return s == BkSource::Greedy ? "greedy" : "bose-chowla"; }

struct BkChoice {
  BkSet set;
  BkSource source;
  std::optional<Integer> q;  // the Bose-Chowla parameter that was considered
};

/// Largest prime power q (exponent <= 20) with q^k - 1 <= n.
inline std::optional<Integer> largest_prime_power_within(Integer n, int k) {
  if (k < 1) throw InvalidParameter("k must be positive");
  Integer q = static_cast<Integer>(std::floor(std::pow(static_cast<double>(n) + 1.0, 1.0 / k))) + 1;
  for (; q >= 2; --q) {
    const auto qk = gf::bounded_pow(q, static_cast<unsigned>(k), n + 1);
    if (!qk || *qk - 1 > n) continue;
    if (gf::prime_power_decomposition(q, 20)) return q;
  }
  return std::nullopt;
}

/// The larger of greedy_bk(n, k) and the best Bose-Chowla set fitting in {1..n}.
/// Ties go to the greedy set.
inline BkChoice best_bk_for_budget(Integer n, int k) {
  BkSet greedy = greedy_bk(n, k);
  const auto q = largest_prime_power_within(n, k);
  if (q && *q > greedy.size()) {
    BkSet bc = bose_chowla(*q, k);
    return BkChoice{BkSet::unchecked(bc.elements(), k, n), BkSource::BoseChowla, q};
  }
  return BkChoice{std::move(greedy), BkSource::Greedy, q};
}

// --- serialization: "# Bk k=<k> n=<n>" then one integer per line, ascending.

inline void write_bk_set(std::ostream& os, const BkSet& s) {
  os << "# Bk k=" << s.k() << " n=" << s.universe_bound() << '\n';
  for (Integer x : s.elements()) os << x << '\n';
}

inline BkSet read_bk_set(std::istream& is) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line)) throw InvalidInput(1, "missing B_k header");
  const auto head = text::fields(line);
  if (head.size() != 4 || head[0] != "#" || head[1] != "Bk" || head[2].substr(0, 2) != "k=" || head[3].substr(0, 2) != "n=")
    throw InvalidInput(lineno, "expected header '# Bk k=<k> n=<n>'");
  const auto k = text::parse_unsigned(head[2].substr(2), lineno);
  const auto n = text::parse_unsigned(head[3].substr(2), lineno);
  std::vector<Integer> elems;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const Integer v = text::parse_unsigned(line, lineno);
    if (!elems.empty() && v <= elems.back()) throw InvalidInput(lineno, "elements must be strictly increasing");
    elems.push_back(v);
  }
  try {
    return BkSet::make(std::move(elems), static_cast<int>(k), n);
  } catch (const InvalidParameter& e) {
    throw InvalidInput(lineno, e.what());
  }
}

}  // namespace bordered
