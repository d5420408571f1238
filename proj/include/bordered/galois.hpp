#pragma once

// Finite fields GF(p^e) and their degree-k extensions, sized for the small
// orders used by the Bose-Chowla construction. Field elements are encoded as
// integers: the coefficient vector (c_0, ..., c_{e-1}) over Z_p maps to
// c_0 + c_1 p + ... + c_{e-1} p^{e-1}. Integer order on codes is the
// "coefficient-lexicographic" order (highest degree most significant) used for
// every deterministic choice below.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bordered/error.hpp"

namespace bordered::gf {

using u64 = std::uint64_t;
using Code = std::uint32_t;
/// Polynomial over a field, low degree first, no trailing zero coefficients.
using Poly = std::vector<Code>;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors in ascending order.
inline std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct PrimePower {
  u64 p;
  unsigned e;
};

/// q = p^e with p prime and 1 <= e <= max_exponent, if such a decomposition exists.
inline std::optional<PrimePower> prime_power_decomposition(u64 q, unsigned max_exponent = 64) {
  if (q < 2) return std::nullopt;
  const auto factors = distinct_prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  unsigned e = 0;
  for (u64 r = q; r > 1; r /= factors[0]) ++e;
  if (e > max_exponent) return std::nullopt;
  return PrimePower{factors[0], e};
}

/// base^e, or nullopt when the result exceeds cap.
inline std::optional<u64> bounded_pow(u64 base, unsigned e, u64 cap) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  if (r > cap) return std::nullopt;
  return r;
}

/// Z_p with p prime.
class PrimeField {
 public:
  explicit PrimeField(u64 p) : p_(p) {
    if (!is_prime(p)) throw InvalidParameter("not a prime: " + std::to_string(p));
  }
  u64 order() const { return p_; }
  Code add(Code a, Code b) const { return static_cast<Code>((u64{a} + b) % p_); }
  Code sub(Code a, Code b) const { return static_cast<Code>((u64{a} + p_ - b) % p_); }
  Code mul(Code a, Code b) const { return static_cast<Code>((u64{a} * b) % p_); }
  Code inv(Code a) const {
    if (a == 0) throw InvalidParameter("zero has no inverse");
    u64 r = 1, b = a, e = p_ - 2;
    for (; e; e >>= 1, b = b * b % p_)
      if (e & 1) r = r * b % p_;
    return static_cast<Code>(r);
  }

 private:
  u64 p_;
};

// --- generic polynomial arithmetic over any field exposing add/sub/mul/inv/order

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a modulo the monic polynomial m.
template <class Field>
Poly poly_rem(Poly a, const Poly& m, const Field& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const Code lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
    trim(a);
  }
  return a;
}

template <class Field>
Poly poly_mul(const Poly& a, const Poly& b, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

template <class Field>
Code poly_eval(const Poly& a, Code x, const Field& f) {
  Code acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

/// Monic polynomial of degree d whose lower coefficients are the base-|F| digits of code.
template <class Field>
Poly monic_from_code(unsigned d, u64 code, const Field& f) {
  Poly m(d + 1, 0);
  for (unsigned i = 0; i < d; ++i, code /= f.order()) m[i] = static_cast<Code>(code % f.order());
  m[d] = 1;
  return m;
}

/// Exhaustive irreducibility check: root search for degree <= 3, trial division
/// by every monic polynomial of degree <= d/2 otherwise.
template <class Field>
bool is_irreducible(const Poly& m, const Field& f) {
  const unsigned d = static_cast<unsigned>(m.size() - 1);
  if (d == 0) return false;
  if (d == 1) return true;
  if (d <= 3) {
    for (u64 x = 0; x < f.order(); ++x)
      if (poly_eval(m, static_cast<Code>(x), f) == 0) return false;
    return true;
  }
  constexpr u64 kTrialBudget = 50'000'000;
  u64 spent = 0;
  for (unsigned g = 1; g <= d / 2; ++g) {
    const auto count = bounded_pow(f.order(), g, kTrialBudget);
    if (!count || (spent += *count) > kTrialBudget)
      throw ResourceLimit("irreducibility trial division exceeds budget");
    for (u64 code = 0; code < *count; ++code)
      if (poly_rem(m, monic_from_code(g, code, f), f).empty()) return false;
  }
  return true;
}

/// Lexicographically smallest monic irreducible polynomial of degree d over f.
template <class Field>
Poly smallest_monic_irreducible(unsigned d, const Field& f) {
  const auto count = bounded_pow(f.order(), d, u64{1} << 40);
  if (!count) throw ResourceLimit("irreducible search space too large");
  for (u64 code = 0; code < *count; ++code) {
    Poly m = monic_from_code(d, code, f);
    if (is_irreducible(m, f)) return m;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

/// GF(q), q = p^e, with log/exp tables for multiplication.
class PrimePowerField {
 public:
  static constexpr u64 kMaxOrder = u64{1} << 24;

  explicit PrimePowerField(u64 q) : prime_(2) {
    const auto pp = prime_power_decomposition(q);
    if (!pp) throw InvalidParameter("not a prime power: " + std::to_string(q));
    if (q > kMaxOrder) throw ResourceLimit("field order too large: " + std::to_string(q));
    p_ = pp->p;
    e_ = pp->e;
    q_ = q;
    prime_ = PrimeField(p_);
    modulus_ = smallest_monic_irreducible(e_, prime_);
    build_tables();
  }

  u64 characteristic() const { return p_; }
  unsigned exponent() const { return e_; }
  u64 order() const { return q_; }
  const Poly& modulus() const { return modulus_; }
  Code primitive_element() const { return exp_[1]; }

  Code add(Code a, Code b) const {
    if (e_ == 1) return static_cast<Code>((u64{a} + b) % p_);
    if (p_ == 2) return a ^ b;
    Code r = 0;
    u64 place = 1;
    for (unsigned i = 0; i < e_; ++i, a /= p_, b /= p_, place *= p_)
      r += static_cast<Code>(((a % p_ + b % p_) % p_) * place);
    return r;
  }
  Code neg(Code a) const {
    if (p_ == 2) return a;
    Code r = 0;
    u64 place = 1;
    for (unsigned i = 0; i < e_; ++i, a /= p_, place *= p_)
      r += static_cast<Code>((p_ - a % p_) % p_ * place);
    return r;
  }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(u64{log_[a]} + log_[b]) % (q_ - 1)];
  }
  Code inv(Code a) const {
    if (a == 0) throw InvalidParameter("zero has no inverse");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  /// Polynomial multiplication modulo the reduction polynomial, without tables.
  Code slow_mul(Code a, Code b) const {
    return encode(poly_rem(poly_mul(decode(a), decode(b), prime_), modulus_, prime_));
  }
  Code slow_pow(Code a, u64 e) const {
    Code r = 1;
    for (; e; e >>= 1, a = slow_mul(a, a))
      if (e & 1) r = slow_mul(r, a);
    return r;
  }

 private:
  Poly decode(Code c) const {
    Poly a(e_, 0);
    for (unsigned i = 0; i < e_; ++i, c /= p_) a[i] = static_cast<Code>(c % p_);
    trim(a);
    return a;
  }
  Code encode(const Poly& a) const {
    Code c = 0;
    for (std::size_t i = a.size(); i-- > 0;) c = static_cast<Code>(c * p_ + a[i]);
    return c;
  }
  void build_tables() {
    const u64 n = q_ - 1;
    const auto factors = distinct_prime_factors(n);
    Code g = 0;
    for (u64 c = 1; c < q_ && g == 0; ++c) {
      bool full = true;
      for (u64 r : factors)
        if (slow_pow(static_cast<Code>(c), n / r) == 1) {
          full = false;
          break;
        }
      if (full) g = static_cast<Code>(c);
    }
    if (g == 0) throw InvariantViolation("no primitive element in GF(" + std::to_string(q_) + ")");
    exp_.assign(n == 0 ? 1 : n, 1);
    log_.assign(q_, 0);
    Code x = 1;
    for (u64 i = 0; i < n; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<Code>(i);
      x = slow_mul(x, g);
    }
    if (x != 1) throw InvariantViolation("generator order mismatch");
    if (exp_.size() < 2) exp_.push_back(1);  // GF(2): primitive_element() reads exp_[1]
  }

  u64 p_ = 2;
  unsigned e_ = 1;
  u64 q_ = 2;
  PrimeField prime_;
  Poly modulus_;
  std::vector<Code> exp_;
  std::vector<Code> log_;
};

/// GF(q^k) as GF(q)[x] modulo the smallest monic irreducible of degree k.
class ExtensionField {
 public:
  using Element = std::vector<Code>;  // exactly `degree` coefficients, low first

  ExtensionField(PrimePowerField base, unsigned degree) : base_(std::move(base)), degree_(degree) {
    if (degree < 1) throw InvalidParameter("extension degree must be >= 1");
    const auto order = bounded_pow(base_.order(), degree, u64{1} << 62);
    if (!order) throw ResourceLimit("extension field order overflows");
    order_ = *order;
    modulus_ = smallest_monic_irreducible(degree, base_);
  }

  const PrimePowerField& base() const { return base_; }
  unsigned degree() const { return degree_; }
  u64 order() const { return order_; }
  const Poly& modulus() const { return modulus_; }

  Element one() const {
    Element r(degree_, 0);
    r[0] = 1;
    return r;
  }

  Element from_code(u64 code) const {
    Element r(degree_, 0);
    for (unsigned i = 0; i < degree_; ++i, code /= base_.order()) r[i] = static_cast<Code>(code % base_.order());
    return r;
  }

  Element mul(const Element& a, const Element& b) const {
    Poly r = poly_rem(poly_mul(Poly(a.begin(), a.end()), Poly(b.begin(), b.end()), base_), modulus_, base_);
    r.resize(degree_, 0);
    return r;
  }

  Element pow(Element a, u64 e) const {
    Element r = one();
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }

  bool has_full_order(const Element& a, const std::vector<u64>& factors_of_group_order) const {
    const u64 n = order_ - 1;
    if (pow(a, n) != one()) return false;
    for (u64 r : factors_of_group_order)
      if (pow(a, n / r) == one()) return false;
    return true;
  }

  /// Smallest element (by code) generating the multiplicative group.
  Element generator() const {
    const auto factors = distinct_prime_factors(order_ - 1);
    for (u64 c = 1; c < order_; ++c) {
      Element a = from_code(c);
      if (has_full_order(a, factors)) return a;
    }
    throw InvariantViolation("multiplicative group has no generator");
  }

 private:
  PrimePowerField base_;
  unsigned degree_;
  u64 order_ = 0;
  Poly modulus_;
};

}  // namespace bordered::gf
