#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "bordered/galois.hpp"
#include "bordered/random.hpp"
#include "bordered/sidon.hpp"
#include "oracles.hpp"

using namespace bordered;

namespace {

std::vector<Integer> v(std::initializer_list<Integer> xs) { return xs; }

}  // namespace

TEST(Galois, PrimePowers) {
  EXPECT_TRUE(gf::prime_power_decomposition(2));
  EXPECT_TRUE(gf::prime_power_decomposition(9));
  EXPECT_EQ(gf::prime_power_decomposition(8)->e, 3u);
  EXPECT_EQ(gf::prime_power_decomposition(125)->p, 5u);
  EXPECT_FALSE(gf::prime_power_decomposition(1));
  EXPECT_FALSE(gf::prime_power_decomposition(6));
  EXPECT_FALSE(gf::prime_power_decomposition(12));
  EXPECT_FALSE(gf::bounded_pow(10, 10, 1000));
  EXPECT_EQ(*gf::bounded_pow(3, 4, 81), 81u);
}

// Field axioms checked against exhaustive tables for each small prime power.
TEST(Galois, PrimePowerFieldAxioms) {
  for (gf::u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u}) {
    const gf::PrimePowerField f(q);
    ASSERT_EQ(f.order(), q);
    for (gf::u64 a = 0; a < q; ++a) {
      const auto ca = static_cast<gf::Code>(a);
      EXPECT_EQ(f.add(ca, 0), ca);
      EXPECT_EQ(f.mul(ca, 1), ca);
      EXPECT_EQ(f.add(ca, f.neg(ca)), 0u);
      if (a) {
        EXPECT_EQ(f.mul(ca, f.inv(ca)), 1u) << "q=" << q << " a=" << a;
      }
      for (gf::u64 b = 0; b < q; ++b) {
        const auto cb = static_cast<gf::Code>(b);
        EXPECT_EQ(f.mul(ca, cb), f.slow_mul(ca, cb));
        EXPECT_EQ(f.add(ca, cb), f.add(cb, ca));
        for (gf::u64 c = 0; c < q; c += 3) {
          const auto cc = static_cast<gf::Code>(c);
          EXPECT_EQ(f.mul(ca, f.add(cb, cc)), f.add(f.mul(ca, cb), f.mul(ca, cc)));
        }
      }
    }
    // Primitive element: its powers hit every nonzero element.
    std::set<gf::Code> seen;
    gf::Code x = 1;
    for (gf::u64 i = 0; i + 1 < q; ++i, x = f.mul(x, f.primitive_element())) seen.insert(x);
    EXPECT_EQ(seen.size(), q - 1);
  }
  EXPECT_THROW(gf::PrimePowerField(6), InvalidParameter);
}

TEST(Galois, SmallestIrreducibleIsLexicographicallyFirst) {
  const gf::PrimeField f2(2);
  // x^2 + x + 1 is the only irreducible quadratic over GF(2).
  EXPECT_EQ(gf::smallest_monic_irreducible(2, f2), (gf::Poly{1, 1, 1}));
  // Cubics over GF(2): x^3 + x + 1 precedes x^3 + x^2 + 1 in code order.
  EXPECT_EQ(gf::smallest_monic_irreducible(3, f2), (gf::Poly{1, 1, 0, 1}));
  const gf::PrimeField f3(3);
  EXPECT_EQ(gf::smallest_monic_irreducible(2, f3), (gf::Poly{1, 0, 1}));
}

TEST(Galois, ExtensionGeneratorHasFullOrder) {
  for (auto [q, k] : std::vector<std::pair<gf::u64, unsigned>>{{2, 2}, {3, 2}, {4, 3}, {5, 3}, {2, 4}}) {
    const gf::ExtensionField f(gf::PrimePowerField(q), k);
    const auto g = f.generator();
    std::set<std::vector<gf::Code>> seen;
    auto x = f.one();
    for (gf::u64 i = 0; i + 1 < f.order(); ++i, x = f.mul(x, g)) seen.insert(x);
    EXPECT_EQ(seen.size(), f.order() - 1) << q << "^" << k;
  }
}

TEST(Sidon, VerifySpecExamples) {
  EXPECT_TRUE(verify_bk(v({1, 2, 5, 11}), 2));
  const auto bad = verify_bk(v({1, 2, 3}), 2);
  ASSERT_FALSE(bad);
  EXPECT_EQ(bad.collision->first, v({1, 3}));
  EXPECT_EQ(bad.collision->second, v({2, 2}));
  EXPECT_EQ(bad.collision->sum, 4u);
  EXPECT_TRUE(verify_bk(v({7}), 5));
  EXPECT_TRUE(verify_bk(v({1, 2}), 3));
  EXPECT_THROW(verify_bk(v({1}), 1), InvalidParameter);
}

TEST(Sidon, VerifyAgreesWithTupleOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(3));
    std::vector<Integer> s;
    const auto size = 1 + rng.below(6);
    for (std::uint64_t i = 0; i < size; ++i) s.push_back(1 + rng.below(40));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    const auto verdict = verify_bk(s, k);
    ASSERT_EQ(static_cast<bool>(verdict), oracle::is_bk(s, k)) << "trial " << trial;
    if (!verdict) {
      Integer a = 0, b = 0;
      for (auto x : verdict.collision->first) a += x;
      for (auto x : verdict.collision->second) b += x;
      EXPECT_EQ(a, b);
      EXPECT_EQ(a, verdict.collision->sum);
      EXPECT_NE(verdict.collision->first, verdict.collision->second);
      EXPECT_EQ(verdict.collision->first.size(), static_cast<std::size_t>(k));
    }
  }
}

TEST(Sidon, LSumsHoldForEveryGeneratedSet) {
  for (int k = 2; k <= 4; ++k) {
    const auto sets = {greedy_bk(200, k), best_bk_for_budget(400, k).set};
    for (const auto& s : sets) {
      ASSERT_LE(s.size(), 30u);
      const auto lv = verify_lsums(s.elements(), k);
      ASSERT_EQ(lv.size(), static_cast<std::size_t>(k - 1));
      for (int l = 2; l <= k; ++l) {
        EXPECT_TRUE(lv[static_cast<std::size_t>(l - 2)]) << "k=" << k << " l=" << l;
        EXPECT_TRUE(oracle::is_bk(s.elements(), l));
      }
    }
  }
}

TEST(Sidon, TranslationInvariance) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> s;
    for (int i = 0; i < 5; ++i) s.push_back(1 + rng.below(30));
    const Integer shift = rng.below(1000);
    std::vector<Integer> t;
    for (auto x : s) t.push_back(x + shift);
    const int k = 2 + static_cast<int>(rng.below(2));
    EXPECT_EQ(static_cast<bool>(verify_bk(s, k)), static_cast<bool>(verify_bk(t, k)));
  }
}

TEST(Sidon, BoseChowlaExamples) {
  for (auto [q, k] : std::vector<std::pair<Integer, int>>{{2, 2}, {3, 2}, {5, 3}, {4, 2}, {8, 2}, {9, 3}, {3, 4}}) {
    const BkSet s = bose_chowla(q, k);
    EXPECT_EQ(s.size(), q);
    Integer qk = 1;
    for (int i = 0; i < k; ++i) qk *= q;
    EXPECT_LE(s.elements().back(), qk - 1);
    EXPECT_GE(s.elements().front(), 1u);
    EXPECT_TRUE(oracle::is_bk(s.elements(), k)) << q << "," << k;
  }
  EXPECT_THROW(bose_chowla(6, 2), InvalidParameter);
  EXPECT_THROW(bose_chowla(1, 2), InvalidParameter);
  EXPECT_THROW(bose_chowla(1009, 4), ResourceLimit);
}

TEST(Sidon, BoseChowlaIsDeterministic) { EXPECT_EQ(bose_chowla(7, 3), bose_chowla(7, 3)); }

TEST(Sidon, GreedyExamples) {
  // The scan admits 4 (pair sums of {1,2,4} are 2,3,4,5,6,8) and then 8: the
  // Mian-Chowla prefix 1, 2, 4, 8.
  EXPECT_EQ(greedy_bk(12, 2).elements(), v({1, 2, 4, 8}));
  EXPECT_TRUE(verify_bk(v({1, 2, 5, 11}), 2));
  EXPECT_EQ(greedy_bk(1, 3).elements(), v({1}));
  EXPECT_EQ(greedy_bk(5, 3).elements(), v({1, 2, 5}));
}

TEST(Sidon, GreedyMatchesOracleScan) {
  for (int k = 2; k <= 3; ++k) {
    std::vector<Integer> s;
    for (Integer x = 1; x <= 60; ++x) {
      s.push_back(x);
      if (!oracle::is_bk(s, k)) s.pop_back();
    }
    EXPECT_EQ(greedy_bk(60, k).elements(), s);
  }
}

TEST(Sidon, GreedyIsMonotone) {
  for (int k = 2; k <= 3; ++k) {
    const auto big = greedy_bk(300, k).elements();
    for (Integer n = 1; n <= 300; n += 13) {
      const auto small = greedy_bk(n, k).elements();
      EXPECT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    }
  }
}

TEST(Sidon, BestForBudget) {
  const auto a = best_bk_for_budget(3, 2);
  EXPECT_EQ(a.set.size(), 2u);
  EXPECT_EQ(best_bk_for_budget(1, 2).set.elements(), v({1}));
  const auto big = best_bk_for_budget(10'000, 2);
  EXPECT_GE(big.set.size(), 97u);
  EXPECT_EQ(big.source, BkSource::BoseChowla);
  EXPECT_EQ(*big.q, 97u);
  EXPECT_EQ(big.set.universe_bound(), 10'000u);
  EXPECT_TRUE(verify_bk(big.set.elements(), 2));
  EXPECT_EQ(*largest_prime_power_within(10'000, 2), 97u);
  EXPECT_EQ(*largest_prime_power_within(63, 2), 8u);
  EXPECT_FALSE(largest_prime_power_within(2, 2));
}

TEST(Sidon, HashedRouteAgreesWithDirect) {
  Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(3));
    std::vector<Integer> s;
    for (int i = 0; i < 7; ++i) s.push_back(1 + rng.below(200));
    const auto direct = verify_bk(s, k);
    const auto hashed = verify_bk(s, k, 0.0);
    ASSERT_EQ(static_cast<bool>(direct), static_cast<bool>(hashed));
    if (!hashed) {
      Integer x = 0, y = 0;
      for (auto e : hashed.collision->first) x += e;
      for (auto e : hashed.collision->second) y += e;
      EXPECT_EQ(x, y);
      EXPECT_EQ(x, hashed.collision->sum);
      EXPECT_NE(hashed.collision->first, hashed.collision->second);
    }
  }
  const auto big = best_bk_for_budget(5000, 3).set;
  EXPECT_TRUE(verify_bk(big.elements(), 3, 0.0));
}

TEST(Sidon, SerializationRoundTrip) {
  const BkSet s = best_bk_for_budget(100, 3).set;
  std::stringstream ss;
  write_bk_set(ss, s);
  EXPECT_EQ(ss.str().substr(0, 15), "# Bk k=3 n=100\n");
  EXPECT_EQ(read_bk_set(ss), s);

  std::stringstream bad("# Bk k=2 n=10\n1\n2\n3\n");
  try {
    read_bk_set(bad);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  std::stringstream order("# Bk k=2 n=10\n2\n1\n");
  EXPECT_THROW(read_bk_set(order), InvalidInput);
  std::stringstream junk("# Bk k=2 n=10\n1x\n");
  EXPECT_THROW(read_bk_set(junk), InvalidInput);
}

TEST(Sidon, BkSetValidation) {
  EXPECT_THROW(BkSet::make(v({1, 2, 3}), 2, 5), InvalidParameter);
  EXPECT_THROW(BkSet::make(v({2, 1}), 2, 5), InvalidParameter);
  EXPECT_THROW(BkSet::make(v({1, 9}), 2, 5), InvalidParameter);
  EXPECT_EQ(BkSet::make(v({1, 2, 5}), 2, 5).size(), 3u);
}
