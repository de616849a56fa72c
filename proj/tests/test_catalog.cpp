#include <gtest/gtest.h>

#include "bvl/beauville.hpp"
#include "bvl/catalog.hpp"
#include "support.hpp"

using namespace bvl;

namespace {

std::vector<Permutation> elements(const GeneratingTriple& t) { return {t.x, t.y, t.z}; }

bool oracle_equivalent(const GeneratingTriple& a, const GeneratingTriple& b) {
  return test::triples_conjugate_in_sn(elements(a), elements(b));
}

std::vector<GeneratingTriple> with_rotations(const GeneratingTriple& t) {
  auto r1 = t.rotated();
  return {t, r1, r1.rotated()};
}

}  // namespace

TEST(Catalog, EveryEntryIsChecked) {
  for (int n = 5; n <= 11; ++n)
    for (const auto& e : catalog_small(n)) {
      const auto& t = e.triple;
      EXPECT_TRUE(t.x.is_even() && t.y.is_even()) << e.label;
      EXPECT_TRUE(t.is_product_identity()) << e.label;
      EXPECT_EQ(t.z, (t.x * t.y).inverse()) << e.label;
      if (!e.ok()) continue;
      EXPECT_EQ(t.type(), e.claimed) << e.label;
      EXPECT_EQ(group_order(t.degree(), {t.x, t.y}), alternating_order(n)) << e.label;
      if (n <= 7) {
        EXPECT_EQ(test::naive_closure(t.degree(), {t.x, t.y}).size(),
                  static_cast<std::size_t>(alternating_order(n)))
            << e.label;
      }
    }
}

TEST(Catalog, OnlyTheListedA6Entry445IsFlagged) {
  for (int n = 5; n <= 11; ++n)
    for (const auto& e : catalog_small(n)) {
      if (e.label == "A6 (4,4,5) as listed") {
        EXPECT_FALSE(e.ok());
        EXPECT_FALSE(e.generates);
        EXPECT_EQ(e.triple.type(), (TripleType{4, 4, 3}));
        EXPECT_EQ(test::naive_closure(6, {e.triple.x, e.triple.y}).size(), 24u);
      } else {
        EXPECT_TRUE(e.ok()) << e.label << ": " << (e.diagnostics.empty() ? "" : e.diagnostics.front());
      }
    }
}

TEST(Catalog, RepairedA6Entry445) {
  const auto pair = catalog_pair(6);
  EXPECT_EQ(pair.second.type(), (TripleType{4, 4, 5}));
  EXPECT_EQ(pair.second.z, Permutation::parse("(1,2,3,4,5)", 6));
  EXPECT_EQ(test::naive_closure(6, {pair.second.x, pair.second.y}).size(), 360u);
}

TEST(Catalog, A11ListedZDiffersButCycleTypeAgrees) {
  const auto entries = catalog_small(11);
  const auto& e = entries.front();
  ASSERT_EQ(e.label, "A11 (5,8,9)");
  EXPECT_TRUE(e.ok());
  ASSERT_EQ(e.notes.size(), 1u);
  EXPECT_NE(*e.listed_z, e.triple.z);
  EXPECT_EQ(e.listed_z->cycle_type(), e.triple.z.cycle_type());
}

TEST(Catalog, Examples) {
  const auto a5 = catalog_pair(5);
  EXPECT_EQ(a5.first.type(), (TripleType{2, 5, 5}));
  EXPECT_EQ(a5.second.type(), (TripleType{3, 3, 5}));
  const auto a10 = catalog_pair(10);
  EXPECT_EQ(a10.first.x, Permutation::parse("(1,2,3,4,5,6,7,8)(9,10)", 10));
  EXPECT_EQ(a10.first.type(), (TripleType{8, 5, 7}));
  EXPECT_THROW(catalog_small(4), InvalidArgument);
  EXPECT_THROW(catalog_small(12), InvalidArgument);
}

TEST(Catalog, PairsAreStronglyDistinguishing) {
  for (int n = 5; n <= 11; ++n) {
    const auto [t1, t2] = catalog_pair(n);
    for (int p : primes_upto(n))
      EXPECT_TRUE(is_strongly_p_distinguishing(t1, t2, static_cast<std::uint64_t>(p), n)) << n << " " << p;
    // the three rotations on each side are mutually inequivalent
    for (const auto& t : {t1, t2}) {
      const auto rots = with_rotations(t);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) EXPECT_FALSE(oracle_equivalent(rots[i], rots[j])) << n;
    }
  }
}

TEST(Catalog, CoprimeTriples) {
  for (int n = 6; n <= 11; ++n) {
    const auto ts = catalog_coprime(n);
    ASSERT_EQ(ts.size(), 2u) << n;
    const auto ty = ts[0].type();
    EXPECT_EQ(ts[1].type(), ty);
    EXPECT_EQ(std::gcd(ty[0], ty[1]), 1u);
    EXPECT_EQ(std::gcd(ty[0], ty[2]), 1u);
    EXPECT_EQ(std::gcd(ty[1], ty[2]), 1u);
    EXPECT_FALSE(oracle_equivalent(ts[0], ts[1])) << n;
  }
  EXPECT_EQ(catalog_coprime(6)[0].type(), (TripleType{3, 4, 5}));
}

TEST(LongCycle, RepresentativeCounts) {
  for (int n = 12; n <= 20; ++n) {
    const std::size_t m = static_cast<std::size_t>(n);
    const std::size_t want = n % 2 ? (m - 5) * (m - 6) * (m - 7) / 24 : (m - 5) * (m - 6) * (m - 7) / 6;
    EXPECT_EQ(family_long_cycle_parameters(n).size(), want) << n;
  }
  EXPECT_EQ(family_long_cycle_parameters(13).size(), 14u);
  EXPECT_EQ(family_long_cycle_parameters(12).size(), 35u);
}

TEST(LongCycle, Instance) {
  const auto t = family_long_cycle(13, {{1, 2, 3, 4}});
  EXPECT_EQ(t.type(), (TripleType{9, 2, 13}));
  EXPECT_EQ(group_order(13, {t.x, t.y}), alternating_order(13));
  const auto e = family_long_cycle(12, {{1, 3, 4, 5}});
  EXPECT_EQ(e.type(), (TripleType{9, 2, 11}));
}

TEST(LongCycle, IllegalParameters) {
  EXPECT_THROW(family_long_cycle(13, {{1, 1, 2, 3}}), InvalidArgument);
  EXPECT_THROW(family_long_cycle(13, {{1, 2, 3, 10}}), InvalidArgument);
  EXPECT_THROW(family_long_cycle(12, {{1, 2, 4, 5}}), InvalidArgument);
  EXPECT_THROW(family_long_cycle(11, {{1, 2, 3, 4}}), InvalidArgument);
}

TEST(LongCycle, RepresentativesPairwiseInequivalent) {
  for (int n : {12, 13, 15}) {
    const auto reps = family_long_cycle_representatives(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(oracle_equivalent(reps[i], reps[j])) << n << " " << i << " " << j;
  }
}

TEST(LongCycle, OddShiftsAreEquivalent) {
  // shifting {s,t,u,v} by one conjugates the triple by x
  const auto a = family_long_cycle(13, {{1, 2, 4, 7}});
  const auto b = family_long_cycle(13, {{2, 3, 5, 8}});
  EXPECT_TRUE(oracle_equivalent(a, b));
}

TEST(LongCycle, SixExpansionsInequivalent) {
  const auto ex = six_expansions(family_long_cycle(13, {{1, 2, 3, 5}}));
  for (const auto& t : ex) {
    EXPECT_TRUE(t.is_product_identity());
    auto ty = t.type();
    std::sort(ty.begin(), ty.end());
    EXPECT_EQ(ty, (TripleType{2, 9, 13}));
  }
  for (std::size_t i = 0; i < ex.size(); ++i)
    for (std::size_t j = i + 1; j < ex.size(); ++j) EXPECT_FALSE(oracle_equivalent(ex[i], ex[j]));
}

TEST(Tp, Examples) {
  const auto t3 = family_Tp(12, 3);
  EXPECT_EQ(t3.x.cycle_type().nontrivial(), std::vector<int>{9});
  EXPECT_EQ(t3.y.cycle_type().parts, (std::vector<int>{7, 5}));
  const auto t2 = family_Tp(12, 2);
  EXPECT_EQ(t2.x.cycle_type().nontrivial(), (std::vector<int>{8, 2}));
}

TEST(Tp, ConstructionProperties) {
  for (int n = 12; n <= 20; ++n)
    for (int p : primes_upto(n)) {
      const auto t = family_Tp(n, p);
      const auto up = static_cast<std::uint64_t>(p);
      EXPECT_EQ(group_order(t.degree(), {t.x, t.y}), alternating_order(n)) << n << " " << p;
      EXPECT_GE(nu_p(t, up, n), 1) << n << " " << p;
      EXPECT_EQ(t.x.order(), exponent_p_part(n, up));
      EXPECT_GE(t.z.cycle_type().nontrivial().size(), 2u);
      // y: two coprime cycles (and a fixed point for odd n)
      const auto [c, d] = coprime_cycle_lengths(n);
      EXPECT_EQ(std::gcd(c, d), 1);
      auto parts = t.y.cycle_type().parts;
      std::vector<int> want{d, c};
      if (n % 2) want.push_back(1);
      EXPECT_EQ(parts, want);
    }
}

TEST(TpPrime, Examples) {
  EXPECT_EQ(family_Tp_prime(13, 2).type(), (TripleType{11, 2, 13}));
  EXPECT_EQ(family_Tp_prime(12, 3).type(), (TripleType{11, 3, 11}));
  EXPECT_EQ(family_Tp_prime(13, 3).type(), (TripleType{13, 3, 13}));
}

TEST(TpPrime, ConstructionProperties) {
  for (int n = 12; n <= 30; ++n)
    for (int p : primes_upto(n)) {
      const auto t = family_Tp_prime(n, p);
      const auto up = static_cast<std::uint64_t>(p);
      EXPECT_EQ(group_order(t.degree(), {t.x, t.y}), alternating_order(n)) << n << " " << p;
      const auto full = exponent_p_part(n, up);
      for (auto o : t.type()) EXPECT_NE(o % full, 0u) << n << " " << p;
      if (p > 3) continue;
      for (const auto& g : elements(t))
        for (int len : g.cycle_type().parts) EXPECT_NE(len % (p * p), 0) << n << " " << p;
    }
}

TEST(Families, WithinFamilyRotationsInequivalent) {
  for (int n = 12; n <= 20; ++n) {
    for (bool prime_family : {false, true}) {
      std::vector<GeneratingTriple> all;
      for (int p : primes_upto(n))
        for (auto& r : with_rotations(prime_family ? family_Tp_prime(n, p) : family_Tp(n, p))) all.push_back(r);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
          EXPECT_FALSE(oracle_equivalent(all[i], all[j])) << n << " " << i << " " << j;
    }
  }
}

TEST(Families, CrossFamilyInequivalent) {
  for (int n = 12; n <= 20; ++n) {
    const auto primes = primes_upto(n);
    for (int p : primes) {
      const auto tp = family_Tp(n, p);
      for (int q : primes)
        for (const auto& r : with_rotations(family_Tp_prime(n, q)))
          EXPECT_FALSE(oracle_equivalent(tp, r)) << n << " " << p << " " << q;
    }
  }
}

TEST(Families, LibraryEquivalenceAgreesWithOracle) {
  const auto a = family_Tp(14, 7);
  EXPECT_FALSE(triple_equivalent(a, family_Tp(14, 5)));
  const auto h = Permutation::parse("(1,5,9)(2,14)", 14);
  GeneratingTriple b{conjugate(a.x, h), conjugate(a.y, h), conjugate(a.z, h), "", ""};
  EXPECT_TRUE(triple_equivalent(a, b));
  EXPECT_TRUE(oracle_equivalent(a, b));
}

TEST(Pool, A5Supply) {
  const auto t = catalog_pair(5).first;
  const auto pool = pool_inequivalent(5, 16, with_rotations(t));
  ASSERT_EQ(pool.size(), 16u);
  std::vector<GeneratingTriple> all = with_rotations(t);
  all.insert(all.end(), pool.begin(), pool.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(oracle_equivalent(all[i], all[j]));
  EXPECT_THROW(pool_inequivalent(5, 17, with_rotations(t)), PoolExhausted);
}

TEST(Pool, Empty) { EXPECT_TRUE(pool_inequivalent(12, 0, {}).empty()); }

TEST(Pool, A12Hundred) {
  const auto pool = pool_inequivalent(12, 100, {});
  ASSERT_EQ(pool.size(), 100u);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_EQ(group_order(12, {pool[i].x, pool[i].y}), alternating_order(12));
    for (std::size_t j = i + 1; j < pool.size(); ++j) EXPECT_FALSE(oracle_equivalent(pool[i], pool[j]));
  }
}

TEST(Pool, RandomSupplyIsDeterministic) {
  const auto a = pool_inequivalent(9, 20, {}, 5), b = pool_inequivalent(9, 20, {}, 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_elements(b[i]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) EXPECT_FALSE(oracle_equivalent(a[i], a[j]));
}
