#include <gtest/gtest.h>

#include <random>

#include "bvl/group.hpp"
#include "support.hpp"

using namespace bvl;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

}  // namespace

TEST(Orbits, Basic) {
  PermGroup g(4, {P("(1,2)(3,4)", 4)});
  EXPECT_EQ(g.orbits().size(), 2u);
  EXPECT_FALSE(g.is_transitive());
  for (std::size_t n = 2; n <= 12; ++n)
    EXPECT_TRUE(PermGroup(n, {Permutation::cycle_range(n, 1, static_cast<int>(n))}).is_transitive());
}

TEST(Orbits, FinestInvariantPartition) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    std::vector<Permutation> gens{test::random_permutation(n, rng)};
    const auto orb = orbits(n, gens);
    const auto closure = test::naive_closure(n, gens);
    for (const auto& o : orb)
      for (const auto& img : closure)
        for (auto a : o) EXPECT_TRUE(std::find(o.begin(), o.end(), img[a]) != o.end());
    // points in one orbit are connected by an element of the group
    for (const auto& o : orb)
      for (auto b : o) {
        bool reached = false;
        for (const auto& img : closure) reached = reached || img[o.front()] == b;
        EXPECT_TRUE(reached);
      }
  }
}

TEST(Orbits, A6TripleOfType445IsTransitive) {
  auto x = P("(1,2,3,4)(5,6)", 6);
  auto y = P("(1,3)(2,5,6,4)", 6);
  EXPECT_TRUE(PermGroup(6, {x, y}).is_transitive());
}

TEST(Blocks, HexagonHasTwoSystems) {
  PermGroup g(6, {P("(1,2,3,4,5,6)", 6)});
  const auto& b = g.block_systems();
  ASSERT_EQ(b.size(), 2u);
  Partition thirds{{0, 2, 4}, {1, 3, 5}}, halves{{0, 3}, {1, 4}, {2, 5}};
  EXPECT_TRUE(std::find(b.begin(), b.end(), thirds) != b.end());
  EXPECT_TRUE(std::find(b.begin(), b.end(), halves) != b.end());
  EXPECT_FALSE(g.is_primitive());
}

TEST(Blocks, IntransitiveThrows) {
  PermGroup g(4, {P("(1,2)", 4)});
  EXPECT_THROW(g.block_systems(), InvalidArgument);
}

TEST(Blocks, DoublyTransitiveIsPrimitive) {
  EXPECT_TRUE(PermGroup(5, {P("(1,2,3,4,5)", 5), P("(1,2,3)", 5)}).is_primitive());
  EXPECT_TRUE(PermGroup(7, {P("(1,2,3,4,5,6,7)", 7), P("(1,2)", 7)}).is_primitive());
}

TEST(Blocks, CoprimeLongCycleForcesPrimitivity) {
  // Any transitive group of degree <= 12 with an m-cycle, gcd(m,n)=1, m > n/2.
  std::mt19937_64 rng(22);
  int tested = 0;
  for (int trial = 0; trial < 3000 && tested < 150; ++trial) {
    const std::size_t n = 4 + rng() % 9;
    const int m = static_cast<int>(n / 2 + 1 + rng() % (n - n / 2));
    if (std::gcd(m, static_cast<int>(n)) != 1) continue;
    auto c = test::random_conjugate(Permutation::cycle_range(n, 1, m), rng);
    std::vector<Permutation> gens{c, test::random_permutation(n, rng)};
    if (rng() % 2) gens.push_back(test::random_permutation(n, rng));
    if (!is_transitive(n, gens)) continue;
    ++tested;
    EXPECT_TRUE(PermGroup(n, gens).is_primitive());
  }
  EXPECT_GE(tested, 100);
}

TEST(Order, SmallExamples) {
  EXPECT_EQ(group_order(5, {P("(1,2,3,4,5)", 5), P("(3,4,5)", 5)}), 60);
  for (int n = 2; n <= 10; ++n) {
    auto sn = group_order(n, {P("(1,2)", n), Permutation::cycle_range(n, 1, n)});
    EXPECT_EQ(sn, factorial(n));
  }
  EXPECT_EQ(group_order(30, {P("(1,2)", 30), Permutation::cycle_range(30, 1, 30)}), factorial(30));
}

TEST(Order, A7TripleOfType357) {
  auto x = P("(1,2,3)", 7);
  auto y = P("(1,4,5,6,7)", 7);
  auto closure = test::naive_closure(7, {x, y});
  EXPECT_EQ(group_order(7, {x, y}), BigInt(closure.size()));
}

TEST(Order, MatchesNaiveClosure) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    std::vector<Permutation> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      // sparse generators keep the closure small enough to enumerate
      auto g = Permutation::identity(n);
      const int moves = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < moves && n >= 2; ++j) {
        const auto a = rng() % n, b = rng() % n;
        if (a == b) continue;
        std::vector<std::vector<int>> cyc{{static_cast<int>(a) + 1, static_cast<int>(b) + 1}};
        g = g * Permutation::from_cycles(n, cyc);
      }
      gens.push_back(g);
    }
    auto closure = test::naive_closure(n, gens);
    ASSERT_EQ(group_order(n, gens), BigInt(closure.size())) << trial;
    PermGroup G(n, gens);
    std::size_t members = 0;
    for (const auto& img : closure) members += G.contains(Permutation::from_images(img));
    EXPECT_EQ(members, closure.size());
  }
}

TEST(Order, IsDeterministic) {
  std::mt19937_64 rng(24);
  auto a = test::random_permutation(12, rng), b = test::random_permutation(12, rng);
  StabilizerChain c1(12, {a, b}), c2(12, {a, b});
  EXPECT_EQ(c1.base(), c2.base());
  EXPECT_EQ(c1.order(), c2.order());
}

TEST(Jordan, TwoCoprimeCycles) {
  auto h = P("(1,2,3,4)(5,6,7,8,9)", 9);
  PermGroup g(9, {h, P("(1,5)(2,6)", 9)});
  ASSERT_TRUE(g.is_transitive());
  auto certs = g.jordan_certificates();
  bool found = false;
  for (const auto& c : certs)
    found = found || (c.criterion == JordanCriterion::two_coprime_cycles && c.witness == h);
  EXPECT_TRUE(found);
  EXPECT_GE(g.order(), alternating_order(9));
}

TEST(Jordan, DoubleTranspositionInPrimitiveDegree9) {
  PermGroup g(9, {Permutation::cycle_range(9, 1, 9), P("(1,2)(3,4)", 9)});
  auto certs = g.jordan_certificates();
  bool found = false;
  for (const auto& c : certs) found = found || c.criterion == JordanCriterion::primitive_double_transposition;
  EXPECT_TRUE(found);
}

TEST(Jordan, IntransitiveGivesNothing) {
  EXPECT_TRUE(PermGroup(8, {P("(1,2,3,4)", 8)}).jordan_certificates().empty());
}

TEST(Jordan, CertificatesAreSound) {
  // Every fired criterion must agree with the exact order.
  std::mt19937_64 rng(25);
  int fired = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 5 + rng() % 8;
    std::vector<Permutation> gens{test::random_even(n, rng), test::random_even(n, rng)};
    if (rng() % 3 == 0) {
      // bias towards structured groups: a cycle plus a random element
      const int m = 2 + static_cast<int>(rng() % (n - 1));
      gens[0] = test::random_conjugate(Permutation::cycle_range(n, 1, m), rng);
      if (!gens[0].is_even()) gens[0] = gens[0] * gens[0];
    }
    PermGroup g(n, gens);
    auto certs = g.jordan_certificates();
    if (certs.empty()) continue;
    ++fired;
    EXPECT_GE(g.order(), alternating_order(static_cast<int>(n))) << criterion_name(certs[0].criterion);
  }
  EXPECT_GT(fired, 50);
}

TEST(Jordan, ShortCycleInPrimitiveGroupGivesAlternating) {
  std::mt19937_64 rng(26);
  int tested = 0;
  for (int trial = 0; trial < 2000 && tested < 150; ++trial) {
    const std::size_t n = 5 + rng() % 8;
    const int m = 2 + static_cast<int>(rng() % (n - 4));
    auto c = test::random_conjugate(Permutation::cycle_range(n, 1, m), rng);
    PermGroup g(n, {c, test::random_permutation(n, rng)});
    if (!g.is_primitive()) continue;
    ++tested;
    EXPECT_GE(g.order(), alternating_order(static_cast<int>(n)));
  }
  EXPECT_GE(tested, 100);
}

TEST(IsAlternating, Examples) {
  auto v = is_alternating({P("(1,2)(3,4)", 5), P("(1,4,2,3,5)", 5)}, 5);
  EXPECT_TRUE(v.value);
  EXPECT_FALSE(is_alternating({P("(1,2,3)", 5)}, 5).value);
  auto odd = is_alternating({P("(1,2)", 5), P("(1,2,3,4,5)", 5)}, 5);
  EXPECT_FALSE(odd.value);
  EXPECT_EQ(odd.proof, "odd-generator");

  // n = 13: x a 9-cycle, y four transpositions meeting supp(x)
  auto x = Permutation::cycle_range(13, 1, 9);
  auto y = P("(1,10)(2,11)(3,12)(4,13)", 13);
  auto r = is_alternating({x, y}, 13);
  EXPECT_TRUE(r.value);
  EXPECT_EQ(PermGroup(13, {x, y}).order(), alternating_order(13));
}

TEST(IsAlternating, AgreesWithOrder) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 5 + rng() % 9;
    std::vector<Permutation> gens{test::random_even(n, rng), test::random_even(n, rng)};
    if (rng() % 2) gens[1] = gens[1] * gens[1];
    PermGroup g(n, gens);
    EXPECT_EQ(g.is_alternating().value, g.order() == alternating_order(static_cast<int>(n)));
  }
}
