#pragma once

// Explicit generating triples of A_5 .. A_11 and the parametric families used
// for n >= 12. Every entry is built from (x, y), z is recomputed, and each
// claimed property is re-checked at construction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bvl/conjugacy.hpp"
#include "bvl/counting.hpp"
#include "bvl/group.hpp"
#include "bvl/numtheory.hpp"
#include "bvl/triple.hpp"

namespace bvl {

/// Which recipe an entry serves.
enum class CatalogRole {
  pair_first,    // first triple of the strongly distinguishing pair
  pair_second,   // second triple of that pair
  coprime,       // same-type triples with pairwise coprime periods
  square_first,  // the two coordinate triples of the first A_5^2 triple
  square_second,
  listed_only,   // kept for the record; superseded by a repaired entry
};

inline const char* role_name(CatalogRole r) {
  switch (r) {
    case CatalogRole::pair_first: return "pair-first";
    case CatalogRole::pair_second: return "pair-second";
    case CatalogRole::coprime: return "coprime";
    case CatalogRole::square_first: return "square-first";
    case CatalogRole::square_second: return "square-second";
    case CatalogRole::listed_only: return "listed-only";
  }
  return "?";
}

struct CatalogEntry {
  std::string label;
  CatalogRole role;
  GeneratingTriple triple;
  TripleType claimed;
  std::optional<Permutation> listed_z;
  bool generates = false;
  std::vector<std::string> diagnostics;  // empty iff every check passed
  std::vector<std::string> notes;        // informational, not failures

  bool ok() const { return diagnostics.empty(); }
};

namespace detail {

struct ListedTriple {
  const char* label;
  CatalogRole role;
  const char* x;
  const char* y;
  const char* z;  // nullptr if no z is listed
  TripleType claimed;
};

// x and y as listed; z is recomputed and the listed z only cross-checked.
inline const std::vector<ListedTriple>& listed_triples(int n) {
  using R = CatalogRole;
  static const std::map<int, std::vector<ListedTriple>> table = {
      {5,
       {
           {"A5 (2,5,5)", R::pair_first, "(1,2)(3,4)", "(1,4,2,3,5)", "(1,5,4,2,3)", {2, 5, 5}},
           {"A5 (3,3,5)", R::pair_second, "(1,2,3)", "(3,4,5)", "(1,3,5,4,2)", {3, 3, 5}},
           {"A5 (5,5,5)", R::square_first, "(1,2,3,4,5)", "(1,4,5,2,3)", "(1,2,4,5,3)", {5, 5, 5}},
           {"A5 (3,5,5)", R::square_second, "(1,2,4)", "(1,2,3,4,5)", "(1,5,2,4,3)", {3, 5, 5}},
       }},
      {6,
       {
           {"A6 (3,5,5)", R::pair_first, "(1,2,3)", "(1,3,4,5,6)", "(1,6,5,4,2)", {3, 5, 5}},
           {"A6 (4,4,5) as listed", R::listed_only, "(1,2,3,4)(5,6)", "(1,3)(2,5,4,6)", "(1,2,3,4,5)",
            {4, 4, 5}},
           {"A6 (4,4,5) repaired", R::pair_second, "(1,2,3,4)(5,6)", "(1,3)(2,5,6,4)", "(1,2,3,4,5)",
            {4, 4, 5}},
           // z = (a,b,c,d,e) = (1,2,3,4,5), f = 6, y = x^-1 z^-1
           {"A6 (3,4,5) x=(a,f,c)", R::coprime, "(1,6,3)", nullptr, "(1,2,3,4,5)", {3, 4, 5}},
           {"A6 (3,4,5) x=(a,f,e)", R::coprime, "(1,6,5)", nullptr, "(1,2,3,4,5)", {3, 4, 5}},
           {"A6 (3,4,5) x=(a,b,f)(c,d,e)", R::coprime, "(1,2,6)(3,4,5)", nullptr, "(1,2,3,4,5)",
            {3, 4, 5}},
           {"A6 (3,4,5) x=(a,f,d)(b,c,e)", R::coprime, "(1,6,4)(2,3,5)", nullptr, "(1,2,3,4,5)",
            {3, 4, 5}},
       }},
      {7,
       {
           {"A7 (3,5,7) first", R::pair_first, "(1,2,3)", "(3,4,5,6,7)", "(1,3,7,6,5,4,2)", {3, 5, 7}},
           {"A7 (3,5,7) second", R::coprime, "(1,2,3)(4,5,6)", "(1,6,7,3,4)", "(1,6,3,7,5,4,2)", {3, 5, 7}},
           {"A7 (4,7,7)", R::pair_second, "(1,2,3,4)(5,6)", "(1,5,2,4,6,7,3)", "(1,2,6,3,7,5,4)", {4, 7, 7}},
       }},
      {8,
       {
           {"A8 (4,5,7)", R::pair_first, "(1,2)(3,4,5,6)", "(1,4,3,7,8)", "(1,8,7,6,5,4,2)", {4, 5, 7}},
           {"A8 (3,7,7)", R::pair_second, "(1,2,3)", "(3,2,4,5,6,7,8)", "(1,3,8,7,6,5,4)", {3, 7, 7}},
           {"A8 (4,5,7) second", R::coprime, "(1,2)(3,4,5,6)", "(1,7,4,3,8)", "(1,8,6,5,4,7,2)", {4, 5, 7}},
       }},
      {9,
       {
           {"A9 (4,5,7)", R::pair_first, "(1,2,3,4)(5,6,7,8)", "(1,4,5,8,9)", "(1,9,7,6,5,3,2)", {4, 5, 7}},
           {"A9 (5,15,9)", R::pair_second, "(1,2,3,4,5)", "(1,2,5)(3,6,7,8,9)", "(1,4,3,9,8,7,6,2,5)",
            {5, 15, 9}},
           {"A9 (4,5,7) second", R::coprime, "(1,2,3,4)(5,6,7,8)", "(1,4,3,5,9)", "(1,9,8,7,6,5,2)",
            {4, 5, 7}},
       }},
      {10,
       {
           {"A10 (8,5,7)", R::pair_first, "(1,2,3,4,5,6,7,8)(9,10)", "(1,8,7,9,10)", "(1,9,6,5,4,3,2)",
            {8, 5, 7}},
           {"A10 (9,5,5)", R::pair_second, "(1,2,3,4,5,6,7,8,9)", "(1,3,5,7,10)",
            "(1,10,6,5,2)(3,9,8,7,4)", {9, 5, 5}},
           {"A10 (8,5,7) second", R::coprime, "(1,2,3,4,5,6,7,8)(9,10)", "(1,8,7,6,9)", "(1,10,9,5,4,3,2)",
            {8, 5, 7}},
       }},
      {11,
       {
           {"A11 (5,8,9)", R::pair_first, "(1,2,3,4,5)", "(2,11)(3,6,7,8,9,10,5,4)", "(1,5,10,9,8,7,6,2,4)",
            {5, 8, 9}},
           {"A11 (7,11,11)", R::pair_second, "(1,2,3,4,5,6,7)", "(1,6,7,2,4,5,8,9,10,11,3)",
            "(1,2,6,7,5,3,11,10,9,8,4)", {7, 11, 11}},
           {"A11 (11,3,8) y=(1,4,2)", R::coprime, "(1,2,3,4,5,6,7,8,9,10,11)", "(1,4,2)", nullptr, {11, 3, 8}},
           {"A11 (11,3,8) y=(1,10,2)", R::coprime, "(1,2,3,4,5,6,7,8,9,10,11)", "(1,10,2)", nullptr, {11, 3, 8}},
       }},
  };
  auto it = table.find(n);
  if (it == table.end()) throw InvalidArgument("catalog: n must lie in 5..11");
  return it->second;
}

inline CatalogEntry check_entry(int n, const ListedTriple& l) {
  const auto deg = static_cast<std::size_t>(n);
  const Permutation x = Permutation::parse(l.x, deg);
  std::optional<Permutation> listed_z;
  if (l.z) listed_z = Permutation::parse(l.z, deg);
  // Entries listed by x and z only: y is the unique solution of xyz = 1.
  const Permutation y = l.y ? Permutation::parse(l.y, deg) : (x.inverse() * listed_z->inverse());

  CatalogEntry e{l.label, l.role, GeneratingTriple::from_xy(x, y, std::string("catalog:") + l.label),
                 l.claimed, listed_z, false, {}, {}};
  const auto& t = e.triple;
  if (!x.is_even() || !y.is_even()) e.diagnostics.push_back("odd element");
  if (t.type() != l.claimed)
    e.diagnostics.push_back("type mismatch: claimed " + to_string(l.claimed) + ", computed " +
                            to_string(t.type()) + " (z = " + t.z.to_cycle_string() + ")");
  if (listed_z) {
    if (listed_z->cycle_type() != t.z.cycle_type())
      e.diagnostics.push_back("listed z " + listed_z->to_cycle_string() + " has cycle type " +
                              listed_z->cycle_type().to_string() + ", recomputed z " +
                              t.z.to_cycle_string() + " has " + t.z.cycle_type().to_string());
    else if (*listed_z != t.z)
      e.notes.push_back("listed z " + listed_z->to_cycle_string() + " differs from recomputed z " +
                        t.z.to_cycle_string() + " (same cycle type)");
  }
  if (x.is_even() && y.is_even()) {
    PermGroup g(deg, {x, y});
    const auto v = g.is_alternating();
    e.generates = v.value;
    e.triple.proof = v.proof;
    if (!v.value)
      e.diagnostics.push_back("does not generate A" + std::to_string(n) + ": <x,y> has order " +
                              g.order().str());
  }
  return e;
}

}  // namespace detail

/// Every listed triple of degree n (5 <= n <= 11), checked.
inline std::vector<CatalogEntry> catalog_small(int n) {
  std::vector<CatalogEntry> out;
  for (const auto& l : detail::listed_triples(n)) out.push_back(detail::check_entry(n, l));
  return out;
}

inline std::vector<GeneratingTriple> catalog_role(int n, CatalogRole role) {
  std::vector<GeneratingTriple> out;
  for (auto& e : catalog_small(n))
    if (e.role == role) {
      if (!e.ok()) throw VerificationFailure("catalog entry " + e.label + ": " + e.diagnostics.front());
      out.push_back(std::move(e.triple));
    }
  return out;
}

/// The strongly distinguishing pair for degree n.
inline std::pair<GeneratingTriple, GeneratingTriple> catalog_pair(int n) {
  return {catalog_role(n, CatalogRole::pair_first).at(0), catalog_role(n, CatalogRole::pair_second).at(0)};
}

/// Pairwise inequivalent same-type triples with coprime periods, for n in 6..11.
inline std::vector<GeneratingTriple> catalog_coprime(int n) {
  std::vector<GeneratingTriple> candidates;
  if (n >= 7 && n <= 10) candidates.push_back(catalog_pair(n).first);
  for (auto& t : catalog_role(n, CatalogRole::coprime)) candidates.push_back(std::move(t));
  std::vector<GeneratingTriple> out;
  std::set<std::vector<point_t>> keys;
  for (auto& t : candidates)
    if (keys.insert(aut_class_key(t)).second) out.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------------------
// The coprime-period family for n >= 12.

struct LongCycleParams {
  std::vector<int> points;  // odd n: {s,t,u,v}; even n: {s,t,u,v} with s+1 implied
};

/// Odd n: x = (1..n-4), y = (s,n-3)(t,n-2)(u,n-1)(v,n), type (n-4, 2, n).
/// Even n: x = (1..n-3), y = (s,s+1)(t,n-2)(u,n-1)(v,n), type (n-3, 2, n-1).
inline GeneratingTriple family_long_cycle(int n, const LongCycleParams& params) {
  if (n < 12) throw InvalidArgument("family_long_cycle: n >= 12 required");
  const auto deg = static_cast<std::size_t>(n);
  const auto& pt = params.points;
  if (pt.size() != 4) throw InvalidArgument("family_long_cycle: four parameters required");
  std::set<int> used;
  Permutation x, y;
  std::string tag = "long-cycle:" + std::to_string(n) + ":";
  if (n % 2 == 1) {
    for (int v : pt)
      if (v < 1 || v > n - 4 || !used.insert(v).second)
        throw InvalidArgument("family_long_cycle: need four distinct points in 1..n-4");
    x = Permutation::cycle_range(deg, 1, n - 4);
    y = Permutation::from_cycles(deg, {{pt[0], n - 3}, {pt[1], n - 2}, {pt[2], n - 1}, {pt[3], n}});
    tag += "odd:{";
  } else {
    const std::vector<int> all{pt[0], pt[0] + 1, pt[1], pt[2], pt[3]};
    for (int v : all)
      if (v < 1 || v > n - 3 || !used.insert(v).second)
        throw InvalidArgument("family_long_cycle: need s, s+1, t, u, v distinct in 1..n-3");
    x = Permutation::cycle_range(deg, 1, n - 3);
    y = Permutation::from_cycles(deg, {{pt[0], pt[0] + 1}, {pt[1], n - 2}, {pt[2], n - 1}, {pt[3], n}});
    tag += "even:{";
  }
  for (std::size_t i = 0; i < 4; ++i) tag += (i ? "," : "") + std::to_string(pt[i]);
  tag += "}";

  auto t = GeneratingTriple::from_xy(std::move(x), std::move(y), tag);
  const TripleType want = n % 2 ? TripleType{static_cast<std::uint64_t>(n - 4), 2, static_cast<std::uint64_t>(n)}
                                : TripleType{static_cast<std::uint64_t>(n - 3), 2, static_cast<std::uint64_t>(n - 1)};
  if (t.type() != want) throw VerificationFailure(tag + ": type " + to_string(t.type()));
  const auto v = is_alternating({t.x, t.y}, deg);
  if (!v.value) throw VerificationFailure(tag + ": does not generate");
  t.proof = v.proof;
  return t;
}

/// Parameters, one per equivalence class: odd n takes the least shift of each
/// Z_{n-4}-orbit of 4-subsets; even n takes s = 1 and t < u < v in 3..n-3.
inline std::vector<LongCycleParams> family_long_cycle_parameters(int n) {
  if (n < 12) throw InvalidArgument("family_long_cycle: n >= 12 required");
  std::vector<LongCycleParams> out;
  if (n % 2 == 1) {
    const int m = n - 4;
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b)
        for (int c = b + 1; c <= m; ++c)
          for (int d = c + 1; d <= m; ++d) {
            const std::vector<int> set{a, b, c, d};
            bool least = true;
            for (int shift = 1; shift < m && least; ++shift) {
              std::vector<int> s2;
              for (int v : set) s2.push_back((v - 1 + shift) % m + 1);
              std::sort(s2.begin(), s2.end());
              least = !(s2 < set);
            }
            if (least) out.push_back({set});
          }
  } else {
    for (int t = 3; t <= n - 3; ++t)
      for (int u = t + 1; u <= n - 3; ++u)
        for (int v = u + 1; v <= n - 3; ++v) out.push_back({{1, t, u, v}});
  }
  return out;
}

inline std::vector<GeneratingTriple> family_long_cycle_representatives(int n) {
  std::vector<GeneratingTriple> out;
  for (const auto& p : family_long_cycle_parameters(n)) out.push_back(family_long_cycle(n, p));
  return out;
}

/// The six triples obtained from t by rotation and inverse-reversal.
inline std::vector<GeneratingTriple> six_expansions(const GeneratingTriple& t) {
  const auto r1 = t.rotated(), r2 = r1.rotated();
  const auto i0 = t.inverse_reversed(), i1 = i0.rotated(), i2 = i1.rotated();
  return {t, r1, r2, i0, i1, i2};
}

// ---------------------------------------------------------------------------
// T_p: a triple with a p-full element.

inline int count_p_full(const GeneratingTriple& t, int n, std::uint64_t p) {
  const std::uint64_t full = exponent_p_part(n, p);
  int c = 0;
  for (int i = 0; i < 3; ++i) c += t.at(i).order() % full == 0;
  return c;
}

/// The two coprime cycle lengths m +- 1 (m even) or m +- 2 (m odd), m = n/2.
inline std::pair<int, int> coprime_cycle_lengths(int n) {
  const int m = n / 2;
  return m % 2 == 0 ? std::pair{m - 1, m + 1} : std::pair{m - 2, m + 2};
}

inline constexpr int kPlacementAttempts = 5000;

inline GeneratingTriple family_Tp(int n, int p, std::uint64_t seed = 0) {
  if (n < 12) throw InvalidArgument("family_Tp: n >= 12 required");
  if (p > n || !is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("family_Tp: p must be a prime <= n");
  const auto deg = static_cast<std::size_t>(n);
  const auto pe = static_cast<int>(exponent_p_part(n, static_cast<std::uint64_t>(p)));

  Permutation x;
  std::vector<std::vector<int>> x_cycles;
  {
    std::vector<int> c(static_cast<std::size_t>(pe));
    std::iota(c.begin(), c.end(), 1);
    x_cycles.push_back(c);
    if (p == 2) x_cycles.push_back({pe + 1, pe + 2});
    x = Permutation::from_cycles(deg, x_cycles);
  }
  const int supp = p == 2 ? pe + 2 : pe;
  const auto [c, d] = coprime_cycle_lengths(n);
  const int fixed = n % 2;  // odd n: y fixes one point

  std::vector<int> inside(static_cast<std::size_t>(supp)), outside;
  std::iota(inside.begin(), inside.end(), 1);
  for (int v = supp + 1; v <= n; ++v) outside.push_back(v);

  // Attempt 0 interleaves points of supp(x) with the rest; later attempts
  // are seeded shuffles.
  std::vector<int> order;
  for (std::size_t i = 0; i < inside.size() || i < outside.size(); ++i) {
    if (i < inside.size()) order.push_back(inside[i]);
    if (i < outside.size()) order.push_back(outside[i]);
  }
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n) * 1000 +
                      static_cast<std::uint64_t>(p));

  auto cycle_of = [&](int v) { return v <= pe ? 0 : 1; };
  for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
    if (attempt > 0)
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    std::vector<int> fixed_pt(order.begin(), order.begin() + fixed);
    std::vector<int> c1(order.begin() + fixed, order.begin() + fixed + c);
    std::vector<int> c2(order.begin() + fixed + c, order.end());
    auto meets = [&](const std::vector<int>& pts) {
      return std::any_of(pts.begin(), pts.end(), [&](int v) { return v <= supp; });
    };
    if (!meets(c1) || !meets(c2) || (fixed && !meets(fixed_pt))) continue;
    if (p == 2) {
      // some cycle of x meets both cycles of y
      bool ok = false;
      for (int xc = 0; xc < 2 && !ok; ++xc) {
        auto hit = [&](const std::vector<int>& pts) {
          return std::any_of(pts.begin(), pts.end(), [&](int v) { return v <= supp && cycle_of(v) == xc; });
        };
        ok = hit(c1) && hit(c2);
      }
      if (!ok) continue;
    }
    if (fixed) {
      // all three cycles of y meet one cycle of x
      bool ok = false;
      for (int xc = 0; xc < (p == 2 ? 2 : 1) && !ok; ++xc) {
        auto hit = [&](const std::vector<int>& pts) {
          return std::any_of(pts.begin(), pts.end(), [&](int v) { return v <= supp && cycle_of(v) == xc; });
        };
        ok = hit(c1) && hit(c2) && hit(fixed_pt);
      }
      if (!ok) continue;
    }
    Permutation y = Permutation::from_cycles(deg, {c1, c2});
    auto t = GeneratingTriple::from_xy(x, y);
    if (t.z.cycle_type().nontrivial().size() < 2) continue;
    const auto v = is_alternating({t.x, t.y}, deg);
    if (!v.value) continue;
    if (count_p_full(t, n, static_cast<std::uint64_t>(p)) < 1) continue;
    t.proof = v.proof;
    t.provenance = "Tp:" + std::to_string(n) + ":" + std::to_string(p) + ":attempt=" + std::to_string(attempt) +
                   ":seed=" + std::to_string(seed) + ":y=" + y.to_cycle_string();
    return t;
  }
  throw PoolExhausted("family_Tp(" + std::to_string(n) + "," + std::to_string(p) + "): no placement in " +
                      std::to_string(kPlacementAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// T'_p: a triple with no p-full element.

namespace detail {

inline int prev_prime(int p) {
  for (int q = p - 1; q >= 2; --q)
    if (is_prime(static_cast<std::uint64_t>(q))) return q;
  return 0;
}

/// c_3 (and c_4) joining the points q+1..n to 3 (and 4).
inline std::vector<std::vector<int>> joining_cycles(int n, int q, bool two) {
  if (!two) {
    std::vector<int> c{3};
    for (int v = q + 1; v <= n; ++v) c.push_back(v);
    return {c};
  }
  std::vector<int> c4{4};
  for (int v = q + 2; v <= n; ++v) c4.push_back(v);
  return {{3, q + 1}, c4};
}

}  // namespace detail

inline GeneratingTriple family_Tp_prime(int n, int p) {
  if (n < 12) throw InvalidArgument("family_Tp_prime: n >= 12 required");
  if (p > n || !is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidArgument("family_Tp_prime: p must be a prime <= n");
  const auto deg = static_cast<std::size_t>(n);
  std::vector<std::vector<int>> yc;
  Permutation x;
  std::string branch;

  auto range = [](int a, int b) {
    std::vector<int> c;
    for (int v = a; v <= b; ++v) c.push_back(v);
    return c;
  };

  if (p >= 7) {
    const int q = detail::prev_prime(p);
    x = Permutation::cycle_range(deg, 1, q);
    bool four = (n - q + 1) % p == 0;
    if (n % 2 == 0) {
      if (n % p == 1) {
        yc.push_back({2, q});
        branch = "even,n=1(p)";
      } else {
        yc.push_back({1, 2});
        branch = four ? "even,r=4" : "even,r=3";
      }
    } else {
      four = four || q == n - 2;
      if (n % p == 2) {
        yc.push_back({1, 2, q});
        branch = "odd,n=2(p)";
      } else {
        yc.push_back({1, q, 2});
        branch = four ? "odd,r=4" : "odd,r=3";
      }
    }
    for (auto& c : detail::joining_cycles(n, q, four)) yc.push_back(std::move(c));
    branch = "q=" + std::to_string(q) + "," + branch;
  } else if (p == 5) {
    const int q = 7;
    x = Permutation::cycle_range(deg, 1, q);
    const bool four = (n - 6) % 5 == 0;
    if (n % 2 == 0) {
      yc.push_back(n % 5 == 3 ? std::vector<int>{2, 5} : std::vector<int>{2, 6});
      branch = n % 5 == 3 ? "even,(2,5)" : "even,(2,6)";
    } else {
      yc.push_back({1, 2});
      yc.push_back(n % 5 == 2 ? std::vector<int>{5, 7} : std::vector<int>{6, 7});
      branch = n % 5 == 2 ? "odd,(1,2)(5,7)" : "odd,(1,2)(6,7)";
    }
    for (auto& c : detail::joining_cycles(n, q, four)) yc.push_back(std::move(c));
    branch += four ? ",r=4" : ",r=3";
  } else if (p == 3) {
    if (n % 2 == 1 && n % 9 != 0) {
      x = Permutation::cycle_range(deg, 1, n);
      yc = {{1, 2, 3}};
      branch = "odd,n!=0(9)";
    } else if (n % 2 == 1) {
      x = Permutation::from_cycles(deg, {range(1, n - 4), {n - 3, n - 2, n - 1}});
      yc = {{1, 3, 2}, {n - 4, n - 3, n}};
      branch = "odd,n=0(9)";
    } else if (n % 9 != 1) {
      x = Permutation::cycle_range(deg, 1, n - 1);
      yc = {{1, n, 2}};
      branch = "even,n!=1(9)";
    } else {
      x = Permutation::cycle_range(deg, 1, n - 3);
      yc = {{1, n, 2}, {3, 5, 4}, {n - 3, n - 2, n - 1}};
      branch = "even,n=1(9)";
    }
  } else {  // p == 2
    if (n % 2 == 1) {
      x = Permutation::cycle_range(deg, 1, n - 2);
      yc = {{n - 3, n - 1}, {n - 2, n}};
      branch = "odd";
    } else {
      x = Permutation::cycle_range(deg, 1, n - 1);
      yc = {{1, 2}, {n - 1, n}};
      branch = "even";
    }
  }

  Permutation y = Permutation::from_cycles(deg, yc);
  const std::string tag = "Tp':" + std::to_string(n) + ":" + std::to_string(p) + ":" + branch;
  auto t = GeneratingTriple::from_xy(std::move(x), std::move(y), tag);
  if (!t.x.is_even() || !t.y.is_even()) throw VerificationFailure(tag + ": odd element");
  const auto v = is_alternating({t.x, t.y}, deg);
  if (!v.value) throw VerificationFailure(tag + ": does not generate");
  if (count_p_full(t, n, static_cast<std::uint64_t>(p)) != 0) throw VerificationFailure(tag + ": has a p-full element");
  if (p <= 3) {
    const int p2 = p * p;
    for (int i = 0; i < 3; ++i)
      for (int len : t.at(i).cycle_type().parts)
        if (len % p2 == 0) throw VerificationFailure(tag + ": cycle length divisible by p^2");
  }
  t.proof = v.proof;
  return t;
}

// ---------------------------------------------------------------------------
// Supply of further pairwise inequivalent generating triples.

namespace detail {

inline const std::vector<GeneratingTriple>& cached_class_representatives(int n) {
  static std::map<int, std::vector<GeneratingTriple>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, class_representatives(n)).first;
  return it->second;
}

inline Permutation random_even_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  auto p = Permutation::from_images(std::move(img));
  if (!p.is_even()) p = p * Permutation::from_cycles(n, {{1, 2}});
  return p;
}

}  // namespace detail

/// `count` generating triples of A_n, pairwise inequivalent and inequivalent
/// to every exclusion. Sources in order: class representatives (n <= 7), the
/// six expansions of the coprime-period family (n >= 12), then a seeded
/// random search (n >= 8).
inline std::vector<GeneratingTriple> pool_inequivalent(int n, std::size_t count,
                                                       const std::vector<GeneratingTriple>& exclusions,
                                                       std::uint64_t seed = 0) {
  std::vector<GeneratingTriple> out;
  if (count == 0) return out;
  std::set<std::vector<point_t>> keys;
  for (const auto& e : exclusions) keys.insert(aut_class_key(e));

  auto offer = [&](const GeneratingTriple& t) {
    if (out.size() < count && keys.insert(aut_class_key(t)).second) out.push_back(t);
    return out.size() == count;
  };

  if (n <= 7) {
    for (const auto& t : detail::cached_class_representatives(n))
      if (offer(t)) return out;
    throw PoolExhausted("pool: A" + std::to_string(n) + " has only " + std::to_string(out.size()) +
                        " further classes, " + std::to_string(count) + " requested");
  }
  if (n >= 12) {
    for (const auto& rep : family_long_cycle_representatives(n))
      for (const auto& t : six_expansions(rep))
        if (offer(t)) return out;
  }
  std::mt19937_64 rng(seed ^ (0xA5A5A5A5ULL * static_cast<std::uint64_t>(n)));
  const std::size_t budget = 200 * count + 10000;
  const auto deg = static_cast<std::size_t>(n);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    auto x = detail::random_even_permutation(deg, rng);
    auto y = detail::random_even_permutation(deg, rng);
    if (!is_transitive(deg, {x, y})) continue;
    const auto v = is_alternating({x, y}, deg);
    if (!v.value) continue;
    auto t = GeneratingTriple::from_xy(std::move(x), std::move(y),
                                       "random:" + std::to_string(n) + ":seed=" + std::to_string(seed) +
                                           ":draw=" + std::to_string(attempt));
    t.proof = v.proof;
    if (offer(t)) return out;
  }
  throw PoolExhausted("pool: random search for A" + std::to_string(n) + " found only " +
                      std::to_string(out.size()) + " of " + std::to_string(count));
}

}  // namespace bvl
