#pragma once

// Beauville structures on A_n^k: product triples, the three conditions, the
// block assemblies and the exact verifier.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bvl/catalog.hpp"
#include "bvl/conjugacy.hpp"
#include "bvl/group.hpp"
#include "bvl/numtheory.hpp"
#include "bvl/triple.hpp"

namespace bvl {

using ProductType = std::array<wide_t, 3>;

inline std::string to_string(const ProductType& t) {
  return "(" + to_string(t[0]) + "," + to_string(t[1]) + "," + to_string(t[2]) + ")";
}

struct ProductElement {
  std::vector<Permutation> components;

  std::size_t k() const { return components.size(); }
  wide_t order() const {
    wide_t o = 1;
    for (const auto& c : components) o = wide_lcm(o, c.order());
    return o;
  }
  ProductElement pow(wide_t e) const {
    ProductElement out;
    out.components.reserve(components.size());
    for (const auto& c : components)
      out.components.push_back(c.pow(static_cast<long long>(e % c.order())));
    return out;
  }
  ProductElement operator*(const ProductElement& o) const {
    if (o.k() != k()) throw DegreeMismatch("product elements of different length");
    ProductElement out;
    for (std::size_t j = 0; j < k(); ++j) out.components.push_back(components[j] * o.components[j]);
    return out;
  }
  bool is_identity() const {
    for (const auto& c : components)
      if (!c.is_identity()) return false;
    return true;
  }
  bool operator==(const ProductElement&) const = default;
};

/// Conjugacy in A_n^k, decided coordinatewise.
inline bool conjugate_in_product(const ProductElement& g, const ProductElement& h) {
  if (g.k() != h.k()) return false;
  for (std::size_t j = 0; j < g.k(); ++j)
    if (!conjugate_in_an(g.components[j], h.components[j])) return false;
  return true;
}

/// (a, b, c) with coordinate j equal to the j-th generating triple.
struct ProductTriple {
  std::vector<GeneratingTriple> coords;

  std::size_t k() const { return coords.size(); }
  int degree() const { return coords.empty() ? 0 : static_cast<int>(coords.front().degree()); }
  ProductElement element(int i) const {
    ProductElement e;
    for (const auto& t : coords) e.components.push_back(t.at(i));
    return e;
  }
  ProductElement a() const { return element(0); }
  ProductElement b() const { return element(1); }
  ProductElement c() const { return element(2); }
  ProductType type() const { return {a().order(), b().order(), c().order()}; }
};

// ---------------------------------------------------------------------------

inline BigInt to_big(wide_t v) {
  return (BigInt(static_cast<std::uint64_t>(v >> 64)) << 64) | static_cast<std::uint64_t>(v);
}

/// 1/l + 1/m + 1/n < 1.
inline bool is_hyperbolic(const ProductType& t) {
  const BigInt l = to_big(t[0]), m = to_big(t[1]), n = to_big(t[2]);
  return m * n + l * n + l * m < l * m * n;
}
inline bool is_hyperbolic(const TripleType& t) { return is_hyperbolic(ProductType{t[0], t[1], t[2]}); }

/// 1 + (|G|/2)(1 - 1/l - 1/m - 1/n); throws if not an integer.
inline BigInt genus(const BigInt& group_order, const ProductType& t) {
  const BigInt l = to_big(t[0]), m = to_big(t[1]), n = to_big(t[2]);
  const BigInt num = group_order * (l * m * n - m * n - l * n - l * m);
  const BigInt den = 2 * l * m * n;
  if (num % den != 0) throw VerificationFailure("genus is not an integer");
  return 1 + num / den;
}

inline BigInt product_group_order(int n, std::size_t k) {
  BigInt o = 1;
  const BigInt h = alternating_order(n);
  for (std::size_t i = 0; i < k; ++i) o *= h;
  return o;
}

// ---------------------------------------------------------------------------

struct ProfileData {
  std::vector<int> exponents;       // exponent of p in the order of each coordinate
  std::vector<std::size_t> summit;  // 1-based coordinates attaining the nonzero maximum
};

inline ProfileData profile(const ProductElement& g, std::uint64_t p) {
  ProfileData d;
  int top = 0;
  for (const auto& c : g.components) {
    d.exponents.push_back(p_valuation(c.order(), p));
    top = std::max(top, d.exponents.back());
  }
  if (top > 0)
    for (std::size_t j = 0; j < d.exponents.size(); ++j)
      if (d.exponents[j] == top) d.summit.push_back(j + 1);
  return d;
}

/// Number of p-full elements of t: orders divisible by the p-part of exp(A_n).
inline int nu_p(const GeneratingTriple& t, std::uint64_t p, int n) { return count_p_full(t, n, p); }

inline bool is_p_distinguishing(const GeneratingTriple& t1, const GeneratingTriple& t2, std::uint64_t p, int n) {
  return nu_p(t1, p, n) != nu_p(t2, p, n);
}

/// Distinguishing, and whichever triple has no p-full element either lives in
/// a group with p^2 not dividing the exponent or has periods prime to p.
inline bool is_strongly_p_distinguishing(const GeneratingTriple& t1, const GeneratingTriple& t2, std::uint64_t p,
                                         int n) {
  if (!is_p_distinguishing(t1, t2, p, n)) return false;
  const bool p2_divides_exp = exponent_p_part(n, p) % (p * p) == 0;
  for (const auto* t : {&t1, &t2}) {
    if (nu_p(*t, p, n) != 0 || !p2_divides_exp) continue;
    for (auto period : t->type())
      if (period % p == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generation of A_n^k.

struct GoursatCheck {
  std::size_t i = 0, j = 0;  // 0-based coordinates
  BigInt order;
  bool full = false;  // order == |A_n|^2
};

struct GenerationReport {
  bool value = false;
  std::vector<std::string> coordinate_proofs;
  std::size_t pairs_separated_by_invariants = 0;
  std::size_t pairs_separated_by_search = 0;
  std::vector<std::pair<std::size_t, std::size_t>> equivalent_pairs;
  std::vector<GoursatCheck> goursat;
  std::string failure;
};

namespace detail {

/// Aut A_n-invariant of a triple: element orders, plus cycle types for n != 6
/// (the exceptional automorphism of A_6 moves cycle types).
inline std::vector<std::vector<int>> triple_invariant(const GeneratingTriple& t) {
  std::vector<std::vector<int>> inv;
  for (int i = 0; i < 3; ++i) {
    if (t.degree() == 6)
      inv.push_back({static_cast<int>(t.at(i).order())});
    else
      inv.push_back(t.at(i).cycle_type().parts);
  }
  return inv;
}

inline BigInt pair_subgroup_order(const GeneratingTriple& s, const GeneratingTriple& t) {
  const std::size_t n = s.degree();
  auto glue = [n](const Permutation& u, const Permutation& v) {
    std::vector<point_t> img(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = u[i];
      img[n + i] = static_cast<point_t>(n + v[i]);
    }
    return Permutation::from_images(std::move(img));
  };
  return group_order(2 * n, {glue(s.x, t.x), glue(s.y, t.y)});
}

}  // namespace detail

inline constexpr std::size_t kGoursatSamples = 3;

/// Whether the k coordinate triples generate A_n^k: each generates A_n and
/// they are pairwise inequivalent under Aut A_n.
inline GenerationReport generates_product(const std::vector<GeneratingTriple>& coords, int n) {
  GenerationReport r;
  const auto deg = static_cast<std::size_t>(n);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const auto& t = coords[j];
    if (t.degree() != deg) throw DegreeMismatch("coordinate triple of wrong degree");
    if (!t.is_product_identity()) {
      r.failure = "coordinate " + std::to_string(j + 1) + ": xyz != 1";
      return r;
    }
    const auto v = is_alternating({t.x, t.y}, deg);
    if (!v.value) {
      r.failure = "coordinate " + std::to_string(j + 1) + " does not generate A" + std::to_string(n);
      return r;
    }
    r.coordinate_proofs.push_back(v.proof);
  }

  std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets;
  for (std::size_t j = 0; j < coords.size(); ++j) buckets[detail::triple_invariant(coords[j])].push_back(j);
  std::size_t same_bucket = 0;
  for (const auto& [inv, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        ++same_bucket;
        if (triple_equivalent(coords[members[a]], coords[members[b]]))
          r.equivalent_pairs.emplace_back(members[a], members[b]);
        else
          ++r.pairs_separated_by_search;
      }
  }
  const std::size_t k = coords.size();
  r.pairs_separated_by_invariants = k * (k - 1) / 2 - same_bucket;

  if (!r.equivalent_pairs.empty()) {
    const auto [i, j] = r.equivalent_pairs.front();
    r.failure = "coordinates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are equivalent";
  }

  // Independent cross-check on a few pairs: inequivalent pairs of generating
  // triples of a simple group generate the full direct square.
  std::vector<std::pair<std::size_t, std::size_t>> sample;
  if (k >= 2) sample = {{0, 1}, {k - 2, k - 1}, {0, k - 1}};
  const BigInt h2 = alternating_order(n) * alternating_order(n);
  for (const auto& [i, j] : sample) {
    if (r.goursat.size() == kGoursatSamples) break;
    bool seen = false;
    for (const auto& g : r.goursat) seen = seen || (g.i == i && g.j == j);
    if (seen || i == j) continue;
    GoursatCheck g{i, j, detail::pair_subgroup_order(coords[i], coords[j]), false};
    g.full = g.order == h2;
    const bool judged_equivalent =
        std::find(r.equivalent_pairs.begin(), r.equivalent_pairs.end(), std::pair{i, j}) != r.equivalent_pairs.end();
    if (g.full == judged_equivalent && r.failure.empty())
      r.failure = "pair-subgroup order disagrees with the equivalence test on coordinates " +
                  std::to_string(i + 1) + "," + std::to_string(j + 1);
    r.goursat.push_back(std::move(g));
  }
  r.value = r.failure.empty();
  return r;
}

// ---------------------------------------------------------------------------
// Condition (3): no non-identity power of a_1, b_1, c_1 is conjugate to a
// power of a_2, b_2, c_2. It suffices to compare elements of prime order.

struct Condition3Check {
  int e1 = 0, e2 = 0;  // 0,1,2 for a,b,c
  std::uint64_t p = 0;
  std::vector<bool> conjugate;  // index m-1 for m = 1..p-1
};

struct Condition3Report {
  bool holds = true;
  std::vector<Condition3Check> checks;
};

inline Condition3Report condition3_exact(const ProductTriple& s1, const ProductTriple& s2) {
  Condition3Report r;
  for (int e1 = 0; e1 < 3; ++e1) {
    const auto d1 = s1.element(e1);
    const wide_t o1 = d1.order();
    for (int e2 = 0; e2 < 3; ++e2) {
      const auto d2 = s2.element(e2);
      const wide_t o2 = d2.order();
      for (auto p : prime_divisors(o1)) {
        if (o2 % p != 0) continue;
        Condition3Check c{e1, e2, p, {}};
        const auto u = d1.pow(o1 / p);
        for (std::uint64_t m = 1; m < p; ++m) {
          const bool conj = conjugate_in_product(u, d2.pow(static_cast<wide_t>(m) * (o2 / p)));
          c.conjugate.push_back(conj);
          if (conj) r.holds = false;
        }
        r.checks.push_back(std::move(c));
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

struct VerificationReport {
  std::array<GenerationReport, 2> generation;
  std::array<ProductType, 2> types{};
  std::array<bool, 2> hyperbolic{};
  std::array<BigInt, 2> genus;
  Condition3Report condition3;

  bool condition1() const { return generation[0].value && generation[1].value; }
  bool condition2() const { return hyperbolic[0] && hyperbolic[1]; }
  bool ok() const { return condition1() && condition2() && condition3.holds; }
  /// Name of the first failing condition, or "".
  std::string failure() const {
    for (int i = 0; i < 2; ++i)
      if (!generation[i].value) return "condition 1 (triple " + std::to_string(i + 1) + "): " + generation[i].failure;
    for (int i = 0; i < 2; ++i)
      if (!hyperbolic[i]) return "condition 2: type " + to_string(types[i]) + " is not hyperbolic";
    if (!condition3.holds) return "condition 3: a non-identity power is conjugate across the triples";
    return "";
  }
};

inline VerificationReport verify_pair(const ProductTriple& s1, const ProductTriple& s2) {
  if (s1.k() != s2.k() || s1.k() == 0 || s1.degree() != s2.degree())
    throw InvalidArgument("verify: product triples of different shape");
  const int n = s1.degree();
  VerificationReport r;
  const ProductTriple* s[2] = {&s1, &s2};
  for (int i = 0; i < 2; ++i) {
    r.generation[i] = generates_product(s[i]->coords, n);
    r.types[i] = s[i]->type();
    r.hyperbolic[i] = is_hyperbolic(r.types[i]);
    r.genus[i] = r.hyperbolic[i] ? genus(product_group_order(n, s1.k()), r.types[i]) : BigInt(0);
  }
  r.condition3 = condition3_exact(s1, s2);
  return r;
}

struct BeauvilleStructure {
  int n = 0;
  std::size_t k = 0;
  std::array<ProductTriple, 2> triples;
  std::string recipe;
  std::vector<std::pair<std::string, std::string>> params;
  std::uint64_t seed = 0;
  VerificationReport report;
};

inline BeauvilleStructure certify(int n, std::array<ProductTriple, 2> t, std::string recipe,
                                  std::vector<std::pair<std::string, std::string>> params, std::uint64_t seed) {
  BeauvilleStructure s{n, t[0].k(), std::move(t), std::move(recipe), std::move(params), seed, {}};
  s.report = verify_pair(s.triples[0], s.triples[1]);
  if (!s.report.ok()) throw VerificationFailure(s.recipe + ": " + s.report.failure());
  return s;
}

// ---------------------------------------------------------------------------
// Assemblies.

using TriplePair = std::pair<GeneratingTriple, GeneratingTriple>;

namespace detail {

inline std::vector<GeneratingTriple> rotations(const GeneratingTriple& t) {
  auto r1 = t.rotated();
  auto r2 = r1.rotated();
  return {t, r1, r2};
}

inline const GeneratingTriple& side(const TriplePair& p, int i) { return i == 0 ? p.first : p.second; }

inline void require_degree(const GeneratingTriple& t, int n) {
  if (static_cast<int>(t.degree()) != n) throw DegreeMismatch("triple of degree " + std::to_string(t.degree()));
}

inline std::vector<std::pair<std::string, std::string>> pair_params(const std::vector<TriplePair>& pairs) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t s = 0; s < pairs.size(); ++s) {
    out.emplace_back("pair" + std::to_string(s + 1) + ".first", pairs[s].first.provenance);
    out.emplace_back("pair" + std::to_string(s + 1) + ".second", pairs[s].second.provenance);
  }
  return out;
}

}  // namespace detail

/// Blocks of cyclic rotations of the pair triples, one block per pair, then
/// further inequivalent triples chosen per side.
inline BeauvilleStructure assemble_rotation_blocks(const std::vector<TriplePair>& pairs, std::size_t k, int n,
                                           std::uint64_t seed = 0) {
  const std::size_t t = pairs.size();
  if (t == 0 || k < 3 * t) throw InvalidArgument("assemble_rotation_blocks: need 1 <= t and k >= 3t");
  for (const auto& pr : pairs) {
    detail::require_degree(pr.first, n);
    detail::require_degree(pr.second, n);
  }
  for (int p : primes_upto(n)) {
    bool covered = false;
    for (const auto& pr : pairs)
      covered = covered || is_strongly_p_distinguishing(pr.first, pr.second, static_cast<std::uint64_t>(p), n);
    if (!covered)
      throw InvalidArgument("assemble_rotation_blocks: no pair is strongly " + std::to_string(p) + "-distinguishing");
  }
  std::array<ProductTriple, 2> sides;
  for (int i = 0; i < 2; ++i) {
    for (const auto& pr : pairs)
      for (auto& r : detail::rotations(detail::side(pr, i))) sides[i].coords.push_back(std::move(r));
    auto pool = pool_inequivalent(n, k - 3 * t, sides[i].coords, seed);
    for (auto& g : pool) sides[i].coords.push_back(std::move(g));
  }
  auto params = detail::pair_params(pairs);
  params.emplace_back("t", std::to_string(t));
  return certify(n, std::move(sides), "rotation-blocks", std::move(params), seed);
}

/// Rotation blocks in coordinates 1..3t, the other side's blocks mirrored in
/// 3t+1..6t, then further inequivalent triples.
inline BeauvilleStructure assemble_mirrored_blocks(const std::vector<TriplePair>& pairs, std::size_t k, int n,
                                           std::uint64_t seed = 0) {
  const std::size_t t = pairs.size();
  if (t == 0 || k < 6 * t) throw InvalidArgument("assemble_mirrored_blocks: need 1 <= t and k >= 6t");
  for (int p : primes_upto(n)) {
    bool covered = false;
    for (const auto& pr : pairs)
      covered = covered || is_p_distinguishing(pr.first, pr.second, static_cast<std::uint64_t>(p), n);
    if (!covered) throw InvalidArgument("assemble_mirrored_blocks: no pair is " + std::to_string(p) + "-distinguishing");
  }
  std::array<std::vector<GeneratingTriple>, 2> blocks;
  for (int i = 0; i < 2; ++i)
    for (const auto& pr : pairs) {
      detail::require_degree(detail::side(pr, i), n);
      for (auto& r : detail::rotations(detail::side(pr, i))) blocks[i].push_back(std::move(r));
    }
  std::array<ProductTriple, 2> sides;
  for (int i = 0; i < 2; ++i) {
    sides[i].coords = blocks[i];
    for (const auto& g : blocks[1 - i]) sides[i].coords.push_back(g);
    auto pool = pool_inequivalent(n, k - 6 * t, sides[i].coords, seed);
    for (auto& g : pool) sides[i].coords.push_back(std::move(g));
  }
  auto params = detail::pair_params(pairs);
  params.emplace_back("t", std::to_string(t));
  return certify(n, std::move(sides), "mirrored-blocks", std::move(params), seed);
}

/// r same-type triples with mutually coprime periods, expanded by rotation and
/// inverse-reversal. The sides agree in coordinate 1 and differ by a rotation
/// in coordinate 2. For k >= 3, coordinate 3 holds T_3 on side 1 and its
/// double rotation on side 2, so that for every prime each support block of
/// side 1 contains all or none of {1,2,3} while each block of side 2 meets it
/// in a proper nonempty subset; the remaining coordinates are arbitrary.
inline BeauvilleStructure assemble_coprime_expansion(const std::vector<GeneratingTriple>& triples, std::size_t k, int n) {
  const std::size_t r = triples.size();
  if (r < 2) throw InvalidArgument("assemble_coprime_expansion: need r >= 2");
  if (k < 2 || k > 6 * r) throw InvalidArgument("assemble_coprime_expansion: need 2 <= k <= 6r");
  if (k >= 3 && r < 3) throw InvalidArgument("assemble_coprime_expansion: k >= 3 needs r >= 3");
  const auto type = triples.front().type();
  if (std::gcd(type[0], type[1]) != 1 || std::gcd(type[0], type[2]) != 1 || std::gcd(type[1], type[2]) != 1)
    throw InvalidArgument("assemble_coprime_expansion: periods " + to_string(type) + " are not mutually coprime");
  for (const auto& t : triples) {
    detail::require_degree(t, n);
    if (t.type() != type) throw InvalidArgument("assemble_coprime_expansion: triples of different types");
  }

  std::vector<GeneratingTriple> expanded;
  for (const auto& t : triples)
    for (auto& e : six_expansions(t)) expanded.push_back(std::move(e));
  // expanded[6j + e]: e = 0 is T_{j+1}, e = 1, 2 its rotations
  std::array<std::vector<std::size_t>, 2> head{std::vector<std::size_t>{0, 6}, std::vector<std::size_t>{0, 7}};
  if (k >= 3) {
    head[0].push_back(12);
    head[1].push_back(14);
  }
  std::array<ProductTriple, 2> sides;
  for (int i = 0; i < 2; ++i) {
    for (auto h : head[i]) sides[i].coords.push_back(expanded[h]);
    for (std::size_t e = 0; e < expanded.size() && sides[i].k() < k; ++e)
      if (std::find(head[i].begin(), head[i].end(), e) == head[i].end()) sides[i].coords.push_back(expanded[e]);
  }
  std::vector<std::pair<std::string, std::string>> params{{"r", std::to_string(r)}};
  for (std::size_t j = 0; j < r && j < 3; ++j) params.emplace_back("T" + std::to_string(j + 1), triples[j].provenance);
  return certify(n, std::move(sides), "coprime-expansion", std::move(params), 0);
}

/// The explicit structure of type (15,5,5) on A_5^2.
inline BeauvilleStructure a5_squared() {
  const auto first = catalog_role(5, CatalogRole::square_first).at(0);
  const auto second = catalog_role(5, CatalogRole::square_second).at(0);
  const auto g = Permutation::parse("(4,5)", 5);
  auto conj = [&](const Permutation& u) { return conjugate(u, g); };
  GeneratingTriple moved{conj(first.x), conj(first.y), conj(first.z), first.provenance + "^(4,5)", first.proof};
  std::array<ProductTriple, 2> sides;
  sides[0].coords = {first, second};
  sides[1].coords = {second, moved};
  return certify(5, std::move(sides), "a5-squared", {{"g", "(4,5)"}}, 0);
}

// ---------------------------------------------------------------------------
// The A_5 obstruction: no two generating triples of A_5 satisfy condition (3).

struct A5Obstruction {
  std::size_t classes = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_passing = 0;
};

inline A5Obstruction no_beauville_a5() {
  const auto& reps = detail::cached_class_representatives(5);
  A5Obstruction o{reps.size(), 0, 0};
  for (const auto& s : reps)
    for (const auto& t : reps) {
      ++o.pairs_checked;
      if (condition3_exact(ProductTriple{{s}}, ProductTriple{{t}}).holds) ++o.pairs_passing;
    }
  return o;
}

// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultCap = 10000;

/// The feasibility cap on k: BVL_CAP if set, else the default.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("BVL_CAP")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

enum class BuildStatus { ok, no_structure, unsupported };

struct BuildResult {
  BuildStatus status = BuildStatus::ok;
  std::optional<BeauvilleStructure> structure;
  std::string note;
};

inline std::uint64_t coprime_family_bound(int n) {
  const auto m = static_cast<std::uint64_t>(n);
  return (m - 5) * (m - 6) * (m - 7) / 4;
}

inline constexpr int kBuildRetries = 4;

/// A verified Beauville structure on A_n^k following the recipe for (n, k).
inline BuildResult build_beauville(int n, std::size_t k, std::size_t cap = default_cap(), std::uint64_t seed = 0) {
  if (n < 5) throw InvalidArgument("build_beauville: n >= 5 required");
  if (k < 1) throw InvalidArgument("build_beauville: k >= 1 required");
  if (k > cap) throw CapExceeded("k = " + std::to_string(k) + " exceeds the cap " + std::to_string(cap));
  if (n == 5 && k > 19) throw CapExceeded("A_5^k is 2-generated only for k <= d2(A_5) = 19");
  if (n == 6 && k > 53) throw CapExceeded("A_6^k is 2-generated only for k <= d2(A_6) = 53");

  if (k == 1) {
    if (n == 5) {
      const auto o = no_beauville_a5();
      return {BuildStatus::no_structure, std::nullopt,
              "A5 is not a Beauville group: all " + std::to_string(o.pairs_checked) + " pairs of the " +
                  std::to_string(o.classes) + " generating-triple classes violate condition 3 (" +
                  std::to_string(o.pairs_passing) + " pass); every generating triple of A5 contains an element "
                  "of order 5 and all such elements are conjugate to powers of each other"};
    }
    return {BuildStatus::unsupported, std::nullopt, "k = 1 (a simple group) is outside this construction"};
  }

  auto attempt = [&](std::uint64_t s) -> BeauvilleStructure {
    if (n == 5 && k == 2) return a5_squared();
    if (n <= 11) {
      if (k == 2) return assemble_coprime_expansion(catalog_coprime(n), k, n);
      return assemble_rotation_blocks({catalog_pair(n)}, k, n, s);
    }
    if (k <= coprime_family_bound(n)) {
      const auto reps = family_long_cycle_representatives(n);
      const std::size_t r = std::min(reps.size(), std::max<std::size_t>(3, (k + 5) / 6 + 1));
      return assemble_coprime_expansion({reps.begin(), reps.begin() + static_cast<std::ptrdiff_t>(r)}, k, n);
    }
    std::vector<TriplePair> pairs;
    for (int p : primes_upto(n)) pairs.emplace_back(family_Tp(n, p, s), family_Tp_prime(n, p));
    return assemble_mirrored_blocks(pairs, k, n, s);
  };

  std::string last;
  for (int r = 0; r < kBuildRetries; ++r) {
    try {
      auto s = attempt(seed + static_cast<std::uint64_t>(r) * 0x100000001ULL);
      s.seed = seed;
      if (r > 0) s.params.emplace_back("retry", std::to_string(r));
      return {BuildStatus::ok, std::move(s), ""};
    } catch (const VerificationFailure& e) {
      last = e.what();
    }
  }
  throw VerificationFailure("build_beauville(" + std::to_string(n) + "," + std::to_string(k) + "): " + last);
}

}  // namespace bvl
