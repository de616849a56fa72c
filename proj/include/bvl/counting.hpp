#pragma once

// phi_2 and d_2 of small alternating groups, by direct enumeration of
// generating pairs and independently by Moebius inversion over the subgroup
// lattice; enumeration of Aut-class representatives of generating triples.

#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "bvl/conjugacy.hpp"
#include "bvl/group.hpp"
#include "bvl/numtheory.hpp"
#include "bvl/triple.hpp"

namespace bvl {

inline constexpr std::uint64_t kDefaultBruteForceCap = 2520;  // |A_7|
inline constexpr std::uint64_t kDefaultLatticeCap = 360;      // |A_6|

enum class CountMethod { brute, moebius, classes };

inline const char* method_name(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::moebius: return "moebius";
    case CountMethod::classes: return "classes";
  }
  return "?";
}

struct CountReport {
  int n = 0;
  std::string group;  // "A5", ...
  std::uint64_t phi2 = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t d2 = 0;
  CountMethod method = CountMethod::brute;
};

/// |Aut A_n|: n! for n != 6, and 2 * 6! for n = 6.
inline std::uint64_t aut_order_an(int n) {
  if (n < 5 || n > 20) throw InvalidArgument("aut_order_an: n out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return n == 6 ? 2 * f : f;
}

inline std::uint64_t an_order_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 3; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// <x, y> = A_n, using the cycle criteria first and the stabilizer chain as
/// the fallback.
inline bool generates_an(const Permutation& x, const Permutation& y) {
  if (!is_transitive(x.degree(), {x, y})) return false;
  return PermGroup(x.degree(), {x, y}).is_alternating().value;
}

inline CountReport make_report(int n, std::uint64_t phi2, CountMethod m) {
  const std::uint64_t aut = aut_order_an(n);
  if (phi2 % aut != 0) throw VerificationFailure("|Aut A_n| does not divide phi_2");
  return {n, "A" + std::to_string(n), phi2, aut, phi2 / aut, m};
}

/// Counts ordered pairs (x, y) in A_n^2 with <x, y> = A_n.
inline CountReport phi2_bruteforce(int n, std::uint64_t cap = kDefaultBruteForceCap) {
  if (n < 5) throw InvalidArgument("phi2_bruteforce: n >= 5 required");
  if (n > 12 || an_order_u64(n) > cap)
    throw CapExceeded("phi2_bruteforce: |A_" + std::to_string(n) + "| exceeds cap " + std::to_string(cap));
  const auto elems = detail::all_even_permutations(static_cast<std::size_t>(n));
  // The count over y is constant on S_n-classes of x: one x per cycle type.
  std::map<CycleType, std::pair<std::size_t, std::uint64_t>> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    auto [it, fresh] = classes.try_emplace(elems[i].cycle_type(), i, 0);
    ++it->second.second;
  }
  std::uint64_t count = 0;
  for (const auto& [type, rep] : classes) {
    std::uint64_t with_x = 0;
    for (const auto& y : elems) with_x += generates_an(elems[rep.first], y);
    count += with_x * rep.second;
  }
  return make_report(n, count, CountMethod::brute);
}

// ---------------------------------------------------------------------------
// Subgroup lattice.

inline constexpr std::size_t kLatticeBits = 360;
using ElementSet = std::bitset<kLatticeBits>;

struct SubgroupNode {
  ElementSet elements;
  std::uint64_t order = 0;
  long long mu = 0;
  std::vector<std::size_t> supers;  // indices of proper overgroups
  std::vector<std::uint16_t> generators;
};

/// A_n with elements indexed 0..|A_n|-1 and a full multiplication table.
class IndexedAlternating {
 public:
  explicit IndexedAlternating(int n)
      : n_(n), elems_(detail::all_even_permutations(static_cast<std::size_t>(n))) {
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    index_of_rank_.assign(fact, -1);
    for (std::size_t i = 0; i < elems_.size(); ++i)
      index_of_rank_[detail::lehmer_rank(elems_[i])] = static_cast<int>(i);
    const std::size_t N = elems_.size();
    mul_.resize(N * N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) mul_[a * N + b] = static_cast<std::uint16_t>(index(elems_[a] * elems_[b]));
    identity_ = static_cast<std::uint16_t>(index(Permutation::identity(static_cast<std::size_t>(n))));
  }

  std::size_t size() const { return elems_.size(); }
  const Permutation& element(std::size_t i) const { return elems_[i]; }
  std::size_t index(const Permutation& p) const {
    return static_cast<std::size_t>(index_of_rank_[detail::lehmer_rank(p)]);
  }
  std::uint16_t mul(std::size_t a, std::size_t b) const { return mul_[a * elems_.size() + b]; }
  std::uint16_t identity() const { return identity_; }

  /// Subgroup generated by the given element indices.
  ElementSet closure(const std::vector<std::uint16_t>& gens) const {
    ElementSet set;
    std::vector<std::uint16_t> list{identity_};
    set.set(identity_);
    for (std::size_t q = 0; q < list.size(); ++q)
      for (auto g : gens) {
        const auto p = mul(list[q], g);
        if (!set.test(p)) {
          set.set(p);
          list.push_back(p);
        }
      }
    return set;
  }

 private:
  int n_;
  std::vector<Permutation> elems_;
  std::vector<int> index_of_rank_;
  std::vector<std::uint16_t> mul_;
  std::uint16_t identity_ = 0;
};

/// All subgroups of A_n, found as iterated joins of cyclic subgroups, with
/// the Moebius function of the lattice computed from the top.
inline std::vector<SubgroupNode> subgroup_lattice(int n, std::uint64_t cap = kDefaultLatticeCap) {
  if (n < 3 || n > 7 || an_order_u64(n) > cap || an_order_u64(n) > kLatticeBits)
    throw CapExceeded("subgroup_lattice: |A_" + std::to_string(n) + "| exceeds cap");
  const IndexedAlternating G(n);

  std::vector<SubgroupNode> nodes;
  std::unordered_set<ElementSet> seen;
  auto add = [&](std::vector<std::uint16_t> gens) {
    ElementSet s = G.closure(gens);
    if (!seen.insert(s).second) return;
    nodes.push_back({s, s.count(), 0, {}, std::move(gens)});
  };

  add({});
  std::vector<std::uint16_t> cyclic_gens;
  {
    std::unordered_set<ElementSet> cyc;
    for (std::size_t g = 0; g < G.size(); ++g) {
      if (g == G.identity()) continue;
      if (cyc.insert(G.closure({static_cast<std::uint16_t>(g)})).second)
        cyclic_gens.push_back(static_cast<std::uint16_t>(g));
    }
  }
  for (auto g : cyclic_gens) add({g});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (auto g : cyclic_gens) {
      if (nodes[i].elements.test(g)) continue;
      auto gens = nodes[i].generators;
      gens.push_back(g);
      add(std::move(gens));
    }
  }

  std::sort(nodes.begin(), nodes.end(), [](const SubgroupNode& a, const SubgroupNode& b) {
    if (a.order != b.order) return a.order > b.order;
    for (std::size_t i = 0; i < kLatticeBits; ++i)
      if (a.elements.test(i) != b.elements.test(i)) return a.elements.test(i);
    return false;
  });
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    long long sum = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (nodes[l].order <= nodes[k].order) continue;
      if ((nodes[k].elements & ~nodes[l].elements).none()) {
        nodes[k].supers.push_back(l);
        sum += nodes[l].mu;
      }
    }
    nodes[k].mu = k == 0 ? 1 : -sum;
  }
  return nodes;
}

/// sum over L >= K of mu(L) equals [K = H], for every node K.
inline bool moebius_recursion_holds(const std::vector<SubgroupNode>& nodes) {
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    long long sum = nodes[k].mu;
    for (auto l : nodes[k].supers) sum += nodes[l].mu;
    if (sum != (k == 0 ? 1 : 0)) return false;
  }
  return true;
}

inline CountReport phi2_moebius(int n, std::uint64_t cap = kDefaultLatticeCap) {
  const auto nodes = subgroup_lattice(n, cap);
  long long phi2 = 0;
  for (const auto& k : nodes) phi2 += k.mu * static_cast<long long>(k.order * k.order);
  if (phi2 < 0) throw VerificationFailure("phi2_moebius: negative count");
  return make_report(n, static_cast<std::uint64_t>(phi2), CountMethod::moebius);
}

// ---------------------------------------------------------------------------

enum class Equivalence { symmetric, automorphism };

/// Even cycle types of degree n, in decreasing lexicographic order of parts.
inline std::vector<CycleType> even_cycle_types(int n) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      CycleType t{parts};
      if (t.parity() == Parity::even) out.push_back(t);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// One generating triple per Aut A_n-orbit (or S_n-orbit) of generating
/// pairs, optionally restricted to a type. x runs over cycle-type
/// representatives and y over A_n in lexicographic order.
inline std::vector<GeneratingTriple> class_representatives(
    int n, std::optional<TripleType> filter = std::nullopt,
    Equivalence eq = Equivalence::automorphism, std::uint64_t cap = kDefaultBruteForceCap) {
  if (n < 5 || n > 12 || an_order_u64(n) > cap)
    throw CapExceeded("class_representatives: |A_" + std::to_string(n) + "| exceeds cap");
  const auto elems = detail::all_even_permutations(static_cast<std::size_t>(n));
  std::vector<GeneratingTriple> out;
  std::set<std::vector<point_t>> keys;
  for (const auto& t : even_cycle_types(n)) {
    const Permutation x = cycle_type_representative(t);
    if (filter && x.order() != (*filter)[0]) continue;
    for (const auto& y : elems) {
      if (filter && y.order() != (*filter)[1]) continue;
      if (!is_transitive(x.degree(), {x, y})) continue;
      auto triple = GeneratingTriple::from_xy(x, y, "classrep:" + std::to_string(n));
      if (filter && triple.z.order() != (*filter)[2]) continue;
      const auto verdict = PermGroup(x.degree(), {x, y}).is_alternating();
      if (!verdict.value) continue;
      auto key = eq == Equivalence::automorphism ? aut_class_key(x, y) : transitive_pair_key(x, y);
      if (!keys.insert(std::move(key)).second) continue;
      triple.proof = verdict.proof;
      out.push_back(std::move(triple));
    }
  }
  return out;
}

}  // namespace bvl
