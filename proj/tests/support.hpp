#pragma once

// Test-only helpers: seeded random permutations and brute-force oracles that
// share no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "bvl/permutation.hpp"

namespace bvl::test {

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(img[i - 1], img[rng() % i]);
  return Permutation::from_images(std::move(img));
}

inline Permutation random_even(std::size_t n, std::mt19937_64& rng) {
  auto p = random_permutation(n, rng);
  if (!p.is_even() && n >= 2) p = p * Permutation::parse("(1,2)", n);
  return p;
}

/// Random element of the same cycle type as g, by relabeling.
inline Permutation random_conjugate(const Permutation& g, std::mt19937_64& rng) {
  auto h = random_permutation(g.degree(), rng);
  return h.inverse() * g * h;
}

/// Every permutation of {0..n-1}, in lexicographic order of images.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t{0});
  std::vector<Permutation> out;
  do out.push_back(Permutation::from_images(img));
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

inline std::vector<Permutation> all_even(std::size_t n) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n))
    if (p.is_even()) out.push_back(std::move(p));
  return out;
}

/// Element set of <gens> by breadth-first closure under right multiplication.
inline std::set<std::vector<point_t>> naive_closure(std::size_t n, const std::vector<Permutation>& gens,
                                                    std::size_t limit = 1u << 22) {
  std::set<std::vector<point_t>> seen{Permutation::identity(n).images()};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t q = 0; q < queue.size() && seen.size() <= limit; ++q)
    for (const auto& g : gens) {
      Permutation p = queue[q] * g;
      if (seen.insert(p.images()).second) queue.push_back(std::move(p));
    }
  return seen;
}

inline std::uint64_t lcm_of_parts(const std::vector<int>& parts) {
  std::uint64_t l = 1;
  for (int p : parts) l = std::lcm(l, static_cast<std::uint64_t>(p));
  return l;
}

/// lcm of element orders of A_n, enumerating every partition of n with an
/// even number of even parts.
inline std::uint64_t exponent_by_partitions(int n) {
  std::uint64_t e = 1;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      const auto evens = std::count_if(parts.begin(), parts.end(), [](int v) { return v % 2 == 0; });
      if (evens % 2 == 0) e = std::lcm(e, lcm_of_parts(parts));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return e;
}

/// Some h in `pool` with h^-1 x h = x2 and h^-1 y h = y2.
inline std::optional<Permutation> brute_conjugator(const std::vector<Permutation>& pool,
                                                   const Permutation& x, const Permutation& x2,
                                                   const std::vector<Permutation>& extra = {},
                                                   const std::vector<Permutation>& extra2 = {}) {
  for (const auto& h : pool) {
    if (h.inverse() * x * h != x2) continue;
    bool ok = true;
    for (std::size_t i = 0; i < extra.size() && ok; ++i) ok = h.inverse() * extra[i] * h == extra2[i];
    if (ok) return h;
  }
  return std::nullopt;
}


/// Calls f(h) for every h with h^-1 x h = x2, by aligning cycles of equal
/// length in every order and rotation. Stops early when f returns true.
template <class F>
bool for_each_conjugator(const Permutation& x, const Permutation& x2, F&& f) {
  const auto c1 = x.cycle_data().cycles, c2 = x2.cycle_data().cycles;
  if (x.cycle_type() != x2.cycle_type()) return false;
  const std::size_t n = x.degree();
  std::vector<point_t> img(n);
  std::vector<bool> used(c2.size(), false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == c1.size()) return f(Permutation::from_images(img));
    const auto& a = c1[i];
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (used[j] || c2[j].size() != a.size()) continue;
      used[j] = true;
      for (std::size_t s = 0; s < a.size(); ++s) {
        for (std::size_t t = 0; t < a.size(); ++t) img[a[t]] = c2[j][(t + s) % a.size()];
        if (self(self, i + 1)) return true;
      }
      used[j] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Number of conjugators for_each_conjugator would visit.
inline double conjugator_count(const Permutation& x) {
  std::vector<int> mult(x.degree() + 1, 0);
  for (const auto& c : x.cycle_data().cycles) ++mult[c.size()];
  double total = 1;
  for (std::size_t l = 1; l < mult.size(); ++l)
    for (int m = 1; m <= mult[l]; ++m) total *= static_cast<double>(m * l);
  return total;
}

/// Whether some permutation conjugates (x,y,z) to (x2,y2,z2) simultaneously.
inline bool triples_conjugate_in_sn(const std::vector<Permutation>& a, const std::vector<Permutation>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].cycle_type() != b[i].cycle_type()) return false;
  std::size_t best = 0;
  for (std::size_t i = 1; i < a.size(); ++i)
    if (conjugator_count(a[i]) < conjugator_count(a[best])) best = i;
  return for_each_conjugator(a[best], b[best], [&](const Permutation& h) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (h.inverse() * a[i] * h != b[i]) return false;
    return true;
  });
}

/// Points of a tuple of permutations, concatenated.
inline std::vector<point_t> tuple_key(const std::vector<Permutation>& comps) {
  std::vector<point_t> k;
  for (const auto& c : comps)
    for (std::size_t i = 0; i < c.degree(); ++i) k.push_back(c[i]);
  return k;
}

/// Every conjugate, under `group` acting on each coordinate, of every
/// non-identity power of the given tuples.
inline std::set<std::vector<point_t>> sigma(const std::vector<std::vector<Permutation>>& elements,
                                            const std::vector<Permutation>& group) {
  std::set<std::vector<point_t>> out;
  for (const auto& g : elements) {
    std::uint64_t order = 1;
    for (const auto& c : g) order = std::lcm(order, static_cast<std::uint64_t>(c.order()));
    for (std::uint64_t m = 1; m < order; ++m) {
      std::vector<std::vector<std::vector<point_t>>> classes;
      for (const auto& c : g) {
        const auto cm = c.pow(static_cast<long long>(m));
        std::set<std::vector<point_t>> cls;
        for (const auto& h : group) cls.insert(tuple_key({h.inverse() * cm * h}));
        classes.emplace_back(cls.begin(), cls.end());
      }
      std::vector<std::vector<point_t>> acc{{}};
      for (const auto& cls : classes) {
        std::vector<std::vector<point_t>> next;
        for (const auto& a : acc)
          for (const auto& c : cls) {
            auto k = a;
            k.insert(k.end(), c.begin(), c.end());
            next.push_back(std::move(k));
          }
        acc = std::move(next);
      }
      out.insert(acc.begin(), acc.end());
    }
  }
  return out;
}

inline bool sigmas_meet(const std::vector<std::vector<Permutation>>& side1,
                        const std::vector<std::vector<Permutation>>& side2, const std::vector<Permutation>& group) {
  const auto a = sigma(side1, group), b = sigma(side2, group);
  for (const auto& k : a)
    if (b.count(k)) return true;
  return false;
}

}  // namespace bvl::test
