#pragma once

// Permutation groups given by generators: orbits, block systems, exact order,
// and the cycle-structure criteria that certify <gens> >= A_n.

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "bvl/numtheory.hpp"
#include "bvl/permutation.hpp"
#include "bvl/stabilizer_chain.hpp"

namespace bvl {

using Partition = std::vector<std::vector<point_t>>;

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  /// Classes listed by least element, each sorted.
  Partition classes() {
    std::vector<std::vector<point_t>> by_root(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i)
      by_root[find(i)].push_back(static_cast<point_t>(i));
    Partition out;
    for (auto& c : by_root)
      if (!c.empty()) out.push_back(std::move(c));
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

inline Partition orbits(std::size_t degree, const std::vector<Permutation>& gens) {
  detail::UnionFind uf(degree);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < degree; ++i) uf.unite(i, g[i]);
  return uf.classes();
}

inline bool is_transitive(std::size_t degree, const std::vector<Permutation>& gens) {
  if (degree <= 1) return true;
  detail::UnionFind uf(degree);
  std::size_t merges = 0;
  for (const auto& g : gens)
    for (std::size_t i = 0; i < degree; ++i) merges += uf.unite(i, g[i]);
  return merges == degree - 1;
}

/// Finest <gens>-invariant partition in which a and b share a block.
inline Partition minimal_block_system(std::size_t degree, const std::vector<Permutation>& gens,
                                      point_t a, point_t b) {
  detail::UnionFind uf(degree);
  std::vector<std::pair<point_t, point_t>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto [u, v] = queue[q];
    for (const auto& g : gens)
      if (uf.unite(g[u], g[v])) queue.emplace_back(g[u], g[v]);
  }
  return uf.classes();
}

enum class JordanCriterion {
  coprime_long_cycle,              // transitive, m-cycle, gcd(m,n)=1, n/2 < m < n-2
  two_coprime_cycles,              // transitive, cycle structure c,d coprime
  fixed_point_two_coprime_cycles,  // transitive, structure 1,c,d coprime, 1+c,1+d not dividing n
  primitive_short_cycle,           // primitive, m-cycle with 2 <= m <= n-3
  primitive_double_transposition,  // primitive, n >= 9, double transposition
  primitive_small_orbit,           // primitive, <h> has one orbit of length 1 < m < n/2
};

inline const char* criterion_name(JordanCriterion c) {
  switch (c) {
    case JordanCriterion::coprime_long_cycle: return "coprime-long-cycle";
    case JordanCriterion::two_coprime_cycles: return "two-coprime-cycles";
    case JordanCriterion::fixed_point_two_coprime_cycles: return "fixed-point-two-coprime-cycles";
    case JordanCriterion::primitive_short_cycle: return "primitive-short-cycle";
    case JordanCriterion::primitive_double_transposition: return "primitive-double-transposition";
    case JordanCriterion::primitive_small_orbit: return "primitive-small-orbit";
  }
  return "unknown";
}

/// A checked witness that a permutation group contains A_n.
struct JordanCertificate {
  JordanCriterion criterion;
  std::string witness_word;
  Permutation witness;
  std::vector<std::string> conditions;
  std::string hypothesis;  // "transitive" or "primitive:<evidence>"
};

struct JordanSearchOptions {
  std::size_t max_word_length = 3;
  bool first_only = false;
};

struct AlternatingVerdict {
  bool value = false;
  std::string proof;  // "jordan:<criterion>", "order", "odd-generator", ...
};

/// A permutation group given by generators, with lazily computed and then
/// immutable caches. Safe for concurrent readers.
class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> gens)
      : degree_(degree), gens_(std::move(gens)), cache_(std::make_unique<Cache>()) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw DegreeMismatch("group: generator degree mismatch");
  }
  PermGroup(const PermGroup& o) : PermGroup(o.degree_, o.gens_) {}
  PermGroup& operator=(const PermGroup& o) {
    if (this != &o) *this = PermGroup(o);
    return *this;
  }
  PermGroup(PermGroup&&) noexcept = default;
  PermGroup& operator=(PermGroup&&) noexcept = default;

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const Partition& orbits() const {
    std::call_once(cache_->orbits_once, [&] { cache_->orbits = bvl::orbits(degree_, gens_); });
    return cache_->orbits;
  }
  bool is_transitive() const { return orbits().size() <= 1; }

  /// Distinct non-trivial block systems obtained as minimal block closures of
  /// {first point, b} for every other point b. Empty iff primitive.
  const std::vector<Partition>& block_systems() const {
    if (!is_transitive()) throw InvalidArgument("block systems need a transitive group");
    std::call_once(cache_->blocks_once, [&] {
      for (std::size_t b = 1; b < degree_; ++b) {
        Partition p = minimal_block_system(degree_, gens_, 0, static_cast<point_t>(b));
        if (p.size() <= 1) continue;
        if (std::find(cache_->blocks.begin(), cache_->blocks.end(), p) == cache_->blocks.end())
          cache_->blocks.push_back(std::move(p));
      }
    });
    return cache_->blocks;
  }
  bool is_primitive() const { return is_transitive() && block_systems().empty(); }

  const StabilizerChain& chain() const {
    std::call_once(cache_->chain_once,
                   [&] { cache_->chain = StabilizerChain(degree_, gens_); });
    return cache_->chain;
  }
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }

  std::vector<JordanCertificate> jordan_certificates(JordanSearchOptions opt = {}) const;
  AlternatingVerdict is_alternating() const;

 private:
  struct Cache {
    std::once_flag orbits_once, blocks_once, chain_once;
    Partition orbits;
    std::vector<Partition> blocks;
    StabilizerChain chain;
  };

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::unique_ptr<Cache> cache_;
};

inline BigInt group_order(std::size_t degree, const std::vector<Permutation>& gens) {
  return PermGroup(degree, gens).order();
}

// ---------------------------------------------------------------------------

namespace detail {

struct Candidate {
  std::string word;
  Permutation element;
};

inline std::string generator_name(std::size_t i, std::size_t count) {
  static const char* two[] = {"x", "y"};
  if (count <= 2) return two[i];
  return "g" + std::to_string(i + 1);
}

/// Words of length <= max_len in the generators and their inverses, then
/// every proper power of each distinct word value.
inline std::vector<Candidate> jordan_candidates(const std::vector<Permutation>& gens,
                                                std::size_t max_len) {
  struct Letter {
    std::string name;
    Permutation p;
  };
  std::vector<Letter> alphabet;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string n = generator_name(i, gens.size());
    alphabet.push_back({n, gens[i]});
    const Permutation inv = gens[i].inverse();
    if (inv != gens[i]) alphabet.push_back({n + "^-1", inv});
  }

  std::vector<Candidate> words;
  std::unordered_set<Permutation> seen;
  std::vector<Candidate> frontier;
  for (const auto& l : alphabet) frontier.push_back({l.name, l.p});
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Candidate> next;
    for (auto& c : frontier) {
      if (len < max_len)
        for (const auto& l : alphabet) next.push_back({c.word + "*" + l.name, c.element * l.p});
      if (!c.element.is_identity() && seen.insert(c.element).second) words.push_back(std::move(c));
    }
    frontier = std::move(next);
  }

  std::vector<Candidate> out;
  std::unordered_set<Permutation> seen_powers;
  for (const auto& w : words) {
    const std::uint64_t ord = w.element.order();
    for (std::uint64_t d = 1; d < ord; ++d) {
      if (ord % d != 0) continue;
      Permutation h = d == 1 ? w.element : w.element.pow(static_cast<long long>(d));
      if (!seen_powers.insert(h).second) continue;
      out.push_back({d == 1 ? w.word : "(" + w.word + ")^" + std::to_string(d), std::move(h)});
    }
  }
  return out;
}

inline std::string support_image_condition(const Permutation& h,
                                           const std::vector<Permutation>& gens) {
  // Each generator must map some point of supp(h) back into supp(h).
  std::vector<bool> in(h.degree(), false);
  for (std::size_t i = 0; i < h.degree(); ++i) in[i] = h[i] != i;
  for (const auto& g : gens) {
    bool ok = false;
    for (std::size_t i = 0; i < h.degree() && !ok; ++i) ok = in[i] && in[g[i]];
    if (!ok) return {};
  }
  return "every generator maps a point of supp(h) into supp(h)";
}

}  // namespace detail

inline std::vector<JordanCertificate> PermGroup::jordan_certificates(JordanSearchOptions opt) const {
  std::vector<JordanCertificate> out;
  const int n = static_cast<int>(degree_);
  if (gens_.empty() || n < 3 || !is_transitive()) return out;

  const auto candidates = detail::jordan_candidates(gens_, opt.max_word_length);

  // Primitivity evidence, computed on first need.
  std::optional<std::string> primitivity;
  auto primitive_evidence = [&]() -> const std::string& {
    if (primitivity) return *primitivity;
    if (is_prime(static_cast<std::uint64_t>(n))) return *(primitivity = "prime-degree");
    for (const auto& c : candidates) {
      const auto nt = c.element.cycle_type().nontrivial();
      if (nt.size() != 1) continue;
      const int m = nt[0];
      if (std::gcd(m, n) == 1 && 2 * m > n)
        return *(primitivity = "coprime-cycle " + c.word + " of length " + std::to_string(m));
      if (is_prime(static_cast<std::uint64_t>(m)) &&
          !detail::support_image_condition(c.element, gens_).empty())
        return *(primitivity = "prime-cycle-overlap " + c.word);
    }
    return *(primitivity = block_systems().empty() ? "no-block-systems" : "");
  };

  auto emit = [&](JordanCriterion crit, const detail::Candidate& c,
                  std::vector<std::string> conds, std::string hyp) {
    out.push_back({crit, c.word, c.element, std::move(conds), std::move(hyp)});
    return opt.first_only;
  };

  for (const auto& c : candidates) {
    const CycleType type = c.element.cycle_type();
    const auto nt = type.nontrivial();
    const int fixed = type.fixed_points();

    if (nt.size() == 1) {
      const int m = nt[0];
      if (std::gcd(m, n) == 1 && 2 * m > n && m < n - 2) {
        if (emit(JordanCriterion::coprime_long_cycle, c,
                 {"gcd(" + std::to_string(m) + "," + std::to_string(n) + ")=1",
                  std::to_string(n) + "/2<" + std::to_string(m) + "<" + std::to_string(n - 2)},
                 "transitive"))
          return out;
      }
      if (m >= 2 && m <= n - 3) {
        const std::string& ev = primitive_evidence();
        if (!ev.empty()) {
          if (emit(JordanCriterion::primitive_short_cycle, c,
                   {"2<=" + std::to_string(m) + "<=" + std::to_string(n - 3)}, "primitive:" + ev))
            return out;
          if (2 * m < n && !opt.first_only)
            emit(JordanCriterion::primitive_small_orbit, c,
                 {"1<" + std::to_string(m) + "<" + std::to_string(n) + "/2"}, "primitive:" + ev);
        }
      }
    } else if (nt.size() == 2 && std::gcd(nt[0], nt[1]) == 1) {
      const int c1 = nt[0], d1 = nt[1];
      if (fixed == 0) {
        if (emit(JordanCriterion::two_coprime_cycles, c,
                 {"gcd(" + std::to_string(c1) + "," + std::to_string(d1) + ")=1"}, "transitive"))
          return out;
      } else if (fixed == 1 && n % (1 + c1) != 0 && n % (1 + d1) != 0) {
        if (emit(JordanCriterion::fixed_point_two_coprime_cycles, c,
                 {"gcd(" + std::to_string(c1) + "," + std::to_string(d1) + ")=1",
                  std::to_string(1 + c1) + "∤" + std::to_string(n),
                  std::to_string(1 + d1) + "∤" + std::to_string(n)},
                 "transitive"))
          return out;
      }
    } else if (nt.size() == 2 && nt[0] == 2 && nt[1] == 2 && n >= 9) {
      const std::string& ev = primitive_evidence();
      if (!ev.empty() &&
          emit(JordanCriterion::primitive_double_transposition, c, {"n=" + std::to_string(n) + ">=9"},
               "primitive:" + ev))
        return out;
    }
  }
  return out;
}

inline AlternatingVerdict PermGroup::is_alternating() const {
  for (const auto& g : gens_)
    if (!g.is_even()) return {false, "odd-generator"};
  if (degree_ < 3) return {true, "order"};
  const auto certs = jordan_certificates({.max_word_length = 3, .first_only = true});
  if (!certs.empty()) return {true, std::string("jordan:") + criterion_name(certs.front().criterion)};
  if (!is_transitive()) return {false, "intransitive"};
  return {order() == alternating_order(static_cast<int>(degree_)), "order"};
}

inline AlternatingVerdict is_alternating(const std::vector<Permutation>& gens, std::size_t degree) {
  return PermGroup(degree, gens).is_alternating();
}

}  // namespace bvl
