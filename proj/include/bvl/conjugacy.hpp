#pragma once

// Conjugacy in S_n and A_n, simultaneous conjugacy of pairs, the outer
// automorphism of A_6, and equivalence of generating triples under Aut A_n.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bvl/group.hpp"
#include "bvl/permutation.hpp"
#include "bvl/triple.hpp"

namespace bvl {

enum class Ambient { symmetric, alternating };

/// Whether the S_n-class of x splits in A_n, and if so which half x is in.
struct ClassLabel {
  CycleType type;
  bool split = false;
  int half = 0;  // 0 when not split

  auto operator<=>(const ClassLabel&) const = default;
};

/// An S_n-class of even permutations splits in A_n iff its cycle lengths
/// (fixed points included) are odd and pairwise distinct.
inline bool class_splits(const CycleType& t) {
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (t.parts[i] % 2 == 0) return false;
    if (i > 0 && t.parts[i] == t.parts[i - 1]) return false;
  }
  return true;
}

/// Some h with x^h = y, or nothing when the cycle types differ. Cycles of
/// equal length are matched in order of their least points.
inline std::optional<Permutation> conjugate_in_sn(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DegreeMismatch("conjugate_in_sn: degree mismatch");
  auto cx = x.cycle_data();
  auto cy = y.cycle_data();
  if (cx.type != cy.type) return std::nullopt;
  auto by_length = [](const auto& a, const auto& b) { return a.size() > b.size(); };
  std::stable_sort(cx.cycles.begin(), cx.cycles.end(), by_length);
  std::stable_sort(cy.cycles.begin(), cy.cycles.end(), by_length);
  std::vector<point_t> img(x.degree());
  for (std::size_t c = 0; c < cx.cycles.size(); ++c)
    for (std::size_t j = 0; j < cx.cycles[c].size(); ++j) img[cx.cycles[c][j]] = cy.cycles[c][j];
  Permutation h = Permutation::from_images(std::move(img));
  if (conjugate(x, h) != y) throw VerificationFailure("conjugate_in_sn: witness check failed");
  return h;
}

inline bool conjugate_in_an(const Permutation& x, const Permutation& y) {
  if (!x.is_even() || !y.is_even()) throw InvalidArgument("conjugate_in_an: odd input");
  const auto h = conjugate_in_sn(x, y);
  if (!h) return false;
  if (h->is_even()) return true;
  // An odd conjugator can be corrected by an odd centralizing element (a
  // transposition of two equal-length cycles, or an even-length cycle) unless
  // the class splits.
  return !class_splits(x.cycle_type());
}

/// Canonical representative of a cycle type: cycles of non-increasing length
/// on consecutive points 1..n.
inline Permutation cycle_type_representative(const CycleType& t) {
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int len : t.parts) {
    std::vector<int> c;
    for (int i = 0; i < len; ++i) c.push_back(next++);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(static_cast<std::size_t>(t.degree()), cycles);
}

inline ClassLabel class_label(const Permutation& x) {
  ClassLabel l{x.cycle_type(), false, 0};
  if (x.is_even() && class_splits(l.type)) {
    l.split = true;
    l.half = conjugate_in_sn(cycle_type_representative(l.type), x)->is_even() ? 0 : 1;
  }
  return l;
}

namespace detail {

/// Backtracking over the centralizer of `target_x`, looking for c with
/// w^c = target_y. Whole cycles of target_x are assigned at once, and each
/// assignment propagates the forced images along w.
class CentralizerSearch {
 public:
  CentralizerSearch(const Permutation& target_x, const Permutation& w, const Permutation& target_y)
      : tx_(target_x), w_(w), ty_(target_y), n_(target_x.degree()) {
    const auto cd = tx_.cycle_data();
    cycle_of_.assign(n_, 0);
    for (std::size_t c = 0; c < cd.cycles.size(); ++c) {
      for (point_t p : cd.cycles[c]) cycle_of_[p] = c;
      cycle_len_.push_back(cd.cycles[c].size());
      cycles_.push_back(cd.cycles[c]);
    }
  }

  /// First solution whose parity is `want` (or any parity if unset).
  std::optional<Permutation> find(std::optional<Parity> want) {
    want_ = want;
    std::vector<int> c(n_, -1), used(n_, 0);
    return search(c, used);
  }

 private:
  // Maps the whole cycle containing `from` so that from -> to.
  bool assign_cycle(std::vector<int>& c, std::vector<int>& used, std::vector<point_t>& queue,
                    point_t from, point_t to) const {
    if (cycle_len_[cycle_of_[from]] != cycle_len_[cycle_of_[to]]) return false;
    if (used[to]) return false;
    point_t a = from, b = to;
    for (std::size_t t = 0; t < cycle_len_[cycle_of_[from]]; ++t) {
      if (used[b]) return false;
      c[a] = b;
      used[b] = 1;
      queue.push_back(a);
      a = tx_[a];
      b = tx_[b];
    }
    return true;
  }

  bool propagate(std::vector<int>& c, std::vector<int>& used, std::vector<point_t>& queue) const {
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const point_t i = queue[q];
      const point_t j = w_[i];
      const auto target = static_cast<point_t>(ty_[static_cast<point_t>(c[i])]);
      if (c[j] >= 0) {
        if (c[j] != target) return false;
      } else if (!assign_cycle(c, used, queue, j, target)) {
        return false;
      }
    }
    return true;
  }

  std::optional<Permutation> search(std::vector<int>& c, std::vector<int>& used) const {
    std::size_t free_point = n_;
    for (std::size_t i = 0; i < n_; ++i)
      if (c[i] < 0) {
        free_point = i;
        break;
      }
    if (free_point == n_) {
      std::vector<point_t> img(n_);
      for (std::size_t i = 0; i < n_; ++i) img[i] = static_cast<point_t>(c[i]);
      Permutation p = Permutation::from_images(std::move(img));
      if (want_ && p.parity() != *want_) return std::nullopt;
      return p;
    }
    const auto from = static_cast<point_t>(free_point);
    for (const auto& cyc : cycles_) {
      if (cyc.size() != cycle_len_[cycle_of_[from]] || used[cyc[0]]) continue;
      for (point_t to : cyc) {
        auto c2 = c;
        auto used2 = used;
        std::vector<point_t> queue;
        if (!assign_cycle(c2, used2, queue, from, to)) continue;
        if (!propagate(c2, used2, queue)) continue;
        if (auto r = search(c2, used2)) return r;
      }
    }
    return std::nullopt;
  }

  const Permutation& tx_;
  const Permutation& w_;
  const Permutation& ty_;
  std::size_t n_;
  std::vector<std::size_t> cycle_of_;
  std::vector<std::size_t> cycle_len_;
  std::vector<std::vector<point_t>> cycles_;
  std::optional<Parity> want_;
};

}  // namespace detail

/// h with x^h = x2 and y^h = y2 (h even when ambient is A_n), or nothing.
inline std::optional<Permutation> simultaneous_conjugacy(const Permutation& x, const Permutation& y,
                                                         const Permutation& x2, const Permutation& y2,
                                                         Ambient ambient = Ambient::symmetric) {
  if (x.degree() != y.degree() || x.degree() != x2.degree() || x.degree() != y2.degree())
    throw DegreeMismatch("simultaneous_conjugacy: degree mismatch");
  if (y.cycle_type() != y2.cycle_type()) return std::nullopt;
  const auto h0 = conjugate_in_sn(x, x2);
  if (!h0) return std::nullopt;
  const Permutation w = conjugate(y, *h0);
  std::optional<Parity> want;
  if (ambient == Ambient::alternating) want = h0->parity();  // parity(c) must cancel h0's
  detail::CentralizerSearch search(x2, w, y2);
  const auto c = search.find(want);
  if (!c) return std::nullopt;
  Permutation h = *h0 * *c;
  if (conjugate(x, h) != x2 || conjugate(y, h) != y2)
    throw VerificationFailure("simultaneous_conjugacy: witness check failed");
  return h;
}

// ---------------------------------------------------------------------------
// Canonical forms of transitive pairs.

/// Relabels points in breadth-first order from `start`, following x then y.
/// Returns the relabeled image tables of x and y concatenated, or an empty
/// key if <x, y> is not transitive.
inline std::vector<point_t> relabeled_pair(const Permutation& x, const Permutation& y, point_t start) {
  const std::size_t n = x.degree();
  std::vector<int> label(n, -1);
  std::vector<point_t> order;
  order.reserve(n);
  label[start] = 0;
  order.push_back(start);
  for (std::size_t q = 0; q < order.size(); ++q) {
    for (const Permutation* g : {&x, &y}) {
      const point_t t = (*g)[order[q]];
      if (label[t] < 0) {
        label[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  if (order.size() != n) return {};
  std::vector<point_t> key(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    key[label[i]] = static_cast<point_t>(label[x[i]]);
    key[n + label[i]] = static_cast<point_t>(label[y[i]]);
  }
  return key;
}

/// Complete invariant of the S_n-simultaneous-conjugacy class of a pair
/// generating a transitive group.
inline std::vector<point_t> transitive_pair_key(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree()) throw DegreeMismatch("transitive_pair_key: degree mismatch");
  std::vector<point_t> best;
  for (std::size_t s = 0; s < x.degree(); ++s) {
    auto k = relabeled_pair(x, y, static_cast<point_t>(s));
    if (k.empty()) throw InvalidArgument("transitive_pair_key: <x,y> is not transitive");
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

/// Order of the centralizer of <x, y> in S_n (transitive pairs only).
inline std::size_t pair_centralizer_order(const Permutation& x, const Permutation& y) {
  const auto ref = relabeled_pair(x, y, 0);
  if (ref.empty()) throw InvalidArgument("pair_centralizer_order: not transitive");
  std::size_t count = 0;
  for (std::size_t s = 0; s < x.degree(); ++s)
    count += relabeled_pair(x, y, static_cast<point_t>(s)) == ref;
  return count;
}

// ---------------------------------------------------------------------------
// The outer automorphism of A_6.

namespace detail {

inline std::size_t lehmer_rank(const Permutation& p) {
  const std::size_t n = p.degree();
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

inline std::vector<Permutation> all_even_permutations(std::size_t n) {
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t{0});
  std::vector<Permutation> out;
  do {
    auto p = Permutation::from_images(img);
    if (p.is_even()) out.push_back(std::move(p));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace detail

/// An automorphism of A_6 stored by its action on all 360 elements.
class ExceptionalAut {
 public:
  ExceptionalAut() = default;
  explicit ExceptionalAut(std::vector<Permutation> image_by_rank)
      : image_by_rank_(std::move(image_by_rank)) {}

  const Permutation& operator()(const Permutation& g) const {
    if (g.degree() != 6 || !g.is_even()) throw InvalidArgument("ExceptionalAut: not an element of A_6");
    return image_by_rank_[detail::lehmer_rank(g)];
  }

  /// Bijective, multiplicative, and exchanging 3-cycles with 3^2 elements.
  /// Returns an empty string on success, otherwise the failed property.
  std::string verify() const {
    const auto elems = detail::all_even_permutations(6);
    if (image_by_rank_.size() != 720) return "table size";
    std::unordered_set<Permutation> seen;
    for (const auto& g : elems) {
      const auto& im = (*this)(g);
      if (im.degree() != 6 || !im.is_even()) return "image outside A_6";
      seen.insert(im);
    }
    if (seen.size() != elems.size()) return "not bijective";
    for (const auto& a : elems)
      for (const auto& b : elems)
        if ((*this)(a * b) != (*this)(a) * (*this)(b)) return "not multiplicative";
    const CycleType three{{3, 1, 1, 1}}, three_squared{{3, 3}};
    for (const auto& g : elems)
      if (g.cycle_type() == three && (*this)(g).cycle_type() != three_squared)
        return "3-cycle not mapped to a 3^2 element";
    return {};
  }

 private:
  std::vector<Permutation> image_by_rank_;
};

/// Builds the outer automorphism from the action of A_6 on the right cosets
/// of a transitive subgroup isomorphic to A_5.
inline ExceptionalAut build_exceptional_aut() {
  const auto elems = detail::all_even_permutations(6);
  const Permutation five = Permutation::from_cycles(6, {{1, 2, 3, 4, 5}});

  std::vector<Permutation> sub;
  for (const auto& y : elems) {
    if (!is_transitive(6, {five, y})) continue;
    PermGroup g(6, {five, y});
    if (g.order() != 60) continue;
    sub.clear();
    for (const auto& e : elems)
      if (g.contains(e)) sub.push_back(e);
    break;
  }
  if (sub.size() != 60) throw VerificationFailure("exceptional automorphism: no transitive A_5 found");

  std::vector<int> coset(720, -1);
  std::vector<Permutation> reps;
  for (const auto& g : elems) {
    if (coset[detail::lehmer_rank(g)] >= 0) continue;
    for (const auto& k : sub) coset[detail::lehmer_rank(k * g)] = static_cast<int>(reps.size());
    reps.push_back(g);
  }
  if (reps.size() != 6) throw VerificationFailure("exceptional automorphism: index is not 6");

  std::vector<Permutation> table(720);
  for (const auto& h : elems) {
    std::vector<point_t> img(6);
    for (std::size_t c = 0; c < 6; ++c)
      img[c] = static_cast<point_t>(coset[detail::lehmer_rank(reps[c] * h)]);
    table[detail::lehmer_rank(h)] = Permutation::from_images(std::move(img));
  }
  ExceptionalAut aut(std::move(table));
  if (auto err = aut.verify(); !err.empty())
    throw VerificationFailure("exceptional automorphism: " + err);
  return aut;
}

/// Process-wide verified instance, built on first use.
inline const ExceptionalAut& exceptional_aut() {
  static const ExceptionalAut aut = build_exceptional_aut();
  return aut;
}

// ---------------------------------------------------------------------------

/// Equivalence under Aut A_n: S_n-simultaneous conjugacy of (x, y), plus the
/// image under the outer automorphism when n = 6.
inline bool triple_equivalent(const GeneratingTriple& a, const GeneratingTriple& b) {
  if (a.degree() != b.degree()) throw DegreeMismatch("triple_equivalent: degree mismatch");
  if (a.type() != b.type()) return false;
  if (simultaneous_conjugacy(a.x, a.y, b.x, b.y)) return true;
  if (a.degree() == 6) {
    const auto& phi = exceptional_aut();
    return simultaneous_conjugacy(a.x, a.y, phi(b.x), phi(b.y)).has_value();
  }
  return false;
}

/// Complete invariant of the Aut A_n-class of a generating pair.
inline std::vector<point_t> aut_class_key(const Permutation& x, const Permutation& y) {
  auto key = transitive_pair_key(x, y);
  if (x.degree() == 6) {
    const auto& phi = exceptional_aut();
    auto other = transitive_pair_key(phi(x), phi(y));
    if (other < key) key = std::move(other);
  }
  return key;
}

inline std::vector<point_t> aut_class_key(const GeneratingTriple& t) { return aut_class_key(t.x, t.y); }

}  // namespace bvl
