#pragma once

// Permutations of {1..n} as immutable values.
//
// Internally points are 0-based; every text form (cycle notation, image
// arrays, certificates) is 1-based. Composition is left-to-right:
// (p * q)(i) = q(p(i)), i.e. apply p first. Conjugation follows the same
// right-action convention, g^h = h^-1 g h, which relabels the points of g
// by h: g^h maps h(i) to h(g(i)).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bvl/error.hpp"

namespace bvl {

using point_t = std::uint8_t;
inline constexpr std::size_t kMaxDegree = 255;

enum class Parity { even, odd };

/// Cycle type as a multiset of cycle lengths, fixed points included as 1s.
/// Parts are kept in non-increasing order so equality is structural.
struct CycleType {
  std::vector<int> parts;

  int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  Parity parity() const {
    return (degree() - static_cast<int>(parts.size())) % 2 == 0 ? Parity::even
                                                                : Parity::odd;
  }
  /// Lengths of the non-trivial cycles only.
  std::vector<int> nontrivial() const {
    std::vector<int> out;
    for (int p : parts)
      if (p > 1) out.push_back(p);
    return out;
  }
  int fixed_points() const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  }
  std::string to_string() const;

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;
};

class Permutation;

/// Full cycle decomposition. Cycles are 0-based, each starting at its least
/// point, listed by increasing least point; fixed points are included.
struct CycleData {
  CycleType type;
  std::vector<std::vector<point_t>> cycles;
  std::vector<point_t> support;
  Parity parity = Parity::even;
};

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    check_degree(degree);
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), point_t{0});
    return p;
  }

  /// 0-based image table; throws ParseError if it is not a bijection.
  static Permutation from_images(std::vector<point_t> images) {
    check_degree(images.size());
    std::vector<bool> seen(images.size(), false);
    for (point_t v : images) {
      if (v >= images.size() || seen[v])
        throw ParseError("image table is not a bijection");
      seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// 1-based image table, as in "[2,1,4,5,3]".
  static Permutation from_one_based(std::span<const long long> images) {
    std::vector<point_t> zero(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (images[i] < 1 || static_cast<std::size_t>(images[i]) > images.size())
        throw ParseError("image out of range");
      zero[i] = static_cast<point_t>(images[i] - 1);
    }
    return from_images(std::move(zero));
  }

  /// Builds a permutation from 1-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles) {
    check_degree(degree);
    std::vector<point_t> img(degree);
    std::iota(img.begin(), img.end(), point_t{0});
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (int v : c) {
        if (v < 1 || static_cast<std::size_t>(v) > degree)
          throw ParseError("cycle point " + std::to_string(v) + " outside 1.." +
                           std::to_string(degree));
        if (used[v - 1]) throw ParseError("cycles are not disjoint");
        used[v - 1] = true;
      }
      for (std::size_t i = 0; i < c.size(); ++i)
        img[c[i] - 1] = static_cast<point_t>(c[(i + 1) % c.size()] - 1);
    }
    Permutation p;
    p.images_ = std::move(img);
    return p;
  }

  /// Convenience for a single cycle given as an inclusive 1-based range.
  static Permutation cycle_range(std::size_t degree, int first, int last) {
    std::vector<int> c(static_cast<std::size_t>(last - first + 1));
    std::iota(c.begin(), c.end(), first);
    return from_cycles(degree, {c});
  }

  /// Parses "(1,2)(3,4,5)" or "[2,1,4,5,3]". Cycle notation needs an explicit
  /// degree (0 means: the largest point mentioned).
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const { return images_.size(); }
  point_t operator[](std::size_t i) const { return images_[i]; }
  point_t apply(std::size_t i) const { return images_[i]; }
  const std::vector<point_t>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[images_[i]] = static_cast<point_t>(i);
    return r;
  }

  /// Left-to-right product: apply *this, then q.
  Permutation operator*(const Permutation& q) const {
    if (degree() != q.degree())
      throw DegreeMismatch("compose: degree " + std::to_string(degree()) +
                           " vs " + std::to_string(q.degree()));
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      r.images_[i] = q.images_[images_[i]];
    return r;
  }

  /// p^e for any integer e (negative exponents use the inverse).
  Permutation pow(long long e) const {
    const auto ord = static_cast<long long>(order());
    e %= ord;
    if (e < 0) e += ord;
    // Walk each cycle once: i -> the point e steps ahead.
    Permutation r;
    r.images_.resize(images_.size());
    std::vector<bool> done(images_.size(), false);
    std::vector<point_t> cyc;
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (done[s]) continue;
      cyc.clear();
      for (point_t i = static_cast<point_t>(s); !done[i]; i = images_[i]) {
        done[i] = true;
        cyc.push_back(i);
      }
      const std::size_t len = cyc.size();
      const std::size_t shift = static_cast<std::size_t>(e % static_cast<long long>(len));
      for (std::size_t j = 0; j < len; ++j) r.images_[cyc[j]] = cyc[(j + shift) % len];
    }
    return r;
  }

  /// lcm of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t acc = 1;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (done[s]) continue;
      std::uint64_t len = 0;
      for (std::size_t i = s; !done[i]; i = images_[i]) {
        done[i] = true;
        ++len;
      }
      acc = std::lcm(acc, len);
    }
    return acc;
  }

  Parity parity() const {
    std::size_t cycles = 0;
    std::vector<bool> done(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (done[s]) continue;
      ++cycles;
      for (std::size_t i = s; !done[i]; i = images_[i]) done[i] = true;
    }
    return (images_.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
  }
  bool is_even() const { return parity() == Parity::even; }

  CycleData cycle_data() const;
  CycleType cycle_type() const { return cycle_data().type; }

  /// Number of points moved.
  std::size_t support_size() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) c += images_[i] != i;
    return c;
  }

  std::string to_cycle_string() const;
  std::string to_image_string() const;
  std::vector<long long> one_based() const {
    std::vector<long long> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  static void check_degree(std::size_t degree) {
    if (degree > kMaxDegree)
      throw InvalidArgument("degree " + std::to_string(degree) + " exceeds " +
                            std::to_string(kMaxDegree));
  }

  std::vector<point_t> images_;
};

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }
inline Permutation inverse(const Permutation& p) { return p.inverse(); }
inline Permutation power(const Permutation& p, long long e) { return p.pow(e); }
inline std::uint64_t order(const Permutation& p) { return p.order(); }
inline CycleData cycle_data(const Permutation& p) { return p.cycle_data(); }

/// g^h = h^-1 g h.
inline Permutation conjugate(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree())
    throw DegreeMismatch("conjugate: degree " + std::to_string(g.degree()) + " vs " +
                         std::to_string(h.degree()));
  std::vector<point_t> img(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) img[h[i]] = h[g[i]];
  return Permutation::from_images(std::move(img));
}

// ---------------------------------------------------------------------------

inline std::string CycleType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + "}";
}

inline CycleData Permutation::cycle_data() const {
  CycleData d;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s]) continue;
    std::vector<point_t> c;
    for (std::size_t i = s; !done[i]; i = images_[i]) {
      done[i] = true;
      c.push_back(static_cast<point_t>(i));
    }
    d.type.parts.push_back(static_cast<int>(c.size()));
    if (c.size() > 1) d.support.insert(d.support.end(), c.begin(), c.end());
    d.cycles.push_back(std::move(c));
  }
  std::sort(d.support.begin(), d.support.end());
  std::sort(d.type.parts.begin(), d.type.parts.end(), std::greater<>());
  d.parity = d.type.parity();
  return d;
}

inline std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycle_data().cycles) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

inline std::string Permutation::to_image_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i] + 1);
  }
  return s + "]";
}

namespace detail {

inline void skip_ws(std::string_view t, std::size_t& i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t' || t[i] == '\n' || t[i] == '\r')) ++i;
}

inline long long read_int(std::string_view t, std::size_t& i) {
  skip_ws(t, i);
  const std::size_t start = i;
  long long v = 0;
  while (i < t.size() && t[i] >= '0' && t[i] <= '9') {
    v = v * 10 + (t[i] - '0');
    if (v > 100000) throw ParseError("integer too large");
    ++i;
  }
  if (i == start) throw ParseError("expected integer at offset " + std::to_string(start));
  skip_ws(t, i);
  return v;
}

}  // namespace detail

inline Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::size_t i = 0;
  detail::skip_ws(text, i);
  if (i < text.size() && text[i] == '[') {
    ++i;
    std::vector<long long> img;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == ']') {
      ++i;
    } else {
      for (;;) {
        img.push_back(detail::read_int(text, i));
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ']') {
          ++i;
          break;
        }
        throw ParseError("malformed image array");
      }
    }
    detail::skip_ws(text, i);
    if (i != text.size()) throw ParseError("trailing characters after image array");
    if (degree != 0 && img.size() != degree) throw ParseError("image array has wrong length");
    return from_one_based(img);
  }

  std::vector<std::vector<int>> cycles;
  long long max_point = 0;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<int> c;
    detail::skip_ws(text, i);
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" denotes the identity
    } else {
      for (;;) {
        const long long v = detail::read_int(text, i);
        max_point = std::max(max_point, v);
        c.push_back(static_cast<int>(v));
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("malformed cycle");
      }
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    detail::skip_ws(text, i);
  }
  if (degree == 0) degree = static_cast<std::size_t>(max_point);
  return from_cycles(degree, cycles);
}

}  // namespace bvl

template <>
struct std::hash<bvl::Permutation> {
  std::size_t operator()(const bvl::Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ p.degree());
  }
};
