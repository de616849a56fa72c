#pragma once

// Deterministic Schreier-Sims. Every Schreier generator is sifted, so the
// resulting chain is exact and its construction depends only on the input
// generator order.

#include <cstddef>
#include <utility>
#include <vector>

#include "bvl/numtheory.hpp"
#include "bvl/permutation.hpp"

namespace bvl {

class StabilizerChain {
 public:
  struct Level {
    point_t base = 0;
    std::vector<Permutation> gens;
    std::vector<point_t> orbit;
    std::vector<int> orbit_index;           // point -> index in orbit, or -1
    std::vector<Permutation> transversal;   // base * transversal[k] = orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  StabilizerChain() = default;

  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    for (const auto& g : generators) {
      if (g.degree() != degree) throw DegreeMismatch("stabilizer chain: generator degree");
      if (g.is_identity()) continue;
      auto [residue, depth] = sift(g, 0);
      if (!residue.is_identity()) add_generator(0, residue);
    }
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::vector<point_t> base() const {
    std::vector<point_t> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& l : levels_) o *= static_cast<unsigned>(l.orbit.size());
    return o;
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    return sift(g, 0).first.is_identity();
  }

  /// Strips g through the levels starting at `from`; returns the residue and
  /// the level at which stripping stopped (levels().size() if it ran through).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      const Level& lv = levels_[l];
      const int idx = lv.orbit_index[g[lv.base]];
      if (idx < 0) return {std::move(g), l};
      g = g * lv.inverse_transversal[static_cast<std::size_t>(idx)];
    }
    return {std::move(g), levels_.size()};
  }

 private:
  void add_generator(std::size_t l, const Permutation& g) {
    if (l == levels_.size()) {
      Level lv;
      for (std::size_t i = 0; i < degree_; ++i) {
        if (g[i] != i) {
          lv.base = static_cast<point_t>(i);
          break;
        }
      }
      lv.orbit_index.assign(degree_, -1);
      lv.orbit.push_back(lv.base);
      lv.orbit_index[lv.base] = 0;
      lv.transversal.push_back(Permutation::identity(degree_));
      lv.inverse_transversal.push_back(Permutation::identity(degree_));
      levels_.push_back(std::move(lv));
    }

    const std::size_t old_orbit = levels_[l].orbit.size();
    const std::size_t old_gens = levels_[l].gens.size();
    levels_[l].gens.push_back(g);
    extend_orbit(l);

    // Schreier generators not already known to sift: those involving a new
    // orbit point or the new generator.
    for (std::size_t k = 0; k < levels_[l].orbit.size(); ++k) {
      for (std::size_t s = 0; s < levels_[l].gens.size(); ++s) {
        if (k < old_orbit && s < old_gens) continue;
        const Level& lv = levels_[l];
        const Permutation& gen = lv.gens[s];
        const point_t image = gen[lv.orbit[k]];
        const auto j = static_cast<std::size_t>(lv.orbit_index[image]);
        Permutation schreier = lv.transversal[k] * gen * lv.inverse_transversal[j];
        if (schreier.is_identity()) continue;
        auto [residue, depth] = sift(std::move(schreier), l + 1);
        if (!residue.is_identity()) add_generator(l + 1, residue);
      }
    }
  }

  void extend_orbit(std::size_t l) {
    Level& lv = levels_[l];
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const auto& gen : lv.gens) {
        const point_t t = gen[lv.orbit[k]];
        if (lv.orbit_index[t] >= 0) continue;
        lv.orbit_index[t] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(t);
        Permutation u = lv.transversal[k] * gen;
        lv.inverse_transversal.push_back(u.inverse());
        lv.transversal.push_back(std::move(u));
      }
    }
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace bvl
