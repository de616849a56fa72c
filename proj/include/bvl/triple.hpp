#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bvl/permutation.hpp"

namespace bvl {

using TripleType = std::array<std::uint64_t, 3>;

inline std::string to_string(const TripleType& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

/// (x, y, z) with xyz = 1 under left-to-right composition. z is always derived
/// from x and y; the printed z of a catalog entry is only a cross-check.
struct GeneratingTriple {
  Permutation x, y, z;
  std::string provenance;
  std::string proof;  // how <x,y> = A_n was established, once verified

  static GeneratingTriple from_xy(Permutation x, Permutation y, std::string provenance = {}) {
    Permutation z = (x * y).inverse();
    return {std::move(x), std::move(y), std::move(z), std::move(provenance), {}};
  }

  std::size_t degree() const { return x.degree(); }
  TripleType type() const { return {x.order(), y.order(), z.order()}; }
  bool is_product_identity() const { return (x * y * z).is_identity(); }

  /// (y, z, x).
  GeneratingTriple rotated() const { return {y, z, x, provenance + "/rot", proof}; }
  /// (z^-1, y^-1, x^-1), which again multiplies to the identity.
  GeneratingTriple inverse_reversed() const {
    return {z.inverse(), y.inverse(), x.inverse(), provenance + "/invrev", proof};
  }
  const Permutation& at(int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  bool same_elements(const GeneratingTriple& o) const { return x == o.x && y == o.y && z == o.z; }
};

}  // namespace bvl
