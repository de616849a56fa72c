#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bvl/error.hpp"

namespace bvl {

using BigInt = boost::multiprecision::cpp_int;

/// Orders of elements of A_n^k are lcms of element orders of A_n, which
/// stay below 2^128 for every degree this library accepts.
using wide_t = unsigned __int128;

inline wide_t wide_gcd(wide_t a, wide_t b) {
  while (b != 0) {
    const wide_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}
inline wide_t wide_lcm(wide_t a, wide_t b) { return a / wide_gcd(a, b) * b; }

inline std::vector<int> primes_upto(int n) {
  if (n < 2) return {};
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> out;
  for (int i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (long long j = static_cast<long long>(i) * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

inline int prime_pi(int n) {
  if (n < 2) throw InvalidArgument("prime_pi needs n >= 2");
  return static_cast<int>(primes_upto(n).size());
}

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(wide_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; static_cast<wide_t>(d) * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(static_cast<std::uint64_t>(v));
  return out;
}

/// Largest power of p dividing v (v > 0).
template <class Int>
Int p_part(Int v, std::uint64_t p) {
  Int out = 1;
  while (v % p == 0) {
    v /= p;
    out *= p;
  }
  return out;
}

inline int p_valuation(wide_t v, std::uint64_t p) {
  int e = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

/// p-part of exp(A_n). An m-cycle is even iff m is odd; an even-length cycle
/// needs a second even-length cycle to lie in A_n, hence the "+2" for p = 2.
inline std::uint64_t exponent_p_part(int n, std::uint64_t p) {
  std::uint64_t q = 1;
  if (p == 2) {
    while (2 * q + 2 <= static_cast<std::uint64_t>(n)) q *= 2;
    return q;
  }
  while (q * p <= static_cast<std::uint64_t>(n)) q *= p;
  return q;
}

/// exp(A_n): the lcm of element orders of A_n.
inline BigInt exponent_an(int n) {
  if (n < 1 || n > 255) throw InvalidArgument("exponent_an: degree out of range");
  BigInt e = 1;
  for (int p : primes_upto(n)) e *= exponent_p_part(n, static_cast<std::uint64_t>(p));
  return e;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt alternating_order(int n) { return n < 2 ? BigInt(1) : factorial(n) / 2; }

inline std::string to_string(wide_t v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return s;
}

}  // namespace bvl
