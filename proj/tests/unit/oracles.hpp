#pragma once

// Independent reference computations used to cross-check the library.

#include <cstdint>
#include <vector>

#include "wittorders/witt.hpp"

namespace oracle {

inline std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

// W_n(F_p) -> Z/p^n, (a_0, ..., a_{n-1}) -> sum_i p^i [a_i], where [a] = a^(p^(n-1)) mod p^n is
// the Teichmuller representative (Frobenius is trivial on F_p).
inline std::uint64_t witt_to_integer(const wittorders::WittVector& w, std::uint64_t p) {
  const std::size_t n = w.components.size();
  std::uint64_t modulus = 1;
  for (std::size_t i = 0; i < n; ++i) modulus *= p;
  const std::uint64_t frob = modulus / p;
  std::uint64_t total = 0;
  std::uint64_t scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t teich = power_mod(w.components[i].c[0], frob, modulus);
    total = (total + scale * teich) % modulus;
    scale *= p;
  }
  return total;
}

inline std::uint64_t integer_power(std::uint64_t p, std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= p;
  return r;
}

}  // namespace oracle
