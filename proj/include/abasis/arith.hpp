#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "abasis/error.hpp"

namespace abasis {

using Int = std::int64_t;

/// Non-negative remainder of `x` modulo `m` (m > 0).
inline Int floor_mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

inline Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CapacityError("integer overflow in multiplication");
  return out;
}

inline Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw CapacityError("integer overflow in addition");
  return out;
}

inline Int checked_lcm(Int a, Int b) { return checked_mul(a / std::gcd(a, b), b); }

/// Distinct prime factors of n > 0, ascending.
inline std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Number of distinct primes dividing n (the length of the radical).
inline int radical_length(Int n) { return static_cast<int>(prime_divisors(n).size()); }

/// Number of prime factors of n counted with multiplicity.
inline int total_length(Int n) {
  int count = 0;
  for (Int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  return n > 1 ? count + 1 : count;
}

}  // namespace abasis
