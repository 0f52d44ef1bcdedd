#pragma once

// Small-integer number theory on 64-bit values: factorization, Euler phi,
// divisors and multiplicative orders modulo m.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "linfactor/error.hpp"

namespace linfactor {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using IntFactorization = std::vector<std::pair<u64, unsigned>>;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

inline u64 checked_mul(u64 a, u64 b) {
  u128 r = static_cast<u128>(a) * b;
  if (r >> 64) fail(Errc::Overflow, std::to_string(a) + " * " + std::to_string(b) + " exceeds 2^64");
  return static_cast<u64>(r);
}

inline u64 checked_pow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    r = checked_mul(r, base);
    if (r == 0) return 0;
  }
  return r;
}

inline u64 checked_lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

/// Least r >= 0 with base^r >= value; value 0 or 1 gives 0.
inline unsigned ceil_log(u64 base, u64 value) {
  unsigned r = 0;
  u128 acc = 1;
  while (acc < value) {
    acc *= base;
    ++r;
  }
  return r;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// Brent's variant of Pollard rho; n is odd, composite and has no factor below 10^6.
inline u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_large(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_large(d, primes);
  factor_large(n / d, primes);
}

}  // namespace detail

/// Trial division up to 10^6, then Pollard rho on the cofactor.
inline IntFactorization integer_factor(u64 n) {
  require(n >= 1, Errc::PreconditionViolated, "integer_factor requires n >= 1");
  IntFactorization out;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  };
  take(2);
  for (u64 p = 3; p <= 1000000 && p * p <= n; p += 2) take(p);
  if (n > 1) {
    std::vector<u64> primes;
    detail::factor_large(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
      if (!out.empty() && out.back().first == p)
        ++out.back().second;
      else
        out.emplace_back(p, 1);
    }
  }
  return out;
}

inline u64 integer_phi(u64 n) {
  u64 phi = n;
  for (auto [p, e] : integer_factor(n)) phi = phi / p * (p - 1);
  return phi;
}

inline std::vector<u64> integer_divisors(u64 n) {
  std::vector<u64> divs{1};
  for (auto [p, e] : integer_factor(n)) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

/// Least k > 0 with a^k = 1 (mod m).
inline u64 ord_mod(u64 a, u64 m) {
  require(m >= 1, Errc::PreconditionViolated, "ord_mod requires m >= 1");
  if (m == 1) return 1;
  require(std::gcd(a % m, m) == 1, Errc::NotCoprime,
          "ord_mod: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  u64 order = integer_phi(m);
  for (auto [r, e] : integer_factor(order)) {
    for (unsigned i = 0; i < e && order % r == 0 && powmod(a, order / r, m) == 1; ++i) order /= r;
  }
  return order;
}

}  // namespace linfactor
