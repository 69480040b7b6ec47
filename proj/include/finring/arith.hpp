#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "finring/error.hpp"

namespace finring {

using Coord = std::int64_t;

namespace arith {

inline Coord checked_mul(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer product overflows 64 bits");
  return out;
}

inline Coord checked_add(Coord a, Coord b) {
  Coord out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error(Errc::Overflow, "integer sum overflows 64 bits");
  return out;
}

/// Least non-negative residue.
inline Coord mod(Coord a, Coord m) {
  Coord r = a % m;
  return r < 0 ? r + m : r;
}

inline Coord mulmod(Coord a, Coord b, Coord m) {
  return static_cast<Coord>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

inline Coord ipow(Coord base, unsigned exp) {
  Coord out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

struct ExtGcd {
  Coord g, x, y;  // x*a + y*b = g >= 0
};

inline ExtGcd ext_gcd(Coord a, Coord b) {
  Coord old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Coord q = old_r / r;
    Coord tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline bool is_prime(Coord n) {
  if (n < 2) return false;
  for (Coord d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<Coord, unsigned>> factorize(Coord n) {
  std::vector<std::pair<Coord, unsigned>> out;
  for (Coord d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<Coord> prime_divisors(Coord n) {
  std::vector<Coord> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// Number of distinct prime divisors; omega(1) = 0.
inline unsigned omega(Coord n) { return static_cast<unsigned>(factorize(n).size()); }

struct PrimePower {
  Coord p;
  unsigned e;
};

/// Returns (p, e) with n = p^e, or nothing when n is not a prime power (n = 1 included).
inline std::optional<PrimePower> as_prime_power(Coord n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

/// Exact (q^rho - 1)/(q - 1) = 1 + q + ... + q^(rho-1).
inline Coord projective_count(Coord q, unsigned rho) {
  Coord sum = 0, term = 1;
  for (unsigned i = 0; i < rho; ++i) {
    sum = checked_add(sum, term);
    term = checked_mul(term, q);
  }
  return sum;
}

/// Solution of x = a mod m, x = b mod n for coprime m, n, in [0, m*n).
inline Coord crt(Coord a, Coord m, Coord b, Coord n) {
  auto [g, u, v] = ext_gcd(m, n);
  if (g != 1) throw Error(Errc::BadParameters, "crt moduli are not coprime");
  Coord mn = checked_mul(m, n);
  __int128 x = static_cast<__int128>(a) * v % mn * n + static_cast<__int128>(b) * u % mn * m;
  x %= mn;
  if (x < 0) x += mn;
  return static_cast<Coord>(x);
}

}  // namespace arith
}  // namespace finring
