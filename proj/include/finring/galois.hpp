#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "finring/arith.hpp"
#include "finring/ring.hpp"
#include "finring/subgroup.hpp"

namespace finring {

namespace poly {

/// Dense polynomial over Z/p, coefficients from degree 0 upward.
using Poly = std::vector<Coord>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mod(Poly a, const Poly& f, Coord p) {
  for (Coord& c : a) c = arith::mod(c, p);
  trim(a);
  const std::size_t n = f.size() - 1;
  const Coord lead_inv = arith::mod(arith::ext_gcd(f.back(), p).x, p);
  while (a.size() > n) {
    const Coord c = arith::mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] = arith::mod(a[shift + i] - arith::mulmod(c, f[i], p), p);
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, Coord p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = arith::mod(out[i + j] + arith::mulmod(a[i], b[j], p), p);
  return mod(std::move(out), f, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, Coord p) {
  Poly out = mod({1}, f, p);
  base = mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1u) out = mulmod(out, base, f, p);
    e >>= 1u;
    if (e) base = mulmod(base, base, f, p);
  }
  return out;
}

inline Poly gcd(Poly a, Poly b, Coord p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// x^(p^k) mod f.
inline Poly frobenius_power(const Poly& f, Coord p, unsigned k) {
  Poly x = mod({0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) x = powmod(x, static_cast<std::uint64_t>(p), f, p);
  return x;
}

/// Monic f of degree n is irreducible over F_p iff f | x^(p^n) - x and
/// gcd(f, x^(p^(n/l)) - x) = 1 for every prime l | n.
inline bool is_irreducible(const Poly& f, Coord p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  auto minus_x = [&](Poly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = arith::mod(h[1] - 1, p);
    return mod(std::move(h), f, p);
  };
  if (!minus_x(frobenius_power(f, p, n)).empty()) return false;
  for (Coord l : arith::prime_divisors(n))
    if (gcd(f, minus_x(frobenius_power(f, p, n / static_cast<unsigned>(l))), p).size() != 1) return false;
  return true;
}

/// The least monic irreducible of degree n, ordering candidates by the integer
/// sum c_i p^i of their non-leading coefficients.
inline Poly least_irreducible(Coord p, unsigned n) {
  const Coord count = arith::ipow(p, n);
  for (Coord code = 0; code < count; ++code) {
    Poly f(n + 1, 0);
    Coord c = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error(Errc::BadParameters, "no irreducible polynomial found");
}

inline std::string to_string(const Poly& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || f[i] != 1) s += std::to_string(f[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

}  // namespace poly

inline std::string galois_label(Coord p, unsigned N, unsigned n) {
  if (n == 1) return N == 1 ? "F_" + std::to_string(p) : "Z/" + std::to_string(arith::ipow(p, N));
  if (N == 1) return "F_" + std::to_string(arith::ipow(p, n));
  return "GR(" + std::to_string(arith::ipow(p, N)) + "," + std::to_string(n) + ")";
}

/// (Z/p^N)[x]/(f) with f the least monic irreducible of degree n mod p.
/// Generators are 1, x, ..., x^(n-1), each of additive order p^N.
inline FiniteRing galois_ring(Coord p, unsigned N, unsigned n) {
  if (!arith::is_prime(p) || N < 1 || n < 1) throw Error(Errc::BadParameters, "galois ring needs prime p, N >= 1, n >= 1");
  const Coord mod = arith::ipow(p, N);
  const poly::Poly f = poly::least_irreducible(p, n);
  // Reduce x^e for e < 2n - 1 over Z/p^N using x^n = -(f_0 + ... + f_{n-1} x^{n-1}).
  std::vector<std::vector<Coord>> xpow(2 * n - 1, std::vector<Coord>(n, 0));
  for (unsigned e = 0; e < 2 * n - 1; ++e) {
    if (e < n) {
      xpow[e][e] = 1;
      continue;
    }
    const auto& prev = xpow[e - 1];
    std::vector<Coord> next(n, 0);
    for (unsigned i = 0; i + 1 < n; ++i) next[i + 1] = prev[i];
    const Coord top = prev[n - 1];
    for (unsigned i = 0; i < n; ++i) next[i] = arith::mod(next[i] - arith::mulmod(top, f[i], mod), mod);
    xpow[e] = std::move(next);
  }
  ProductTable table(n, std::vector<std::vector<Coord>>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) table[i][j] = xpow[i + j];
  std::vector<Coord> one(n, 0);
  one[0] = 1;
  return make_ring(std::vector<Coord>(n, mod), std::move(table), std::move(one), galois_label(p, N, n));
}

/// Generator matching against galois_ring(p, N, n): a root y of the lifted
/// defining polynomial with 1, y, ..., y^(n-1) spanning s. Since x -> y is then a
/// surjective ring map from a ring of the same order, it is an isomorphism.
inline std::optional<Element> galois_isomorphism(const FiniteRing& s, Coord p, unsigned N, unsigned n) {
  const FiniteRing g = galois_ring(p, N, n);
  if (g.order() != s.order()) return std::nullopt;
  if (!s.is_zero(s.int_mul(arith::ipow(p, N), s.one()))) return std::nullopt;
  const poly::Poly f = poly::least_irreducible(p, n);
  std::optional<Element> root;
  s.for_each_element([&](const Element& y) {
    if (root) return;
    Element acc = s.zero(), power = s.one();
    std::vector<Element> powers;
    for (unsigned i = 0; i <= n; ++i) {
      if (i < n) powers.push_back(power);
      acc = s.add(acc, s.int_mul(f[i], power));
      power = s.mul(power, y);
    }
    if (!s.is_zero(acc)) return;
    if (subgroup_generated(s, powers).order() == s.order()) root = y;
  });
  return root;
}

}  // namespace finring
