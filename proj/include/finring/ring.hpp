#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finring/arith.hpp"
#include "finring/error.hpp"

namespace finring {

/// Default limit on element scans (idempotents, unit census, conductor).
inline constexpr std::uint64_t kDefaultScanBound = 1u << 16;

/// Default limit for the brute-force subring / ideal census.
inline constexpr std::uint64_t kDefaultOracleBound = 4096;

/// A ring element as its coordinate vector over the additive generators.
/// Coordinate i lies in [0, d_i); equality and ordering are coordinate-wise
/// (ordering is lexicographic, coordinate 0 most significant).
struct Element {
  std::vector<Coord> coords;

  Element() = default;
  explicit Element(std::vector<Coord> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  Coord operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

inline std::string to_string(const Element& e) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ')';
  return os.str();
}

using ProductTable = std::vector<std::vector<std::vector<Coord>>>;

class FiniteRing;
FiniteRing make_ring(std::vector<Coord> orders, ProductTable mul, std::vector<Coord> one,
                     std::string label = {});

/// Finite commutative unital ring in additive presentation:
/// R = Z/d_1 g_1 (+) ... (+) Z/d_k g_k, with g_i * g_j given by a k x k table
/// of coordinate vectors and multiplication extended bilinearly.
///
/// Construction goes through make_ring, which checks the ring axioms on
/// generators only. That is enough: once d_i * (g_i g_j) = 0 the bilinear
/// extension is well defined, and commutativity, associativity and the
/// identity law are multilinear in their arguments, so they hold for all
/// elements as soon as they hold for all generator tuples.
class FiniteRing {
 public:
  FiniteRing() = default;

  std::size_t rank() const { return orders_.size(); }
  const std::vector<Coord>& orders() const { return orders_; }
  std::uint64_t order() const { return order_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Coordinates of g_i * g_j.
  const Element& product(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  Element zero() const { return Element(std::vector<Coord>(rank(), 0)); }
  const Element& one() const { return one_; }
  Element generator(std::size_t i) const {
    Element e = zero();
    e.coords[i] = orders_[i] == 1 ? 0 : 1;
    return e;
  }

  /// Reduces an arbitrary integer vector into canonical coordinates.
  Element reduce(std::vector<Coord> c) const {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = arith::mod(c[i], orders_[i]);
    return Element(std::move(c));
  }

  Element add(const Element& a, const Element& b) const {
    Element out = a;
    for (std::size_t i = 0; i < rank(); ++i) {
      out.coords[i] += b.coords[i];
      if (out.coords[i] >= orders_[i]) out.coords[i] -= orders_[i];
    }
    return out;
  }

  Element neg(const Element& a) const {
    Element out = a;
    for (std::size_t i = 0; i < rank(); ++i)
      if (out.coords[i] != 0) out.coords[i] = orders_[i] - out.coords[i];
    return out;
  }

  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  Element int_mul(Coord c, const Element& a) const {
    Element out = a;
    for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = arith::mulmod(c, a.coords[i], orders_[i]);
    return out;
  }

  Element mul(const Element& a, const Element& b) const {
    std::vector<Coord> acc(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i) {
      if (a.coords[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (b.coords[j] == 0) continue;
        const __int128 c = static_cast<__int128>(a.coords[i]) * b.coords[j];
        const auto& t = table_[i][j].coords;
        for (std::size_t l = 0; l < rank(); ++l) {
          if (t[l] == 0) continue;
          acc[l] = static_cast<Coord>((acc[l] + c % orders_[l] * t[l]) % orders_[l]);
        }
      }
    }
    return Element(std::move(acc));
  }

  Element pow(Element base, std::uint64_t exp) const {
    Element out = one_;
    while (exp > 0) {
      if (exp & 1u) out = mul(out, base);
      exp >>= 1u;
      if (exp) base = mul(base, base);
    }
    return out;
  }

  bool is_zero(const Element& a) const {
    return std::all_of(a.coords.begin(), a.coords.end(), [](Coord c) { return c == 0; });
  }

  /// Additive order of a.
  Coord additive_order(const Element& a) const {
    Coord out = 1;
    for (std::size_t i = 0; i < rank(); ++i) out = std::lcm(out, orders_[i] / std::gcd(orders_[i], a.coords[i]));
    return out;
  }

  /// Position of e in lexicographic element order.
  std::uint64_t index_of(const Element& e) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < rank(); ++i) idx = idx * static_cast<std::uint64_t>(orders_[i]) + e.coords[i];
    return idx;
  }

  Element element_at(std::uint64_t idx) const {
    std::vector<Coord> c(rank(), 0);
    for (std::size_t i = rank(); i-- > 0;) {
      c[i] = static_cast<Coord>(idx % static_cast<std::uint64_t>(orders_[i]));
      idx /= static_cast<std::uint64_t>(orders_[i]);
    }
    return Element(std::move(c));
  }

  /// Visits every element in lexicographic order.
  template <class F>
  void for_each_element(F&& f) const {
    Element e = zero();
    for (std::uint64_t n = 0; n < order_; ++n) {
      f(static_cast<const Element&>(e));
      for (std::size_t i = rank(); i-- > 0;) {
        if (++e.coords[i] < orders_[i]) break;
        e.coords[i] = 0;
      }
    }
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    for_each_element([&](const Element& e) { out.push_back(e); });
    return out;
  }

  /// Throws ScanBoundExceeded when |R| exceeds bound.
  void require_scan(std::uint64_t bound, std::string_view what) const {
    if (order_ > bound)
      throw Error(Errc::ScanBoundExceeded, std::string(what) + " needs a scan of " + std::to_string(order_) +
                                               " elements; bound is " + std::to_string(bound));
  }

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.orders_ == b.orders_ && a.table_ == b.table_ && a.one_ == b.one_;
  }

  friend FiniteRing make_ring(std::vector<Coord> orders, ProductTable mul, std::vector<Coord> one,
                              std::string label);

 private:
  std::vector<Coord> orders_;
  std::vector<std::vector<Element>> table_;
  Element one_;
  std::string label_;
  std::uint64_t order_ = 1;
};

namespace detail {

inline std::string idx_list(std::initializer_list<std::size_t> idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : ",") + std::to_string(i);
  return "generators (" + s + ")";
}

}  // namespace detail

/// Validates and builds a ring. Errors name the offending generator indices.
inline FiniteRing make_ring(std::vector<Coord> orders, ProductTable mul, std::vector<Coord> one,
                            std::string label) {
  const std::size_t k = orders.size();
  FiniteRing r;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (orders[i] < 1) throw Error(Errc::IllFormedTable, "generator " + std::to_string(i) + " has order < 1");
    if (__builtin_mul_overflow(total, static_cast<std::uint64_t>(orders[i]), &total) || total > (1ull << 62))
      throw Error(Errc::IllFormedTable, "ring order is too large");
  }
  if (mul.size() != k) throw Error(Errc::IllFormedTable, "mul table has " + std::to_string(mul.size()) + " rows");
  if (one.size() != k) throw Error(Errc::IllFormedTable, "identity vector has wrong length");
  for (std::size_t i = 0; i < k; ++i) {
    if (one[i] < 0 || one[i] >= orders[i])
      throw Error(Errc::IllFormedTable, "identity coordinate " + std::to_string(i) + " out of range");
    if (mul[i].size() != k) throw Error(Errc::IllFormedTable, "mul row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
      if (mul[i][j].size() != k) throw Error(Errc::IllFormedTable, "entry " + detail::idx_list({i, j}) + " has wrong length");
      for (std::size_t l = 0; l < k; ++l)
        if (mul[i][j][l] < 0 || mul[i][j][l] >= orders[l])
          throw Error(Errc::IllFormedTable, "entry " + detail::idx_list({i, j}) + " coordinate out of range");
    }
  }
  r.orders_ = std::move(orders);
  r.order_ = total;
  r.table_.assign(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) r.table_[i][j] = Element(mul[i][j]);
  r.one_ = Element(std::move(one));
  r.label_ = std::move(label);

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (r.table_[i][j] != r.table_[j][i]) throw Error(Errc::NotCommutative, detail::idx_list({i, j}));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (!r.is_zero(r.int_mul(r.orders_[i], r.table_[i][j])))
        throw Error(Errc::IllFormedTable, "d_i * (g_i g_j) != 0 for " + detail::idx_list({i, j}));
  for (std::size_t i = 0; i < k; ++i) {
    const Element g = r.generator(i);
    if (r.mul(r.one_, g) != g) throw Error(Errc::NoIdentity, "one * g != g for " + detail::idx_list({i}));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) {
        const Element gi = r.generator(i), gj = r.generator(j), gl = r.generator(l);
        if (r.mul(r.mul(gi, gj), gl) != r.mul(gi, r.mul(gj, gl)))
          throw Error(Errc::NotAssociative, detail::idx_list({i, j, l}));
      }
  return r;
}

/// Additive order of the identity.
inline Coord characteristic(const FiniteRing& r) { return r.additive_order(r.one()); }

}  // namespace finring
