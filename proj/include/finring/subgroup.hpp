#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "finring/arith.hpp"
#include "finring/ring.hpp"

namespace finring {

/// Subgroup H of G = Z/d_1 (+) ... (+) Z/d_k in canonical echelon form.
///
/// Basis row i has a pivot column c_i (strictly increasing in i), zeros in
/// columns before c_i, and pivot value h_i, a proper divisor of d_{c_i}. Entries
/// of any row in another row's pivot column c_l are reduced into [0, h_l).
/// This is the Hermite normal form of the preimage of H in Z^k, with rows
/// whose pivot equals d_c dropped, so two subgroups are equal as sets iff
/// their bases are equal.
///
/// Every element of H is sum a_i b_i for unique a_i in [0, o_i) where
/// o_i = d_{c_i} / h_i is the layer order of row i; |H| = prod o_i.
class AdditiveSubgroup {
 public:
  AdditiveSubgroup() = default;

  /// The trivial subgroup of the given ambient group.
  explicit AdditiveSubgroup(std::vector<Coord> moduli) : moduli_(std::move(moduli)) {}

  static AdditiveSubgroup generated(const std::vector<Coord>& moduli, std::span<const Element> gens);

  const std::vector<Coord>& moduli() const { return moduli_; }
  const std::vector<Element>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const std::vector<Coord>& layer_orders() const { return layer_orders_; }

  std::uint64_t order() const {
    std::uint64_t out = 1;
    for (Coord o : layer_orders_) out *= static_cast<std::uint64_t>(o);
    return out;
  }

  /// Canonical representative of the coset x + H.
  Element reduce(Element x) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Coord h = pivot_value(i);
      const Coord q = x.coords[pivots_[i]] / h;
      if (q != 0) subtract_multiple(x, q, basis_[i]);
    }
    return x;
  }

  bool contains(const Element& x) const {
    const Element r = reduce(x);
    for (Coord c : r.coords)
      if (c != 0) return false;
    return true;
  }

  /// Layer coefficients (a_i) of x in H; x must be a member.
  std::vector<Coord> coefficients(Element x) const {
    std::vector<Coord> out(basis_.size(), 0);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      out[i] = x.coords[pivots_[i]] / pivot_value(i);
      if (out[i] != 0) subtract_multiple(x, out[i], basis_[i]);
    }
    return out;
  }

  bool is_subgroup_of(const AdditiveSubgroup& other) const {
    for (const Element& b : basis_)
      if (!other.contains(b)) return false;
    return true;
  }

  /// All elements, in layer-coefficient order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order());
    std::vector<Coord> a(basis_.size(), 0);
    for (std::uint64_t n = 0; n < order(); ++n) {
      Element e(std::vector<Coord>(moduli_.size(), 0));
      for (std::size_t i = 0; i < basis_.size(); ++i)
        if (a[i] != 0) add_multiple(e, a[i], basis_[i]);
      out.push_back(std::move(e));
      for (std::size_t i = basis_.size(); i-- > 0;) {
        if (++a[i] < layer_orders_[i]) break;
        a[i] = 0;
      }
    }
    return out;
  }

  Coord pivot_value(std::size_t i) const { return moduli_[pivots_[i]] / layer_orders_[i]; }

  friend bool operator==(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
    return a.moduli_ == b.moduli_ && a.basis_ == b.basis_;
  }
  friend auto operator<=>(const AdditiveSubgroup& a, const AdditiveSubgroup& b) { return a.basis_ <=> b.basis_; }

 private:
  void subtract_multiple(Element& x, Coord q, const Element& row) const {
    for (std::size_t j = 0; j < moduli_.size(); ++j)
      if (row.coords[j] != 0) x.coords[j] = arith::mod(x.coords[j] - arith::mulmod(q, row.coords[j], moduli_[j]), moduli_[j]);
  }
  void add_multiple(Element& x, Coord q, const Element& row) const { subtract_multiple(x, -q, row); }

  std::vector<Coord> moduli_;
  std::vector<Element> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<Coord> layer_orders_;
};

inline AdditiveSubgroup AdditiveSubgroup::generated(const std::vector<Coord>& moduli, std::span<const Element> gens) {
  using Row = std::vector<Coord>;
  const std::size_t k = moduli.size();
  auto reduce_tail = [&](Row& v, std::size_t from) {
    for (std::size_t j = from; j < k; ++j) v[j] = arith::mod(v[j], moduli[j]);
  };
  auto nonzero = [](const Row& v) {
    for (Coord c : v)
      if (c != 0) return true;
    return false;
  };

  std::vector<Row> work;
  for (const Element& g : gens) {
    Row v = g.coords;
    reduce_tail(v, 0);
    if (nonzero(v)) work.push_back(std::move(v));
  }

  AdditiveSubgroup out(moduli);
  std::vector<Row> rows;
  for (std::size_t c = 0; c < k; ++c) {
    // The pivot row starts as the implicit lattice vector d_c e_c.
    Row pivot(k, 0);
    pivot[c] = moduli[c];
    std::vector<Row> rest;
    for (Row& v : work) {
      if (v[c] == 0) {
        rest.push_back(std::move(v));
        continue;
      }
      const auto [g, a, b] = arith::ext_gcd(pivot[c], v[c]);
      const Coord vp = v[c] / g, pp = pivot[c] / g;
      Row np(k, 0), nv(k, 0);
      for (std::size_t j = c + 1; j < k; ++j) {
        np[j] = arith::mod(arith::mulmod(a, pivot[j], moduli[j]) + arith::mulmod(b, v[j], moduli[j]), moduli[j]);
        nv[j] = arith::mod(arith::mulmod(vp, pivot[j], moduli[j]) - arith::mulmod(pp, v[j], moduli[j]), moduli[j]);
      }
      np[c] = g;
      pivot = std::move(np);
      if (nonzero(nv)) rest.push_back(std::move(nv));
    }
    work = std::move(rest);
    const Coord h = pivot[c];
    if (h == moduli[c]) {
      pivot[c] = 0;
      if (nonzero(pivot)) work.push_back(std::move(pivot));
      continue;
    }
    // (d_c / h) * pivot - d_c e_c stays in the lattice.
    Row tail(k, 0);
    const Coord o = moduli[c] / h;
    for (std::size_t j = c + 1; j < k; ++j) tail[j] = arith::mulmod(o, pivot[j], moduli[j]);
    if (nonzero(tail)) work.push_back(std::move(tail));
    out.pivots_.push_back(c);
    out.layer_orders_.push_back(o);
    rows.push_back(std::move(pivot));
  }

  // Reduce entries above each pivot, in increasing pivot order.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t c = out.pivots_[i];
    const Coord h = moduli[c] / out.layer_orders_[i];
    for (std::size_t j = 0; j < i; ++j) {
      const Coord q = rows[j][c] / h;
      if (q == 0) continue;
      for (std::size_t l = c; l < k; ++l) rows[j][l] = arith::mod(rows[j][l] - arith::mulmod(q, rows[i][l], moduli[l]), moduli[l]);
    }
  }
  for (Row& r : rows) out.basis_.emplace_back(std::move(r));
  return out;
}

inline AdditiveSubgroup subgroup_generated(const FiniteRing& r, std::span<const Element> gens) {
  return AdditiveSubgroup::generated(r.orders(), gens);
}

inline AdditiveSubgroup subgroup_sum(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  std::vector<Element> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return AdditiveSubgroup::generated(a.moduli(), gens);
}

/// Intersection by filtering the smaller group's elements.
inline AdditiveSubgroup subgroup_intersection(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
  const AdditiveSubgroup& small = a.order() <= b.order() ? a : b;
  const AdditiveSubgroup& large = a.order() <= b.order() ? b : a;
  std::vector<Element> keep;
  for (Element& e : small.elements())
    if (large.contains(e)) keep.push_back(std::move(e));
  return AdditiveSubgroup::generated(a.moduli(), keep);
}

/// The whole additive group of r.
inline AdditiveSubgroup full_group(const FiniteRing& r) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.generator(i));
  return subgroup_generated(r, gens);
}

}  // namespace finring
