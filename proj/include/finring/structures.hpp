#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finring/ring.hpp"
#include "finring/smith.hpp"
#include "finring/subgroup.hpp"

namespace finring {

/// A unital subring, held as its additive subgroup.
struct Subring {
  AdditiveSubgroup group;
  bool contains_one = true;

  std::uint64_t order() const { return group.order(); }
  bool contains(const Element& x) const { return group.contains(x); }
  friend bool operator==(const Subring& a, const Subring& b) { return a.group == b.group; }
  friend auto operator<=>(const Subring& a, const Subring& b) { return a.group <=> b.group; }
};

struct Ideal {
  AdditiveSubgroup group;

  std::uint64_t order() const { return group.order(); }
  bool contains(const Element& x) const { return group.contains(x); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.group == b.group; }
  friend auto operator<=>(const Ideal& a, const Ideal& b) { return a.group <=> b.group; }
};

inline bool is_subring_group(const FiniteRing& r, const AdditiveSubgroup& g) {
  if (!g.contains(r.one())) return false;
  const auto& b = g.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      if (!g.contains(r.mul(b[i], b[j]))) return false;
  return true;
}

inline bool is_ideal_group(const FiniteRing& r, const AdditiveSubgroup& g) {
  for (const Element& b : g.basis())
    for (std::size_t i = 0; i < r.rank(); ++i)
      if (!g.contains(r.mul(b, r.generator(i)))) return false;
  return true;
}

inline Subring make_subring(const FiniteRing& r, AdditiveSubgroup g) {
  if (!is_subring_group(r, g)) throw Error(Errc::NotASubring, "subgroup is not a unital subring");
  return Subring{std::move(g), true};
}

inline Ideal make_ideal(const FiniteRing& r, AdditiveSubgroup g) {
  if (!is_ideal_group(r, g)) throw Error(Errc::NotAnIdeal, "subgroup is not closed under ring multiplication");
  return Ideal{std::move(g)};
}

inline Subring whole_ring(const FiniteRing& r) { return Subring{full_group(r), true}; }
inline Ideal unit_ideal(const FiniteRing& r) { return Ideal{full_group(r)}; }
inline Ideal zero_ideal(const FiniteRing& r) { return Ideal{AdditiveSubgroup(r.orders())}; }

/// x is a unit iff x R = R.
inline bool is_unit(const FiniteRing& r, const Element& x) {
  std::vector<Element> gens;
  gens.reserve(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.mul(x, r.generator(i)));
  return subgroup_generated(r, gens).order() == r.order();
}

/// x^(ord(x) - 1).
inline Element inverse(const FiniteRing& r, const Element& x) {
  if (!is_unit(r, x)) throw Error(Errc::NotAUnit, to_string(x) + " is not a unit");
  Element p = x;
  Element prev = r.one();
  while (p != r.one()) {
    prev = p;
    p = r.mul(p, x);
  }
  return prev;
}

/// Smallest ideal containing gens.
inline Ideal ideal_generated(const FiniteRing& r, std::span<const Element> gens) {
  AdditiveSubgroup g = subgroup_generated(r, gens);
  for (;;) {
    std::vector<Element> more = g.basis();
    for (const Element& b : g.basis())
      for (std::size_t i = 0; i < r.rank(); ++i) more.push_back(r.mul(b, r.generator(i)));
    AdditiveSubgroup next = subgroup_generated(r, more);
    if (next.order() == g.order()) return Ideal{std::move(g)};
    g = std::move(next);
  }
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) { return Ideal{subgroup_sum(a.group, b.group)}; }

inline Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  return Ideal{subgroup_intersection(a.group, b.group)};
}

/// I J, additively spanned by products of basis elements.
inline Ideal ideal_product(const FiniteRing& r, const Ideal& a, const Ideal& b) {
  std::vector<Element> gens;
  for (const Element& x : a.group.basis())
    for (const Element& y : b.group.basis()) gens.push_back(r.mul(x, y));
  return Ideal{subgroup_generated(r, gens)};
}

/// c R as an ideal.
inline Ideal scaled_ideal(const FiniteRing& r, Coord c) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.int_mul(c, r.generator(i)));
  return Ideal{subgroup_generated(r, gens)};
}

/// Smallest unital subring containing gens: closure of gens and 1 under
/// addition and multiplication.
inline Subring subring_generated_by(const FiniteRing& r, std::span<const Element> gens) {
  std::vector<Element> start(gens.begin(), gens.end());
  start.push_back(r.one());
  AdditiveSubgroup g = subgroup_generated(r, start);
  for (;;) {
    std::vector<Element> more = g.basis();
    const auto& b = g.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j) more.push_back(r.mul(b[i], b[j]));
    AdditiveSubgroup next = subgroup_generated(r, more);
    if (next.order() == g.order()) return Subring{std::move(g), true};
    g = std::move(next);
  }
}

inline Subring prime_subring(const FiniteRing& r) { return subring_generated_by(r, std::span<const Element>{}); }

/// R / I with its projection and a fixed section.
class QuotientRing {
 public:
  const FiniteRing& ring() const { return ring_; }
  const Ideal& modulus() const { return modulus_; }

  Element project(const Element& x) const { return Element(cp_.forward(x.coords)); }

  /// Coset representative chosen through the Smith transform.
  Element section(const Element& y) const {
    std::vector<Coord> acc(parent_orders_.size(), 0);
    for (std::size_t a = 0; a < y.size(); ++a) {
      const auto& s = cp_.section(a);
      for (std::size_t j = 0; j < acc.size(); ++j)
        acc[j] = arith::mod(acc[j] + arith::mulmod(y[a], s[j], parent_orders_[j]), parent_orders_[j]);
    }
    return Element(std::move(acc));
  }

  friend QuotientRing quotient(const FiniteRing& r, const Ideal& i);

 private:
  FiniteRing ring_;
  Ideal modulus_;
  detail::CyclicPresentation cp_;
  std::vector<Coord> parent_orders_;
};

inline QuotientRing quotient(const FiniteRing& r, const Ideal& ideal) {
  if (!is_ideal_group(r, ideal.group)) throw Error(Errc::NotAnIdeal, "quotient by a non-ideal");
  const std::size_t k = r.rank();
  detail::Matrix rel;
  for (const Element& b : ideal.group.basis()) rel.push_back(b.coords);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Coord> row(k, 0);
    row[j] = r.orders()[j];
    rel.push_back(std::move(row));
  }
  QuotientRing q;
  q.cp_ = detail::cyclic_presentation(rel, k);
  q.parent_orders_ = r.orders();
  q.modulus_ = ideal;
  const std::size_t m = q.cp_.orders.size();
  std::vector<Element> lifts;
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<Coord> e(m, 0);
    e[a] = 1;
    lifts.push_back(q.section(Element(std::move(e))));
  }
  ProductTable table(m, std::vector<std::vector<Coord>>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = q.project(r.mul(lifts[a], lifts[b])).coords;
  q.ring_ = make_ring(q.cp_.orders, std::move(table), q.project(r.one()).coords,
                      r.label().empty() ? std::string() : r.label() + "/I");
  return q;
}

/// A subgroup of r closed under multiplication, re-presented as a ring in its
/// own right with the given identity (1 for subrings, e for corner rings e R).
class PresentedSubring {
 public:
  const FiniteRing& ring() const { return ring_; }
  const AdditiveSubgroup& group() const { return group_; }

  /// Element of the parent ring for coordinates y of the presented ring.
  Element to_parent(const Element& y) const {
    Element acc(std::vector<Coord>(group_.moduli().size(), 0));
    for (std::size_t a = 0; a < y.size(); ++a)
      if (y[a] != 0) acc = parent_add_multiple(acc, y[a], images_[a]);
    return acc;
  }

  /// Coordinates in the presented ring of a member x of the subgroup.
  Element from_parent(const Element& x) const { return Element(cp_.forward(group_.coefficients(x))); }

  /// Images of the presented ring's generators in the parent.
  const std::vector<Element>& generator_images() const { return images_; }

  /// Parent subgroup spanned by the image of a subgroup of the presented ring.
  AdditiveSubgroup image(const AdditiveSubgroup& sub) const {
    std::vector<Element> gens;
    for (const Element& b : sub.basis()) gens.push_back(to_parent(b));
    return AdditiveSubgroup::generated(group_.moduli(), gens);
  }

  friend PresentedSubring present_subgroup(const FiniteRing& r, const AdditiveSubgroup& g, const Element& identity,
                                           std::string label);

 private:
  Element parent_add_multiple(const Element& acc, Coord c, const Element& v) const {
    Element out = acc;
    const auto& d = group_.moduli();
    for (std::size_t j = 0; j < d.size(); ++j) out.coords[j] = arith::mod(out.coords[j] + arith::mulmod(c, v[j], d[j]), d[j]);
    return out;
  }

  FiniteRing ring_;
  AdditiveSubgroup group_;
  detail::CyclicPresentation cp_;
  std::vector<Element> images_;
};

inline PresentedSubring present_subgroup(const FiniteRing& r, const AdditiveSubgroup& g, const Element& identity,
                                         std::string label = {}) {
  PresentedSubring ps;
  ps.group_ = g;
  const auto& basis = g.basis();
  const std::size_t m = basis.size();
  // Relations o_i b_i = sum_{j>i} c_ij b_j of the layered basis.
  detail::Matrix rel;
  for (std::size_t i = 0; i < m; ++i) {
    const Element multiple = r.int_mul(g.layer_orders()[i], basis[i]);
    std::vector<Coord> row = g.coefficients(multiple);
    for (Coord& c : row) c = -c;
    row[i] += g.layer_orders()[i];
    rel.push_back(std::move(row));
  }
  ps.cp_ = detail::cyclic_presentation(rel, m);
  const std::size_t n = ps.cp_.orders.size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto& s = ps.cp_.section(a);
    Element acc = r.zero();
    for (std::size_t i = 0; i < m; ++i) acc = r.add(acc, r.int_mul(s[i], basis[i]));
    ps.images_.push_back(std::move(acc));
  }
  ProductTable table(n, std::vector<std::vector<Coord>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element prod = r.mul(ps.images_[a], ps.images_[b]);
      if (!g.contains(prod)) throw Error(Errc::NotASubring, "subgroup is not closed under multiplication");
      table[a][b] = ps.from_parent(prod).coords;
    }
  if (!g.contains(identity)) throw Error(Errc::NotASubring, "identity is not in the subgroup");
  ps.ring_ = make_ring(ps.cp_.orders, std::move(table), ps.from_parent(identity).coords, std::move(label));
  return ps;
}

inline PresentedSubring present_subring(const FiniteRing& r, const Subring& s, std::string label = {}) {
  return present_subgroup(r, s.group, r.one(), std::move(label));
}

}  // namespace finring
