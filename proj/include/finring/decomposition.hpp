#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <set>
#include <vector>

#include "finring/census.hpp"
#include "finring/structures.hpp"

namespace finring {

// ---------------------------------------------------------------------------
// Sylow decomposition

struct SylowComponent {
  Coord prime;
  Element identity;  // the p-component of 1
  PresentedSubring presented;

  const FiniteRing& ring() const { return presented.ring(); }
};

/// One component A[p] per prime p dividing |R|: the p-primary part of the
/// additive group, a ring with identity the p-component of 1.
inline std::vector<SylowComponent> sylow_decompose(const FiniteRing& r) {
  std::vector<SylowComponent> out;
  Coord exponent = 1;
  for (Coord d : r.orders()) exponent = std::lcm(exponent, d);
  for (const auto& pp : arith::factorize(static_cast<Coord>(r.order()))) {
    const Coord p = pp.first;
    Coord pe = 1;
    while (exponent % (pe * p) == 0) pe *= p;
    const Coord rest = exponent / pe;
    std::vector<Element> gens;
    for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.int_mul(rest, r.generator(i)));
    AdditiveSubgroup part = subgroup_generated(r, gens);
    // c = 1 mod p^a, c = 0 mod rest picks out the p-component.
    const Coord c = arith::crt(1, pe, 0, rest);
    Element e = r.int_mul(c, r.one());
    std::string label = r.label().empty() ? std::string() : r.label() + "[" + std::to_string(p) + "]";
    out.push_back(SylowComponent{p, e, present_subgroup(r, part, e, std::move(label))});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Idempotents

struct IdempotentSet {
  std::vector<Element> all;    // lexicographic
  std::vector<Element> atoms;  // minimal nonzero idempotents, lexicographic
};

/// Exhaustive scan for e^2 = e.
inline IdempotentSet idempotents(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  r.require_scan(bound, "idempotent scan");
  IdempotentSet out;
  r.for_each_element([&](const Element& e) {
    if (r.mul(e, e) == e) out.all.push_back(e);
  });
  // e is an atom iff no idempotent f other than 0 and e satisfies e f = f.
  for (const Element& e : out.all) {
    if (r.is_zero(e)) continue;
    bool atom = true;
    for (const Element& f : out.all)
      if (!r.is_zero(f) && f != e && r.mul(e, f) == f) {
        atom = false;
        break;
      }
    if (atom) out.atoms.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Locality

struct LocalityResult {
  bool local = false;
  std::optional<Ideal> maximal_ideal;                             // when local
  std::optional<std::pair<Element, Element>> non_units_summing;  // when not
};

inline std::vector<Element> non_units(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  r.require_scan(bound, "unit scan");
  std::vector<Element> out;
  r.for_each_element([&](const Element& x) {
    if (!is_unit(r, x)) out.push_back(x);
  });
  return out;
}

/// Local iff the non-units are closed under addition; the non-units then are
/// the maximal ideal. Otherwise returns two non-units whose sum is a unit.
inline LocalityResult is_local(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  LocalityResult out;
  const std::vector<Element> nu = non_units(r, bound);
  if (nu.size() == r.order()) return out;  // zero ring
  AdditiveSubgroup span = subgroup_generated(r, nu);
  if (span.order() == nu.size()) {
    out.local = true;
    out.maximal_ideal = Ideal{std::move(span)};
    return out;
  }
  for (const Element& a : nu)
    for (const Element& b : nu)
      if (is_unit(r, r.add(a, b))) {
        out.non_units_summing = std::make_pair(a, b);
        return out;
      }
  return out;
}

/// Nilpotent elements form the nilradical: x is nilpotent iff x^64 = 0,
/// since the chain x R > x^2 R > ... has length at most log2 |R| < 63.
inline bool is_nilpotent(const FiniteRing& r, const Element& x) { return r.is_zero(r.pow(x, 64)); }

inline Ideal nilradical(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  r.require_scan(bound, "nilradical scan");
  std::vector<Element> nil;
  r.for_each_element([&](const Element& x) {
    if (is_nilpotent(r, x)) nil.push_back(x);
  });
  return Ideal{subgroup_generated(r, nil)};
}

// ---------------------------------------------------------------------------
// Local decomposition

struct LocalFactor {
  Element atom;                 // identity of the factor inside r
  PresentedSubring presented;   // e R on a fresh generator basis

  const FiniteRing& ring() const { return presented.ring(); }
};

struct LocalFactorization {
  std::vector<LocalFactor> factors;
};

/// Sort key for factors: order, then the presentation tables.
inline bool factor_less(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a.orders() != b.orders()) return a.orders() < b.orders();
  if (a.table() != b.table()) return a.table() < b.table();
  return a.one() < b.one();
}

/// Corner rings e_i R for the atoms e_i; each is local and the product of
/// their orders is |R|. Factors are sorted by (order, table).
inline LocalFactorization local_decompose(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  const IdempotentSet ids = idempotents(r, bound);
  LocalFactorization out;
  for (const Element& e : ids.atoms) {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.mul(e, r.generator(i)));
    AdditiveSubgroup corner = subgroup_generated(r, gens);
    out.factors.push_back(LocalFactor{e, present_subgroup(r, corner, e)});
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const LocalFactor& a, const LocalFactor& b) { return factor_less(a.ring(), b.ring()); });
  return out;
}

/// For a subring b of r: block j lists the atoms e_i of r (indices into
/// idempotents(r).atoms) that add up to the j-th atom of b.
inline std::vector<std::vector<std::size_t>> subring_partition(const FiniteRing& r, const Subring& b,
                                                               std::uint64_t bound = kDefaultScanBound) {
  if (!is_subring_group(r, b.group)) throw Error(Errc::NotASubring, "subring_partition");
  const IdempotentSet ids = idempotents(r, bound);
  std::vector<Element> b_ids;
  for (const Element& e : ids.all)
    if (b.contains(e)) b_ids.push_back(e);
  std::vector<Element> b_atoms;
  for (const Element& e : b_ids) {
    if (r.is_zero(e)) continue;
    bool atom = true;
    for (const Element& f : b_ids)
      if (!r.is_zero(f) && f != e && r.mul(e, f) == f) atom = false;
    if (atom) b_atoms.push_back(e);
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<int> hit(ids.atoms.size(), 0);
  for (const Element& eps : b_atoms) {
    std::vector<std::size_t> block;
    Element sum = r.zero();
    for (std::size_t i = 0; i < ids.atoms.size(); ++i)
      if (r.mul(ids.atoms[i], eps) == ids.atoms[i]) {
        block.push_back(i);
        sum = r.add(sum, ids.atoms[i]);
        ++hit[i];
      }
    if (sum != eps) throw Error(Errc::VerificationFailed, "subring atom is not a sum of ring atoms");
    // eps B lies in prod_{i in block} A_i, i.e. is fixed by multiplication with sum.
    for (const Element& y : b.group.basis()) {
      const Element part = r.mul(eps, y);
      if (r.mul(sum, part) != part) throw Error(Errc::VerificationFailed, "block containment failed");
    }
    blocks.push_back(std::move(block));
  }
  for (int h : hit)
    if (h != 1) throw Error(Errc::VerificationFailed, "blocks do not partition the atoms");
  return blocks;
}

// ---------------------------------------------------------------------------
// Products of local rings

/// p^gcd(e_1, ..., e_n) for residue field sizes q_i = p^(e_i).
inline Coord residue_field_intersection(const std::vector<Coord>& residue_sizes) {
  if (residue_sizes.empty()) throw Error(Errc::BadParameters, "no residue fields");
  Coord p = 0;
  unsigned g = 0;
  for (Coord q : residue_sizes) {
    auto pp = arith::as_prime_power(q);
    if (!pp) throw Error(Errc::BadParameters, std::to_string(q) + " is not a prime power");
    if (p != 0 && pp->p != p) throw Error(Errc::MixedCharacteristic, "residue fields of different characteristic");
    p = pp->p;
    g = std::gcd(g, pp->e);
  }
  return arith::ipow(p, g);
}

/// Residue field sizes of the local factors of r.
inline std::vector<Coord> residue_sizes(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  std::vector<Coord> out;
  for (const LocalFactor& f : local_decompose(r, bound).factors) {
    auto loc = is_local(f.ring(), bound);
    out.push_back(static_cast<Coord>(f.ring().order() / loc.maximal_ideal->order()));
  }
  return out;
}

inline Coord residue_field_intersection(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  return residue_field_intersection(residue_sizes(r, bound));
}

/// A subring is local iff its non-units (units of a finite subring are units
/// of r, the inverse being a power) are closed under addition.
inline bool is_local_subring(const FiniteRing& r, const Subring& s) {
  std::vector<Element> nu;
  for (const Element& x : s.group.elements())
    if (!is_unit(r, x)) nu.push_back(x);
  if (nu.size() == s.order()) return false;
  return subgroup_generated(r, nu).order() == nu.size();
}

/// Subrings that are maximal among local subrings (oracle-backed).
inline std::vector<Subring> maximal_local_subrings_of_product(const FiniteRing& r,
                                                              std::uint64_t bound = kDefaultOracleBound) {
  const std::vector<Subring> census = enumerate_all_subrings(r, bound);
  std::vector<char> local(census.size());
  for (std::size_t i = 0; i < census.size(); ++i) local[i] = is_local_subring(r, census[i]);
  std::vector<Subring> out;
  for (std::size_t i : maximal_among(census, [&](const Subring& s) {
         return local[static_cast<std::size_t>(&s - census.data())] != 0;
       }))
    out.push_back(census[i]);
  // Each one contains the product of the maximal ideals and reduces into F^n.
  // With residue fields of different characteristic no subring is local.
  std::set<Coord> chars;
  for (Coord q : residue_sizes(r, bound)) chars.insert(arith::as_prime_power(q)->p);
  if (chars.size() > 1) {
    if (!out.empty()) throw Error(Errc::VerificationFailed, "local subring across residue characteristics");
    return out;
  }
  const Ideal rad = nilradical(r, bound);
  const Coord f = residue_field_intersection(r, bound);
  for (const Subring& s : out) {
    if (!rad.group.is_subgroup_of(s.group))
      throw Error(Errc::VerificationFailed, "maximal local subring misses the product of maximal ideals");
    for (const Element& x : s.group.elements())
      if (!is_nilpotent(r, r.sub(r.pow(x, static_cast<std::uint64_t>(f)), x)))
        throw Error(Errc::VerificationFailed, "maximal local subring does not reduce into F^n");
  }
  return out;
}

}  // namespace finring
