#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "finring/decomposition.hpp"
#include "finring/structures.hpp"

namespace finring {

/// Invariants of a finite local ring: char = p^N, residue field of order q = p^n.
struct LocalData {
  Coord p = 0;
  unsigned N = 0;
  unsigned n = 0;
  Coord q = 0;
  Ideal maximal;                      // non-units = nilpotents
  unsigned nilpotency_index = 0;      // least v >= 1 with m^v = 0
  std::uint64_t unit_group_order = 0; // (q - 1) |1 + m|
  std::uint64_t p_part = 0;           // |1 + m| = |m|
};

/// The Teichmuller set T(R) u {0}: q elements, lexicographic.
struct TeichmullerData {
  std::vector<Element> tbar;
  Element generator;  // multiplicative order q - 1
  Coord alpha = 1;    // lift exponent: 1 mod (q-1), 0 mod |1+m|
};

inline Ideal ideal_power(const FiniteRing& r, const Ideal& i, unsigned e) {
  Ideal out = unit_ideal(r);
  for (unsigned k = 0; k < e; ++k) out = ideal_product(r, out, i);
  return out;
}

/// A local ring together with its LocalData and Teichmuller set, computed once.
class LocalRing {
 public:
  explicit LocalRing(FiniteRing r, std::uint64_t bound = kDefaultScanBound) : ring_(std::move(r)) {
    LocalityResult loc = is_local(ring_, bound);
    if (!loc.local) throw Error(Errc::NotLocal, ring_.label().empty() ? "ring is not local" : ring_.label() + " is not local");
    compute_data(std::move(*loc.maximal_ideal));
    compute_teichmuller();
  }

  const FiniteRing& ring() const { return ring_; }
  const LocalData& data() const { return data_; }
  const TeichmullerData& teichmuller() const { return teich_; }
  const Ideal& maximal() const { return data_.maximal; }

  bool is_unit(const Element& x) const { return !data_.maximal.contains(x); }

  /// u^alpha, the Teichmuller unit with the same residue as u.
  Element lift(const Element& u) const {
    if (!is_unit(u)) throw Error(Errc::NotAUnit, to_string(u) + " is not a unit");
    return ring_.pow(u, static_cast<std::uint64_t>(teich_.alpha));
  }

  /// a = t + m with t in the Teichmuller set and m in the maximal ideal.
  std::pair<Element, Element> decompose(const Element& a) const {
    Element t = is_unit(a) ? lift(a) : ring_.zero();
    Element m = ring_.sub(a, t);
    return {std::move(t), std::move(m)};
  }

  /// Position of a Teichmuller element in tbar.
  std::size_t tbar_index(const Element& t) const {
    auto it = std::lower_bound(teich_.tbar.begin(), teich_.tbar.end(), t);
    if (it == teich_.tbar.end() || *it != t) throw Error(Errc::BadParameters, to_string(t) + " is not in the Teichmuller set");
    return static_cast<std::size_t>(it - teich_.tbar.begin());
  }

 private:
  void compute_data(Ideal m) {
    const std::uint64_t msize = m.order();
    const auto q = static_cast<Coord>(ring_.order() / msize);
    auto pp = arith::as_prime_power(q);
    if (!pp) throw Error(Errc::VerificationFailed, "residue field order is not a prime power");
    const Coord ch = characteristic(ring_);
    auto cp = arith::as_prime_power(ch);
    if (!cp || cp->p != pp->p) throw Error(Errc::VerificationFailed, "characteristic is not a power of the residue prime");
    data_.p = pp->p;
    data_.n = pp->e;
    data_.q = q;
    data_.N = cp->e;
    data_.p_part = msize;
    data_.unit_group_order = ring_.order() - msize;
    unsigned nu = 1;
    Ideal power = m;
    while (power.order() > 1) {
      power = ideal_product(ring_, power, m);
      ++nu;
    }
    data_.nilpotency_index = nu;
    data_.maximal = std::move(m);
  }

  void compute_teichmuller() {
    const Coord q1 = data_.q - 1;
    teich_.alpha = arith::crt(1, q1, 0, static_cast<Coord>(data_.p_part));
    std::vector<Element> tbar{ring_.zero()};
    ring_.for_each_element([&](const Element& u) {
      if (is_unit(u)) tbar.push_back(ring_.pow(u, static_cast<std::uint64_t>(teich_.alpha)));
    });
    std::sort(tbar.begin(), tbar.end());
    tbar.erase(std::unique(tbar.begin(), tbar.end()), tbar.end());
    if (static_cast<Coord>(tbar.size()) != data_.q) throw Error(Errc::VerificationFailed, "Teichmuller set has wrong size");
    teich_.tbar = std::move(tbar);
    const auto primes = arith::prime_divisors(q1);
    for (const Element& t : teich_.tbar) {
      if (ring_.is_zero(t)) continue;
      bool full = true;
      for (Coord l : primes)
        if (ring_.pow(t, static_cast<std::uint64_t>(q1 / l)) == ring_.one()) full = false;
      if (full) {
        teich_.generator = t;
        break;
      }
    }
  }

  FiniteRing ring_;
  LocalData data_;
  TeichmullerData teich_;
};

inline LocalData local_data(const FiniteRing& r, std::uint64_t bound = kDefaultScanBound) {
  return LocalRing(r, bound).data();
}

inline Element teichmuller_lift(const LocalRing& lr, const Element& u) { return lr.lift(u); }
inline const TeichmullerData& teichmuller_set(const LocalRing& lr) { return lr.teichmuller(); }
inline std::pair<Element, Element> teichmuller_decompose(const LocalRing& lr, const Element& a) { return lr.decompose(a); }

/// The units u with u^q = u, together with 0, must be exactly the Teichmuller
/// set: any size-q multiplicatively closed subset of units-and-zero with t^q = t
/// lies inside this set, so its size being q settles uniqueness.
inline bool teichmuller_is_unique(const LocalRing& lr) {
  const FiniteRing& r = lr.ring();
  std::vector<Element> fixed{r.zero()};
  r.for_each_element([&](const Element& x) {
    if (lr.is_unit(x) && r.pow(x, static_cast<std::uint64_t>(lr.data().q)) == x) fixed.push_back(x);
  });
  std::sort(fixed.begin(), fixed.end());
  return fixed == lr.teichmuller().tbar;
}

// ---------------------------------------------------------------------------
// Residue field

/// F_q realised on Teichmuller representatives: a (+) b is the Teichmuller
/// component of a + b, a (x) b is the ring product.
struct ResidueField {
  Coord q = 0;
  std::vector<Element> elements;               // = tbar
  std::vector<std::vector<std::size_t>> add;   // q x q indices
  std::vector<std::vector<std::size_t>> mul;
  std::map<unsigned, std::vector<std::size_t>> subfields;  // degree d | n -> indices
};

inline std::vector<Element> tau_subgroup(const LocalRing& lr, unsigned d) {
  const LocalData& ld = lr.data();
  if (d == 0 || ld.n % d != 0)
    throw Error(Errc::NotASubfieldDegree, std::to_string(d) + " does not divide " + std::to_string(ld.n));
  const auto pd = static_cast<std::uint64_t>(arith::ipow(ld.p, d));
  std::vector<Element> out;
  for (const Element& t : lr.teichmuller().tbar)
    if (lr.ring().pow(t, pd) == t) out.push_back(t);
  return out;
}

inline ResidueField residue_field(const LocalRing& lr) {
  const FiniteRing& r = lr.ring();
  const auto& tb = lr.teichmuller().tbar;
  ResidueField f;
  f.q = lr.data().q;
  f.elements = tb;
  const std::size_t q = tb.size();
  f.add.assign(q, std::vector<std::size_t>(q));
  f.mul.assign(q, std::vector<std::size_t>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      f.add[i][j] = lr.tbar_index(lr.decompose(r.add(tb[i], tb[j])).first);
      f.mul[i][j] = lr.tbar_index(r.mul(tb[i], tb[j]));
    }
  for (unsigned d = 1; d <= lr.data().n; ++d) {
    if (lr.data().n % d != 0) continue;
    std::vector<std::size_t> idx;
    for (const Element& t : tau_subgroup(lr, d)) idx.push_back(lr.tbar_index(t));
    f.subfields[d] = std::move(idx);
  }
  // Cross-check against R/m: projection restricted to tbar is a bijective homomorphism.
  const QuotientRing quo = quotient(r, lr.maximal());
  std::vector<Element> images;
  for (const Element& t : tb) images.push_back(quo.project(t));
  std::vector<Element> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.size() != quo.ring().order())
    throw Error(Errc::VerificationFailed, "Teichmuller set does not map bijectively onto R/m");
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      if (images[f.add[i][j]] != quo.ring().add(images[i], images[j]) ||
          images[f.mul[i][j]] != quo.ring().mul(images[i], images[j]))
        throw Error(Errc::VerificationFailed, "residue tables disagree with R/m");
  return f;
}

// ---------------------------------------------------------------------------
// Subrings attached to subfields

namespace detail {
inline Coord residue_size_of(const LocalRing& lr, const AdditiveSubgroup& s) {
  return static_cast<Coord>(s.order() / subgroup_intersection(s, lr.maximal().group).order());
}
}  // namespace detail

/// R_[F] for F = F_{p^d}: the additive span of tau(F^x) u {0}, the smallest
/// subring with residue field F.
inline Subring lower_ring(const LocalRing& lr, unsigned d) {
  const auto tau = tau_subgroup(lr, d);
  Subring s = make_subring(lr.ring(), subgroup_generated(lr.ring(), tau));
  if (detail::residue_size_of(lr, s.group) != arith::ipow(lr.data().p, d))
    throw Error(Errc::VerificationFailed, "lower ring has the wrong residue field");
  return s;
}

/// R^[F]: preimage of F under R -> R/m, the largest subring with residue field F.
inline Subring upper_ring(const LocalRing& lr, unsigned d) {
  std::vector<Element> gens = tau_subgroup(lr, d);
  const auto& mb = lr.maximal().group.basis();
  gens.insert(gens.end(), mb.begin(), mb.end());
  Subring s = make_subring(lr.ring(), subgroup_generated(lr.ring(), gens));
  if (s.order() != static_cast<std::uint64_t>(arith::ipow(lr.data().p, d)) * lr.maximal().order())
    throw Error(Errc::VerificationFailed, "upper ring has the wrong order");
  return s;
}

/// m = pR.
inline bool is_unramified(const LocalRing& lr) {
  return lr.maximal().group == scaled_ideal(lr.ring(), lr.data().p).group;
}

/// Image of a -> a^(p^t) with p^t >= nilpotency index, for characteristic p:
/// a copy of the residue field inside R.
inline Subring frobenius_field_embedding(const LocalRing& lr) {
  const LocalData& ld = lr.data();
  if (ld.N != 1) throw Error(Errc::CharacteristicNotP, "characteristic is p^" + std::to_string(ld.N));
  std::uint64_t pt = 1;
  while (pt < ld.nilpotency_index) pt *= static_cast<std::uint64_t>(ld.p);
  const FiniteRing& r = lr.ring();
  std::vector<Element> gens{r.one()};
  for (std::size_t i = 0; i < r.rank(); ++i) gens.push_back(r.pow(r.generator(i), pt));
  Subring s = make_subring(r, subgroup_generated(r, gens));
  if (static_cast<Coord>(s.order()) != ld.q) throw Error(Errc::VerificationFailed, "Frobenius image has wrong order");
  return s;
}

/// a = p^i u with u a unit, i = N - j for the least j with p^j a = 0.
/// i is unique; u is the lexicographically first solution.
inline std::pair<unsigned, Element> p_adic_unit_decomposition(const LocalRing& lr, const Element& a) {
  const FiniteRing& r = lr.ring();
  if (!is_unramified(lr)) throw Error(Errc::NotUnramified, "maximal ideal is not pR");
  if (r.is_zero(a)) throw Error(Errc::ZeroElement, "zero has no unit decomposition");
  const LocalData& ld = lr.data();
  unsigned j = 0;
  Element x = a;
  while (!r.is_zero(x)) {
    x = r.int_mul(ld.p, x);
    ++j;
  }
  const unsigned i = ld.N - j;
  const Coord pi = arith::ipow(ld.p, i);
  std::optional<Element> u;
  r.for_each_element([&](const Element& y) {
    if (!u && r.int_mul(pi, y) == a) u = y;
  });
  if (!u || !lr.is_unit(*u)) throw Error(Errc::VerificationFailed, "no unit solution of p^i u = a");
  return {i, *u};
}

// ---------------------------------------------------------------------------
// Characteristic module V = m / (m^2 + pR)

struct CharModule {
  Ideal maximal;
  Ideal denominator;                // m^2 + pR
  std::vector<Element> coset_basis; // canonical coset representatives
  unsigned rho = 0;                 // dimension over F_q
  unsigned fp_rank = 0;             // n * rho
  Coord q = 0;

  /// Canonical representative of [x].
  Element coset(const Element& x) const { return denominator.group.reduce(x); }
};

/// [t].[x] = [t x].
inline Element char_module_action(const LocalRing& lr, const CharModule& v, const Element& t, const Element& x) {
  return v.coset(lr.ring().mul(t, x));
}

/// F_q-span of gens inside m, plus the denominator.
inline AdditiveSubgroup fq_span_preimage(const LocalRing& lr, const CharModule& v, const std::vector<Element>& gens) {
  std::vector<Element> all = v.denominator.group.basis();
  for (const Element& g : gens)
    for (const Element& t : lr.teichmuller().tbar) all.push_back(lr.ring().mul(t, g));
  return subgroup_generated(lr.ring(), all);
}

/// Greedy basis: the lexicographically smallest element of m outside the
/// current span is added with its F_q-multiples, until the span is m.
inline CharModule characteristic_module(const LocalRing& lr) {
  const FiniteRing& r = lr.ring();
  const LocalData& ld = lr.data();
  CharModule v;
  v.maximal = ld.maximal;
  v.q = ld.q;
  v.denominator = ideal_sum(ideal_product(r, ld.maximal, ld.maximal), scaled_ideal(r, ld.p));
  std::vector<Element> elems = ld.maximal.group.elements();
  std::sort(elems.begin(), elems.end());
  AdditiveSubgroup span = v.denominator.group;
  for (const Element& x : elems) {
    if (span.order() == ld.maximal.order()) break;
    if (span.contains(x)) continue;
    v.coset_basis.push_back(v.coset(x));
    span = fq_span_preimage(lr, v, v.coset_basis);
    ++v.rho;
  }
  v.fp_rank = ld.n * v.rho;
  const std::uint64_t vsize = ld.maximal.order() / v.denominator.order();
  if (vsize != static_cast<std::uint64_t>(arith::ipow(ld.q, v.rho)))
    throw Error(Errc::VerificationFailed, "|V| != q^rho");
  return v;
}

}  // namespace finring
