#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "finring/census.hpp"
#include "finring/local.hpp"

namespace finring {

// ---------------------------------------------------------------------------
// Subspaces of the characteristic module, held by their preimage in m.

struct SubspaceDesc {
  std::vector<Element> generators;  // elements of m whose classes span W over F_p
  AdditiveSubgroup preimage;        // W's preimage in m; contains m^2 + pR
  unsigned codim = 0;               // over F_q; meaningful when stable

  friend bool operator==(const SubspaceDesc& a, const SubspaceDesc& b) { return a.preimage == b.preimage; }
};

/// True iff the subgroup is closed under multiplication by the Teichmuller set.
inline bool is_fq_stable(const LocalRing& lr, const AdditiveSubgroup& pre) {
  for (const Element& b : pre.basis())
    for (const Element& t : lr.teichmuller().tbar)
      if (!pre.contains(lr.ring().mul(t, b))) return false;
  return true;
}

namespace detail {

inline unsigned fq_codim(const CharModule& v, const AdditiveSubgroup& pre) {
  std::uint64_t quot = v.maximal.order() / pre.order();
  unsigned c = 0;
  while (quot > 1) {
    quot /= static_cast<std::uint64_t>(v.q);
    ++c;
  }
  return c;
}

inline SubspaceDesc make_subspace(const CharModule& v, std::vector<Element> gens, AdditiveSubgroup pre) {
  SubspaceDesc w{std::move(gens), std::move(pre), 0};
  w.codim = fq_codim(v, w.preimage);
  return w;
}

}  // namespace detail

/// F_q-span of the classes of gens (gens must lie in m).
inline SubspaceDesc subspace_spanned(const LocalRing& lr, const CharModule& v, std::vector<Element> gens) {
  for (const Element& g : gens)
    if (!v.maximal.contains(g)) throw Error(Errc::BadParameters, to_string(g) + " is not in the maximal ideal");
  AdditiveSubgroup pre = fq_span_preimage(lr, v, gens);
  return detail::make_subspace(v, std::move(gens), std::move(pre));
}

/// The additive (F_p) span only; may fail to be F_q-stable.
inline SubspaceDesc subgroup_of_module(const LocalRing& lr, const CharModule& v, std::vector<Element> gens) {
  std::vector<Element> all = v.denominator.group.basis();
  all.insert(all.end(), gens.begin(), gens.end());
  AdditiveSubgroup pre = subgroup_generated(lr.ring(), all);
  if (!pre.is_subgroup_of(v.maximal.group)) throw Error(Errc::BadParameters, "generators leave the maximal ideal");
  return detail::make_subspace(v, std::move(gens), std::move(pre));
}

/// I / (m^2 + pR) for an ideal between m^2 + pR and m.
inline SubspaceDesc subspace_from_ideal(const LocalRing& lr, const CharModule& v, const Ideal& i) {
  if (!v.denominator.group.is_subgroup_of(i.group) || !i.group.is_subgroup_of(v.maximal.group))
    throw Error(Errc::BadParameters, "ideal does not lie between m^2 + pR and m");
  if (!is_ideal_group(lr.ring(), i.group)) throw Error(Errc::NotAnIdeal, "subspace_from_ideal");
  return detail::make_subspace(v, i.group.basis(), i.group);
}

/// The preimage of W in m, an ideal of R.
inline Ideal ideal_from_subspace(const LocalRing& lr, const CharModule& v, const SubspaceDesc& w) {
  if (!is_fq_stable(lr, w.preimage)) throw Error(Errc::NotStable, "subgroup of V is not closed under the F_q action");
  (void)v;
  return make_ideal(lr.ring(), w.preimage);
}

/// All F_q-subspaces of V, by one-vector extension from 0. Sorted by size.
inline std::vector<SubspaceDesc> enumerate_subspaces(const LocalRing& lr, const CharModule& v) {
  const std::vector<Element> melems = v.maximal.group.elements();
  std::set<AdditiveSubgroup> seen{v.denominator.group};
  std::deque<AdditiveSubgroup> frontier{v.denominator.group};
  while (!frontier.empty()) {
    AdditiveSubgroup w = std::move(frontier.front());
    frontier.pop_front();
    for (const Element& x : melems) {
      if (w.contains(x) || w.reduce(x) != x) continue;
      std::vector<Element> gens = w.basis();
      for (const Element& t : lr.teichmuller().tbar) gens.push_back(lr.ring().mul(t, x));
      AdditiveSubgroup next = subgroup_generated(lr.ring(), gens);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<SubspaceDesc> out;
  for (const AdditiveSubgroup& g : seen) out.push_back(detail::make_subspace(v, g.basis(), g));
  std::stable_sort(out.begin(), out.end(),
                   [](const SubspaceDesc& a, const SubspaceDesc& b) { return a.preimage.order() < b.preimage.order(); });
  return out;
}

/// Kernels of the nonzero functionals c on the greedy basis, normalised so the
/// first nonzero coefficient is 1. Ordered by pivot position, then by the
/// trailing coefficients in Teichmuller order. (q^rho - 1)/(q - 1) of them.
inline std::vector<SubspaceDesc> hyperplanes(const LocalRing& lr, const CharModule& v) {
  const FiniteRing& r = lr.ring();
  const auto& tb = lr.teichmuller().tbar;
  const std::size_t q = tb.size();
  const std::size_t rho = v.rho;
  std::vector<SubspaceDesc> out;
  for (std::size_t pivot = 0; pivot < rho; ++pivot) {
    const std::size_t free = rho - pivot - 1;
    std::vector<std::size_t> coef(free, 0);
    for (;;) {
      // Kernel basis: x_i for i < pivot, x_i - c_i x_pivot for i > pivot.
      std::vector<Element> gens;
      for (std::size_t i = 0; i < pivot; ++i) gens.push_back(v.coset_basis[i]);
      for (std::size_t f = 0; f < free; ++f) {
        const std::size_t i = pivot + 1 + f;
        gens.push_back(r.sub(v.coset_basis[i], r.mul(tb[coef[f]], v.coset_basis[pivot])));
      }
      out.push_back(subspace_spanned(lr, v, std::move(gens)));
      std::size_t f = free;
      while (f > 0) {
        if (++coef[f - 1] < q) break;
        coef[f - 1] = 0;
        --f;
      }
      if (f == 0) break;
    }
  }
  return out;
}

/// Teichmuller set plus the ideal of a codimension-one subspace: a maximal
/// subring of index q with residue field F_q whose maximal ideal is that ideal.
inline Subring maximal_subring_from_hyperplane(const LocalRing& lr, const CharModule& v, const SubspaceDesc& w) {
  if (v.rho == 0 || w.codim != 1 || !is_fq_stable(lr, w.preimage))
    throw Error(Errc::NotHyperplane, "subspace is not an F_q-hyperplane of V");
  const Ideal i = ideal_from_subspace(lr, v, w);
  std::vector<Element> gens = lr.teichmuller().tbar;
  gens.insert(gens.end(), i.group.basis().begin(), i.group.basis().end());
  Subring s = make_subring(lr.ring(), subgroup_generated(lr.ring(), gens));
  if (s.order() * static_cast<std::uint64_t>(lr.data().q) != lr.ring().order())
    throw Error(Errc::VerificationFailed, "hyperplane subring does not have index q");
  if (subgroup_intersection(s.group, lr.maximal().group) != i.group)
    throw Error(Errc::VerificationFailed, "hyperplane subring has the wrong maximal ideal");
  return s;
}

inline std::vector<Subring> maximal_subrings_same_residue(const LocalRing& lr, const CharModule& v) {
  std::vector<Subring> out;
  for (const SubspaceDesc& w : hyperplanes(lr, v)) out.push_back(maximal_subring_from_hyperplane(lr, v, w));
  return out;
}

inline std::vector<Subring> maximal_subrings_same_residue(const LocalRing& lr) {
  return maximal_subrings_same_residue(lr, characteristic_module(lr));
}

inline Coord count_maximal_subrings_same_residue(const LocalRing& lr) {
  return arith::projective_count(lr.data().q, characteristic_module(lr).rho);
}

// ---------------------------------------------------------------------------
// Classification

enum class SubringKind { SameResidue, Subfield, Other };

inline std::string_view kind_name(SubringKind k) {
  switch (k) {
    case SubringKind::SameResidue: return "same-residue";
    case SubringKind::Subfield: return "subfield";
    case SubringKind::Other: return "other";
  }
  return "other";
}

struct ClassifiedSubring {
  Subring ring;
  SubringKind kind = SubringKind::Other;
  std::uint64_t index = 1;
  Coord residue_field_size = 0;
  bool is_maximal = false;
};

/// Residue field size of a subring S: |S| / |S n m|.
inline Coord residue_size(const LocalRing& lr, const Subring& s) { return detail::residue_size_of(lr, s.group); }

/// same-residue: residue field F_q; subfield: S = R^[F] for a proper subfield F.
inline SubringKind classify(const LocalRing& lr, const Subring& s) {
  const Coord qs = residue_size(lr, s);
  if (qs == lr.data().q) return SubringKind::SameResidue;
  const auto pp = arith::as_prime_power(qs);
  if (pp && lr.data().n % pp->e == 0 && upper_ring(lr, pp->e) == s) return SubringKind::Subfield;
  return SubringKind::Other;
}

/// Both kinds of maximal subrings: one per F_q-hyperplane of V (index q), and
/// R^[F] for each maximal subfield F, i.e. n/l for each prime l | n (index q/|F|).
inline std::vector<ClassifiedSubring> maximal_subrings_all(const LocalRing& lr) {
  const LocalData& ld = lr.data();
  std::vector<ClassifiedSubring> out;
  for (Subring& s : maximal_subrings_same_residue(lr))
    out.push_back({std::move(s), SubringKind::SameResidue, static_cast<std::uint64_t>(ld.q), ld.q, true});
  for (Coord l : arith::prime_divisors(ld.n)) {
    const unsigned d = ld.n / static_cast<unsigned>(l);
    Subring s = upper_ring(lr, d);
    const Coord fsize = arith::ipow(ld.p, d);
    const std::uint64_t index = lr.ring().order() / s.order();
    if (index != static_cast<std::uint64_t>(ld.q / fsize))
      throw Error(Errc::VerificationFailed, "subfield-kind index differs from [F_q : F]");
    out.push_back({std::move(s), SubringKind::Subfield, index, fsize, true});
  }
  return out;
}

inline Coord count_maximal_subrings_all(const LocalRing& lr) {
  return count_maximal_subrings_same_residue(lr) + static_cast<Coord>(arith::omega(lr.data().n));
}

/// Census with kinds, indices and maximality flags (oracle-backed).
inline std::vector<ClassifiedSubring> classified_census(const LocalRing& lr, std::uint64_t bound = kDefaultOracleBound) {
  const FiniteRing& r = lr.ring();
  const std::vector<Subring> all = enumerate_all_subrings(r, bound);
  const auto maximal = maximal_among(all, [&](const Subring& s) { return s.order() != r.order(); });
  std::vector<ClassifiedSubring> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ClassifiedSubring c{all[i], classify(lr, all[i]), r.order() / all[i].order(), residue_size(lr, all[i]), false};
    c.is_maximal = std::find(maximal.begin(), maximal.end(), i) != maximal.end();
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conductor

/// Largest ideal of r inside s: { a : a R in S }.
inline Ideal conductor(const FiniteRing& r, const Subring& s, std::uint64_t bound = kDefaultScanBound) {
  if (!is_subring_group(r, s.group)) throw Error(Errc::NotASubring, "conductor of a non-subring");
  r.require_scan(bound, "conductor scan");
  std::vector<Element> members;
  r.for_each_element([&](const Element& a) {
    for (std::size_t i = 0; i < r.rank(); ++i)
      if (!s.contains(r.mul(a, r.generator(i)))) return;
    members.push_back(a);
  });
  return make_ideal(r, subgroup_generated(r, members));
}

// ---------------------------------------------------------------------------
// Maximal chains

struct ChainDesc {
  std::vector<Subring> rings;         // R = R_0 > R_1 > ... > R_l = R_[F_q]
  std::vector<std::uint64_t> indices; // [R_{k-1} : R_k]
};

/// R_{k+1} is the first hyperplane subring of R_k; stops when V(R_k) = 0.
/// Verifies every index is q and p^k R lies in R_k.
inline ChainDesc maximal_chain(const LocalRing& lr) {
  const FiniteRing& r = lr.ring();
  const LocalData& ld = lr.data();
  ChainDesc chain;
  chain.rings.push_back(whole_ring(r));
  for (;;) {
    const Subring& cur = chain.rings.back();
    const PresentedSubring ps = present_subring(r, cur);
    const LocalRing sub(ps.ring());
    const CharModule v = characteristic_module(sub);
    if (v.rho == 0) break;
    const Subring next_local = maximal_subrings_same_residue(sub, v).front();
    Subring next{ps.image(next_local.group), true};
    chain.indices.push_back(cur.order() / next.order());
    chain.rings.push_back(std::move(next));
  }
  if (chain.rings.back() != lower_ring(lr, ld.n))
    throw Error(Errc::VerificationFailed, "chain does not end at the coefficient ring");
  Coord pk = 1;
  for (std::size_t k = 0; k < chain.rings.size(); ++k) {
    if (k > 0 && chain.indices[k - 1] != static_cast<std::uint64_t>(ld.q))
      throw Error(Errc::VerificationFailed, "chain step with index != q");
    if (!scaled_ideal(r, pk).group.is_subgroup_of(chain.rings[k].group))
      throw Error(Errc::VerificationFailed, "p^k R is not contained in R_k");
    pk = arith::checked_mul(pk, ld.p);
  }
  return chain;
}

}  // namespace finring
