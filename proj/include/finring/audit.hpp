#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "finring/census.hpp"
#include "finring/decomposition.hpp"
#include "finring/galois.hpp"
#include "finring/isomorphism.hpp"
#include "finring/lattice.hpp"
#include "finring/local.hpp"
#include "finring/presets.hpp"

namespace finring {

struct AuditClause {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;  // instances checked
  std::string witness;      // first counterexample, when failed
};

struct AuditReport {
  std::string label;
  std::uint64_t order = 0;
  bool local = false;
  std::vector<AuditClause> clauses;

  bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const AuditClause& c) { return c.passed; });
  }
  const AuditClause* find(std::string_view name) const {
    for (const AuditClause& c : clauses)
      if (c.name == name) return &c;
    return nullptr;
  }
};

namespace detail {

class ClauseRunner {
 public:
  explicit ClauseRunner(AuditReport& report) : report_(report) {}

  // body records cases via c.cases and returns a witness string on failure.
  void run(std::string name, const std::function<std::optional<std::string>(AuditClause&)>& body) {
    AuditClause c;
    c.name = std::move(name);
    try {
      if (auto w = body(c)) {
        c.passed = false;
        c.witness = std::move(*w);
      }
    } catch (const Error& e) {
      if (e.code() == Errc::ScanBoundExceeded) throw;
      c.passed = false;
      c.witness = e.what();
    }
    report_.clauses.push_back(std::move(c));
  }

 private:
  AuditReport& report_;
};

inline std::string describe(const AdditiveSubgroup& g) {
  std::string s = "{order " + std::to_string(g.order()) + ", basis";
  for (const Element& b : g.basis()) s += " " + to_string(b);
  return s + "}";
}

/// {x in S : x^|F_S| = x}: the Teichmuller set of a subring S with residue
/// field F_S.
inline std::vector<Element> subring_teichmuller(const FiniteRing& r, const AdditiveSubgroup& s, Coord residue) {
  std::vector<Element> out;
  for (const Element& x : s.elements())
    if (r.pow(x, static_cast<std::uint64_t>(residue)) == x) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

/// T + I is a subring with residue field F_q: the generated subgroup has
/// exactly q |I| elements and is closed under multiplication.
inline std::optional<std::string> teichmuller_plus_is_subring(const LocalRing& lr, const AdditiveSubgroup& i) {
  std::vector<Element> gens = lr.teichmuller().tbar;
  gens.insert(gens.end(), i.basis().begin(), i.basis().end());
  const AdditiveSubgroup g = subgroup_generated(lr.ring(), gens);
  if (g.order() != static_cast<std::uint64_t>(lr.data().q) * i.order())
    return "T + " + describe(i) + " is not closed under addition";
  if (!is_subring_group(lr.ring(), g)) return "T + " + describe(i) + " is not closed under multiplication";
  if (residue_size_of(lr, g) != lr.data().q) return "T + " + describe(i) + " has a smaller residue field";
  return std::nullopt;
}

inline bool same_set(std::vector<AdditiveSubgroup> a, std::vector<AdditiveSubgroup> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline void audit_conductors(ClauseRunner& run, const FiniteRing& r, const std::vector<Subring>& subrings,
                             const std::vector<Ideal>& ideals, std::uint64_t bound) {
  run.run("conductor is the largest ideal inside the subring", [&](AuditClause& c) -> std::optional<std::string> {
    for (const Subring& s : subrings) {
      const Ideal cond = conductor(r, s, bound);
      ++c.cases;
      if (!is_ideal_group(r, cond.group)) return "conductor of " + describe(s.group) + " is not an ideal";
      if (!cond.group.is_subgroup_of(s.group)) return "conductor of " + describe(s.group) + " leaves the subring";
      for (const Ideal& i : ideals)
        if (i.group.is_subgroup_of(s.group) && !i.group.is_subgroup_of(cond.group))
          return "ideal " + describe(i.group) + " inside " + describe(s.group) + " misses the conductor";
      // S / c is a subring of R / c of order |S| / |c|.
      const QuotientRing quo = quotient(r, cond);
      std::vector<Element> images;
      for (const Element& b : s.group.basis()) images.push_back(quo.project(b));
      images.push_back(quo.project(r.one()));
      const AdditiveSubgroup img = subgroup_generated(quo.ring(), images);
      if (img.order() * cond.order() != s.order() || !is_subring_group(quo.ring(), img))
        return "image of " + describe(s.group) + " modulo its conductor is wrong";
    }
    return std::nullopt;
  });
}

inline void audit_decomposition(ClauseRunner& run, const FiniteRing& r, const std::vector<Subring>& subrings,
                                std::uint64_t bound) {
  const IdempotentSet ids = idempotents(r, bound);

  run.run("atoms are orthogonal and sum to one", [&](AuditClause& c) -> std::optional<std::string> {
    Element sum = r.zero();
    for (std::size_t i = 0; i < ids.atoms.size(); ++i) {
      sum = r.add(sum, ids.atoms[i]);
      for (std::size_t j = i + 1; j < ids.atoms.size(); ++j) {
        ++c.cases;
        if (!r.is_zero(r.mul(ids.atoms[i], ids.atoms[j])))
          return "atoms " + to_string(ids.atoms[i]) + " and " + to_string(ids.atoms[j]) + " are not orthogonal";
      }
    }
    ++c.cases;
    if (sum != r.one()) return "atoms sum to " + to_string(sum);
    return std::nullopt;
  });

  const LocalFactorization fac = local_decompose(r, bound);

  run.run("local factors multiply to the ring", [&](AuditClause& c) -> std::optional<std::string> {
    std::uint64_t prod = 1;
    for (const LocalFactor& f : fac.factors) {
      ++c.cases;
      prod *= f.ring().order();
      if (!is_local(f.ring(), bound).local) return "factor at atom " + to_string(f.atom) + " is not local";
      if (!arith::as_prime_power(characteristic(f.ring())))
        return "factor at atom " + to_string(f.atom) + " has non-prime-power characteristic";
    }
    if (prod != r.order()) return "factor orders multiply to " + std::to_string(prod);
    return std::nullopt;
  });

  run.run("local factorization is unique", [&](AuditClause& c) -> std::optional<std::string> {
    std::vector<FiniteRing> rings;
    for (const LocalFactor& f : fac.factors) rings.push_back(f.ring());
    const LocalFactorization again = local_decompose(product(rings), bound);
    if (again.factors.size() != fac.factors.size()) return "re-assembled ring has a different number of factors";
    std::vector<char> used(again.factors.size(), 0);
    for (const LocalFactor& f : fac.factors) {
      ++c.cases;
      bool matched = false;
      for (std::size_t j = 0; j < again.factors.size() && !matched; ++j)
        if (!used[j] && isomorphic(f.ring(), again.factors[j].ring())) used[j] = matched = true;
      if (!matched) return "factor at atom " + to_string(f.atom) + " has no isomorphic partner";
    }
    return std::nullopt;
  });

  run.run("primary components multiply to the ring", [&](AuditClause& c) -> std::optional<std::string> {
    std::uint64_t prod = 1;
    for (const SylowComponent& s : sylow_decompose(r)) {
      ++c.cases;
      prod *= s.ring().order();
      auto pp = arith::as_prime_power(static_cast<Coord>(s.ring().order()));
      if (!pp || pp->p != s.prime) return "component for " + std::to_string(s.prime) + " is not primary";
    }
    if (prod != r.order()) return "component orders multiply to " + std::to_string(prod);
    return std::nullopt;
  });

  run.run("subring idempotents partition the atoms", [&](AuditClause& c) -> std::optional<std::string> {
    for (const Subring& s : subrings) {
      ++c.cases;
      subring_partition(r, s, bound);
    }
    return std::nullopt;
  });

  run.run("maximal local subrings contain the radical and reduce into the common field",
          [&](AuditClause& c) -> std::optional<std::string> {
            std::vector<Coord> sizes = residue_sizes(r, bound);
            std::set<Coord> chars;
            for (Coord q : sizes) chars.insert(arith::as_prime_power(q)->p);
            const auto found = maximal_local_subrings_of_product(r, bound);
            c.cases = found.size();
            if (chars.size() > 1 && !found.empty()) return "local subring in mixed residue characteristic";
            if (sizes.size() == 1 && !(found.size() == 1 && found[0].order() == r.order()))
              return "a local ring must be its own maximal local subring";
            return std::nullopt;
          });
}

inline void audit_local(ClauseRunner& run, const LocalRing& lr, const std::vector<Subring>& subrings,
                        const std::vector<Ideal>& ideals) {
  const FiniteRing& r = lr.ring();
  const LocalData& ld = lr.data();
  const AdditiveSubgroup full = full_group(r);
  const AdditiveSubgroup& m = ld.maximal.group;
  const AdditiveSubgroup m2 = ideal_product(r, ld.maximal, ld.maximal).group;
  const AdditiveSubgroup pr = scaled_ideal(r, ld.p).group;
  const CharModule v = characteristic_module(lr);
  const AdditiveSubgroup& denom = v.denominator.group;
  const auto& tbar = lr.teichmuller().tbar;

  std::vector<AdditiveSubgroup> ms(subrings.size());
  std::vector<Coord> qs(subrings.size());
  for (std::size_t i = 0; i < subrings.size(); ++i) {
    ms[i] = subgroup_intersection(subrings[i].group, m);
    qs[i] = static_cast<Coord>(subrings[i].order() / ms[i].order());
  }
  const auto maximal_idx = maximal_among(subrings, [&](const Subring& s) { return s.order() != r.order(); });
  std::vector<AdditiveSubgroup> oracle_same, oracle_all;
  for (std::size_t i : maximal_idx) {
    oracle_all.push_back(subrings[i].group);
    if (qs[i] == ld.q) oracle_same.push_back(subrings[i].group);
  }

  // Teichmuller structure.
  run.run("Teichmuller set has q elements fixed by x -> x^q", [&](AuditClause& c) -> std::optional<std::string> {
    if (static_cast<Coord>(tbar.size()) != ld.q) return "|T| = " + std::to_string(tbar.size());
    for (const Element& t : tbar) {
      ++c.cases;
      if (r.pow(t, static_cast<std::uint64_t>(ld.q)) != t) return to_string(t) + "^q != itself";
    }
    if (!teichmuller_is_unique(lr)) return "another element of order dividing q - 1 exists";
    return std::nullopt;
  });

  run.run("Teichmuller set plus maximal ideal is a bijection onto the ring",
          [&](AuditClause& c) -> std::optional<std::string> {
            if (static_cast<std::uint64_t>(tbar.size()) * m.order() != r.order()) return "|T| |m| != |R|";
            std::optional<std::string> bad;
            r.for_each_element([&](const Element& a) {
              if (bad) return;
              ++c.cases;
              auto [t, x] = lr.decompose(a);
              if (!std::binary_search(tbar.begin(), tbar.end(), t) || !m.contains(x) || r.add(t, x) != a)
                bad = "decomposition of " + to_string(a) + " fails";
              else if (lr.is_unit(a) == r.is_zero(t))
                bad = "Teichmuller component of " + to_string(a) + " does not detect units";
            });
            return bad;
          });

  if (r.order() <= 512) {
    run.run("Teichmuller lift is multiplicative", [&](AuditClause& c) -> std::optional<std::string> {
      std::vector<Element> units;
      r.for_each_element([&](const Element& x) {
        if (lr.is_unit(x)) units.push_back(x);
      });
      std::vector<Element> lifts;
      for (const Element& u : units) lifts.push_back(lr.lift(u));
      for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i; j < units.size(); ++j) {
          ++c.cases;
          if (lr.lift(r.mul(units[i], units[j])) != r.mul(lifts[i], lifts[j]))
            return "lift(" + to_string(units[i]) + " * " + to_string(units[j]) + ") differs";
        }
      return std::nullopt;
    });
  }

  run.run("residue field tables agree with the quotient by m", [&](AuditClause& c) -> std::optional<std::string> {
    const ResidueField f = residue_field(lr);
    c.cases = static_cast<std::uint64_t>(f.q * f.q);
    for (unsigned d = 1; d <= ld.n; ++d)
      if (ld.n % d == 0 && f.subfields.at(d).size() != static_cast<std::size_t>(arith::ipow(ld.p, d)))
        return "subfield of degree " + std::to_string(d) + " has the wrong size";
    return std::nullopt;
  });

  // Coefficient ring.
  run.run("coefficient ring is the Galois ring of matching size", [&](AuditClause& c) -> std::optional<std::string> {
    const Subring s = lower_ring(lr, ld.n);
    c.cases = 1;
    const Coord expect = arith::ipow(ld.p, ld.N * ld.n);
    if (static_cast<Coord>(s.order()) != expect) return "|S| = " + std::to_string(s.order());
    std::vector<Element> ps;
    for (const Element& b : s.group.basis()) ps.push_back(r.int_mul(ld.p, b));
    if (subgroup_intersection(s.group, m) != subgroup_generated(r, ps)) return "m_S != pS";
    if (detail::residue_size_of(lr, s.group) != ld.q) return "residue field of S is smaller than F_q";
    if (s.order() <= 256) {
      const PresentedSubring pres = present_subring(r, s);
      if (!galois_isomorphism(pres.ring(), ld.p, ld.N, ld.n)) return "no isomorphism with the Galois ring";
    }
    return std::nullopt;
  });

  run.run("lower and upper rings bound the subrings with a given residue field",
          [&](AuditClause& c) -> std::optional<std::string> {
            for (unsigned d = 1; d <= ld.n; ++d) {
              if (ld.n % d != 0) continue;
              const Subring lo = lower_ring(lr, d);
              const Subring hi = upper_ring(lr, d);
              const Coord fd = arith::ipow(ld.p, d);
              if (static_cast<Coord>(r.order() / hi.order()) != ld.q / fd) return "upper ring has the wrong index";
              for (std::size_t i = 0; i < subrings.size(); ++i) {
                ++c.cases;
                if (qs[i] == fd && !lo.group.is_subgroup_of(subrings[i].group))
                  return "lower ring of degree " + std::to_string(d) + " not inside " + describe(subrings[i].group);
                if (fd % qs[i] == 0 && arith::as_prime_power(fd)->e % arith::as_prime_power(qs[i])->e == 0 &&
                    !subrings[i].group.is_subgroup_of(hi.group))
                  return describe(subrings[i].group) + " not inside the upper ring of degree " + std::to_string(d);
              }
            }
            return std::nullopt;
          });

  if (ld.N == 1) {
    run.run("Frobenius image is a copy of the residue field", [&](AuditClause& c) -> std::optional<std::string> {
      const Subring f = frobenius_field_embedding(lr);
      c.cases = 1;
      if (static_cast<Coord>(f.order()) != ld.q) return "image has order " + std::to_string(f.order());
      if (subgroup_intersection(f.group, m).order() != 1) return "image meets the maximal ideal";
      return std::nullopt;
    });
  }

  if (is_unramified(lr)) {
    run.run("unramified elements factor as p^i times a unit", [&](AuditClause& c) -> std::optional<std::string> {
      std::optional<std::string> bad;
      r.for_each_element([&](const Element& a) {
        if (bad || r.is_zero(a)) return;
        ++c.cases;
        auto [i, u] = p_adic_unit_decomposition(lr, a);
        if (!lr.is_unit(u) || r.int_mul(arith::ipow(ld.p, i), u) != a) bad = "decomposition of " + to_string(a);
      });
      return bad;
    });
  }

  // Subrings against the maximal ideal.
  run.run("a proper subring plus m^2 is proper", [&](AuditClause& c) -> std::optional<std::string> {
    for (const Subring& s : subrings) {
      if (s.order() == r.order()) continue;
      ++c.cases;
      if (subgroup_sum(s.group, m2) == full) return describe(s.group) + " + m^2 = R";
    }
    return std::nullopt;
  });

  run.run("same residue field and maximal ideal force the whole ring",
          [&](AuditClause& c) -> std::optional<std::string> {
            for (std::size_t i = 0; i < subrings.size(); ++i) {
              if (qs[i] != ld.q || ms[i] != m) continue;
              ++c.cases;
              if (subrings[i].order() != r.order()) return describe(subrings[i].group) + " is proper";
            }
            return std::nullopt;
          });

  run.run("m_S + m^2 = m forces m_S = m", [&](AuditClause& c) -> std::optional<std::string> {
    for (std::size_t i = 0; i < subrings.size(); ++i) {
      ++c.cases;
      if (subgroup_sum(ms[i], m2) == m && ms[i] != m) return describe(subrings[i].group);
    }
    return std::nullopt;
  });

  run.run("an ideal I in m with I + m^2 = m is m", [&](AuditClause& c) -> std::optional<std::string> {
    for (const Ideal& i : ideals) {
      if (!i.group.is_subgroup_of(m)) continue;
      ++c.cases;
      if (subgroup_sum(i.group, m2) == m && i.group != m) return describe(i.group);
    }
    return std::nullopt;
  });

  run.run("maximal same-residue subrings contain m^2 + pR and have ideal maximal ideals",
          [&](AuditClause& c) -> std::optional<std::string> {
            for (std::size_t i : maximal_idx) {
              if (qs[i] != ld.q) continue;
              ++c.cases;
              if (!denom.is_subgroup_of(subrings[i].group)) return describe(subrings[i].group) + " misses m^2 + pR";
              if (!is_ideal_group(r, ms[i])) return "maximal ideal of " + describe(subrings[i].group) + " is not an ideal";
              if (!denom.is_subgroup_of(ms[i])) return "maximal ideal of " + describe(subrings[i].group) + " misses m^2 + pR";
            }
            return std::nullopt;
          });

  // Characteristic module.
  const std::vector<SubspaceDesc> spaces = enumerate_subspaces(lr, v);

  run.run("ideals over m^2 + pR correspond to subspaces of V", [&](AuditClause& c) -> std::optional<std::string> {
    std::vector<AdditiveSubgroup> from_ideals, from_spaces;
    for (const Ideal& i : ideals)
      if (denom.is_subgroup_of(i.group) && i.group.is_subgroup_of(m)) from_ideals.push_back(i.group);
    for (const SubspaceDesc& w : spaces) {
      ++c.cases;
      const Ideal i = ideal_from_subspace(lr, v, w);
      if (!(subspace_from_ideal(lr, v, i) == w)) return "round trip fails at " + describe(w.preimage);
      if (w.preimage.order() != static_cast<std::uint64_t>(arith::ipow(ld.q, v.rho - w.codim)) * denom.order())
        return "subspace " + describe(w.preimage) + " has the wrong size";
      from_spaces.push_back(w.preimage);
    }
    for (const SubspaceDesc& a : spaces)
      for (const SubspaceDesc& b : spaces)
        if (a.preimage.is_subgroup_of(b.preimage) != ideal_from_subspace(lr, v, a).group.is_subgroup_of(
                                                         ideal_from_subspace(lr, v, b).group))
          return "inclusion is not preserved";
    if (!same_set(from_ideals, from_spaces)) return "ideal census and subspace census differ";
    return std::nullopt;
  });

  run.run("Teichmuller set plus pR is a subring", [&](AuditClause& c) -> std::optional<std::string> {
    c.cases = 1;
    return teichmuller_plus_is_subring(lr, pr);
  });

  run.run("Teichmuller set plus an ideal over m^2 + pR is a subring",
          [&](AuditClause& c) -> std::optional<std::string> {
            for (const SubspaceDesc& w : spaces) {
              ++c.cases;
              if (auto bad = teichmuller_plus_is_subring(lr, w.preimage)) return bad;
            }
            return std::nullopt;
          });

  run.run("a maximal same-residue subring exists iff V is nonzero", [&](AuditClause& c) -> std::optional<std::string> {
    c.cases = 1;
    const bool exists = !oracle_same.empty();
    if (exists != (v.rho != 0)) return "existence disagrees with rho = " + std::to_string(v.rho);
    if (exists != (lower_ring(lr, ld.n).order() != r.order())) return "existence disagrees with the coefficient ring";
    return std::nullopt;
  });

  run.run("V = 0 leaves the ring as its only same-residue subring", [&](AuditClause& c) -> std::optional<std::string> {
    if (v.rho != 0) return std::nullopt;
    if (!(m == pr)) return "V = 0 but m != pR";
    for (std::size_t i = 0; i < subrings.size(); ++i) {
      ++c.cases;
      if (qs[i] == ld.q && subrings[i].order() != r.order()) return describe(subrings[i].group);
    }
    return std::nullopt;
  });

  run.run("equal residue fields iff equal Teichmuller sets", [&](AuditClause& c) -> std::optional<std::string> {
    std::vector<std::vector<Element>> ts;
    for (std::size_t i = 0; i < subrings.size(); ++i) {
      ts.push_back(subring_teichmuller(r, subrings[i].group, qs[i]));
      if (static_cast<Coord>(ts.back().size()) != qs[i]) return "Teichmuller set of " + describe(subrings[i].group);
    }
    for (std::size_t i = 0; i < subrings.size(); ++i)
      for (std::size_t j = i + 1; j < subrings.size(); ++j) {
        ++c.cases;
        if ((qs[i] == qs[j]) != (ts[i] == ts[j]))
          return describe(subrings[i].group) + " vs " + describe(subrings[j].group);
      }
    return std::nullopt;
  });

  // Maximal subrings.
  run.run("hyperplane subrings are the maximal same-residue subrings",
          [&](AuditClause& c) -> std::optional<std::string> {
            std::vector<AdditiveSubgroup> built;
            for (const Subring& s : maximal_subrings_same_residue(lr, v)) built.push_back(s.group);
            c.cases = built.size();
            if (static_cast<Coord>(built.size()) != arith::projective_count(ld.q, v.rho))
              return "found " + std::to_string(built.size()) + " hyperplane subrings";
            if (!same_set(built, oracle_same))
              return "oracle found " + std::to_string(oracle_same.size()) + ", formula " + std::to_string(built.size());
            return std::nullopt;
          });

  run.run("maximal subrings are of the two kinds", [&](AuditClause& c) -> std::optional<std::string> {
    std::vector<AdditiveSubgroup> built;
    for (const ClassifiedSubring& s : maximal_subrings_all(lr)) {
      ++c.cases;
      built.push_back(s.ring.group);
      if (classify(lr, s.ring) != s.kind) return describe(s.ring.group) + " has the wrong kind";
      const std::uint64_t want =
          s.kind == SubringKind::SameResidue ? static_cast<std::uint64_t>(ld.q) : static_cast<std::uint64_t>(ld.q / s.residue_field_size);
      if (s.index != want || r.order() / s.ring.order() != want) return describe(s.ring.group) + " has the wrong index";
    }
    if (static_cast<Coord>(built.size()) != count_maximal_subrings_all(lr)) return "count differs from the formula";
    if (!same_set(built, oracle_all))
      return "oracle found " + std::to_string(oracle_all.size()) + ", formula " + std::to_string(built.size());
    return std::nullopt;
  });

  run.run("same-residue subring is maximal iff its index is q", [&](AuditClause& c) -> std::optional<std::string> {
    for (std::size_t t = 0; t < subrings.size(); ++t) {
      if (qs[t] != ld.q) continue;
      for (std::size_t s = 0; s < subrings.size(); ++s) {
        if (s == t || qs[s] != ld.q || !subrings[s].group.is_subgroup_of(subrings[t].group)) continue;
        ++c.cases;
        bool between = false;
        for (std::size_t u = 0; u < subrings.size() && !between; ++u)
          between = u != s && u != t && subrings[s].group.is_subgroup_of(subrings[u].group) &&
                    subrings[u].group.is_subgroup_of(subrings[t].group);
        const bool index_q = subrings[t].order() / subrings[s].order() == static_cast<std::uint64_t>(ld.q);
        if (between == index_q) return describe(subrings[s].group) + " in " + describe(subrings[t].group);
      }
    }
    return std::nullopt;
  });

  if (ld.n == 1) {
    run.run("with prime residue field, maximal means index p", [&](AuditClause& c) -> std::optional<std::string> {
      std::uint64_t index_p = 0;
      for (std::size_t i = 0; i < subrings.size(); ++i) {
        ++c.cases;
        const bool is_p = r.order() / subrings[i].order() == static_cast<std::uint64_t>(ld.p);
        const bool is_max = std::find(maximal_idx.begin(), maximal_idx.end(), i) != maximal_idx.end();
        index_p += is_p;
        if (is_p != is_max) return describe(subrings[i].group);
      }
      if (static_cast<Coord>(index_p) != arith::projective_count(ld.p, v.rho)) return "index-p count differs";
      return std::nullopt;
    });
  }

  run.run("maximal chain has all indices q and p^k R in R_k", [&](AuditClause& c) -> std::optional<std::string> {
    const ChainDesc chain = maximal_chain(lr);
    c.cases = chain.rings.size();
    std::uint64_t prod = 1;
    for (std::uint64_t i : chain.indices) prod *= i;
    if (prod * chain.rings.back().order() != r.order()) return "indices do not multiply to [R : R_l]";
    // A coarser step R_k > R_{k+2} has index q^2 and the skipped ring sits strictly between.
    for (std::size_t k = 0; k + 2 < chain.rings.size(); ++k) {
      const auto& a = chain.rings[k].group;
      const auto& mid = chain.rings[k + 1].group;
      const auto& b = chain.rings[k + 2].group;
      if (!(b.is_subgroup_of(mid) && mid.is_subgroup_of(a) && mid != a && mid != b)) return "skipped step has no witness";
    }
    return std::nullopt;
  });
}

}  // namespace detail

/// Every structural statement checked over the full subring and ideal census.
/// ScanBoundExceeded propagates; any other failure is recorded per clause.
inline AuditReport audit_ring(const FiniteRing& r, std::uint64_t bound = kDefaultOracleBound) {
  r.require_scan(bound, "audit");
  AuditReport report;
  report.label = r.label();
  report.order = r.order();
  detail::ClauseRunner run(report);
  const std::vector<Subring> subrings = enumerate_all_subrings(r, bound);
  const std::vector<Ideal> ideals = enumerate_all_ideals(r, bound);

  run.run("subring census is sound", [&](AuditClause& c) -> std::optional<std::string> {
    c.cases = subrings.size() + ideals.size();
    for (const Subring& s : subrings)
      if (!is_subring_group(r, s.group)) return detail::describe(s.group) + " is not a subring";
    for (const Ideal& i : ideals)
      if (!is_ideal_group(r, i.group)) return detail::describe(i.group) + " is not an ideal";
    if (subrings.front().group != prime_subring(r).group) return "smallest subring is not the prime subring";
    if (subrings.back().order() != r.order()) return "largest subring is not the ring";
    return std::nullopt;
  });

  const LocalityResult loc = is_local(r, bound);
  report.local = loc.local;
  if (loc.local) {
    const LocalRing lr(r, bound);
    detail::audit_local(run, lr, subrings, ideals);
  }
  detail::audit_decomposition(run, r, subrings, bound);
  detail::audit_conductors(run, r, subrings, ideals, bound);
  return report;
}

}  // namespace finring
