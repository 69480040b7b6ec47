#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finring/audit.hpp"
#include "finring/presets.hpp"

namespace finring {

/// Invariants a local catalog ring is expected to have.
struct ExpectedInvariants {
  unsigned rho = 0;
  Coord q = 0;
  unsigned n = 0;
  unsigned N = 0;
  Coord count_same_residue = 0;
  Coord count_total = 0;
};

struct CatalogEntry {
  std::string expr;                          // preset expression
  std::optional<ExpectedInvariants> expected;  // local rings only
  std::optional<std::size_t> maximal_local;  // products: maximal local subrings
  std::string provenance;

  FiniteRing ring() const { return parse_preset(expr); }
};

inline const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto local = [](std::string e, unsigned rho, Coord q, unsigned n, unsigned N, Coord same, Coord total,
                    std::string why) {
      return CatalogEntry{std::move(e), ExpectedInvariants{rho, q, n, N, same, total}, std::nullopt, std::move(why)};
    };
    auto prod = [](std::string e, std::optional<std::size_t> maxloc, std::string why) {
      return CatalogEntry{std::move(e), std::nullopt, maxloc, std::move(why)};
    };
    const std::string unram = "m = pR so V = 0; omega(n) subfield-kind subrings";
    const std::string formula = "(q^rho - 1)/(q - 1) + omega(n), confirmed by the subring census";
    return std::vector<CatalogEntry>{
        local("zmod(2,1)", 0, 2, 1, 1, 0, 0, unram),
        local("zmod(2,2)", 0, 2, 1, 2, 0, 0, unram),
        local("zmod(2,3)", 0, 2, 1, 3, 0, 0, unram),
        local("zmod(3,1)", 0, 3, 1, 1, 0, 0, unram),
        local("zmod(3,2)", 0, 3, 1, 2, 0, 0, unram),
        local("galois(2,1,2)", 0, 4, 2, 1, 0, 1, unram),
        local("galois(2,1,3)", 0, 8, 3, 1, 0, 1, unram),
        local("galois(3,1,2)", 0, 9, 2, 1, 0, 1, unram),
        local("galois(2,2,2)", 0, 4, 2, 2, 0, 1, unram),
        local("galois(3,2,2)", 0, 9, 2, 2, 0, 1, unram),
        local("galois(2,2,3)", 0, 8, 3, 2, 0, 1, unram),
        local("trunc_poly(zmod(2,1),2)", 1, 2, 1, 1, 1, 1, formula),
        local("trunc_poly(zmod(2,1),3)", 1, 2, 1, 1, 1, 1, formula),
        local("trunc_poly(zmod(2,1),4)", 1, 2, 1, 1, 1, 1, formula),
        local("trunc_poly(zmod(3,1),2)", 1, 3, 1, 1, 1, 1, formula),
        local("trunc_poly(zmod(3,1),3)", 1, 3, 1, 1, 1, 1, formula),
        local("trunc_poly(zmod(3,1),4)", 1, 3, 1, 1, 1, 1, formula),
        local("trunc_poly(galois(2,1,2),2)", 1, 4, 2, 1, 1, 2, formula),
        local("trunc_poly(zmod(2,2),2)", 1, 2, 1, 2, 1, 1, formula),
        local("square_zero(zmod(2,1),2)", 2, 2, 1, 1, 3, 3, formula),
        local("square_zero(zmod(3,1),2)", 2, 3, 1, 1, 4, 4, formula),
        local("square_zero(galois(2,1,2),2)", 2, 4, 2, 1, 5, 6, formula),
        local("square_zero(zmod(2,1),3)", 3, 2, 1, 1, 7, 7, formula),
        local("square_zero(zmod(2,2),1)", 1, 2, 1, 2, 1, 1, formula),
        prod("product(zmod(2,1),zmod(2,1))", 1, "the diagonal copy of F_2"),
        prod("product(zmod(2,1),galois(2,1,2))", 1, "pairs (a, a) with a in F_2"),
        prod("product(galois(2,1,2),galois(2,1,2))", 2, "graphs of the two automorphisms of F_4"),
        prod("product(zmod(2,1),zmod(2,1),zmod(2,1))", 1, "the diagonal copy of F_2"),
        prod("product(zmod(2,2),trunc_poly(zmod(2,1),2))", std::nullopt, "mixed characteristic 4 and 2"),
        prod("zmod(6)", 0, "no local subrings across different residue characteristics"),
        prod("zmod(12)", 0, "no local subrings across different residue characteristics"),
    };
  }();
  return entries;
}

/// audit_ring plus a check of the entry's recorded invariants.
inline AuditReport audit_catalog_entry(const CatalogEntry& e, std::uint64_t bound = kDefaultOracleBound) {
  const FiniteRing r = e.ring();
  AuditReport report = audit_ring(r, bound);
  detail::ClauseRunner run(report);
  if (e.expected) {
    run.run("catalog invariants match", [&](AuditClause& c) -> std::optional<std::string> {
      const ExpectedInvariants& x = *e.expected;
      const LocalRing lr(r, bound);
      const LocalData& ld = lr.data();
      const CharModule v = characteristic_module(lr);
      const Coord same = count_maximal_subrings_same_residue(lr);
      const Coord total = count_maximal_subrings_all(lr);
      c.cases = 6;
      if (v.rho != x.rho || ld.q != x.q || ld.n != x.n || ld.N != x.N || same != x.count_same_residue ||
          total != x.count_total)
        return "computed rho=" + std::to_string(v.rho) + " q=" + std::to_string(ld.q) + " n=" + std::to_string(ld.n) +
               " N=" + std::to_string(ld.N) + " counts=" + std::to_string(same) + "/" + std::to_string(total);
      return std::nullopt;
    });
  }
  if (e.maximal_local) {
    run.run("catalog maximal local subring count matches", [&](AuditClause& c) -> std::optional<std::string> {
      const std::size_t found = maximal_local_subrings_of_product(r, bound).size();
      c.cases = 1;
      if (found != *e.maximal_local) return "found " + std::to_string(found);
      return std::nullopt;
    });
  }
  return report;
}

}  // namespace finring
