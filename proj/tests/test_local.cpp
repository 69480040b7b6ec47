#include <gtest/gtest.h>

#include "finring/catalog.hpp"
#include "finring/local.hpp"
#include "oracle.hpp"

using namespace finring;

namespace {

Element el(std::vector<Coord> c) { return Element(std::move(c)); }

std::vector<LocalRing> local_catalog() {
  std::vector<LocalRing> out;
  for (const CatalogEntry& e : builtin_catalog())
    if (e.expected) out.emplace_back(e.ring());
  out.emplace_back(parse_preset("trunc_poly(galois(3,1,2),2)"));
  out.emplace_back(parse_preset("square_zero(galois(2,2,2),1)"));
  return out;
}

int log_base(std::uint64_t x, std::uint64_t b) {
  int k = 0;
  while (x > 1) {
    if (x % b != 0) return -1;
    x /= b;
    ++k;
  }
  return k;
}

}  // namespace

TEST(LocalData, Examples) {
  const LocalData z8 = local_data(zmod(2, 3));
  EXPECT_EQ(z8.p, 2);
  EXPECT_EQ(z8.N, 3u);
  EXPECT_EQ(z8.n, 1u);
  EXPECT_EQ(z8.q, 2);
  EXPECT_EQ(z8.nilpotency_index, 3u);
  EXPECT_EQ(z8.unit_group_order, 4u);

  const LocalData gr = local_data(parse_preset("galois(2,2,2)"));
  EXPECT_EQ(gr.q, 4);
  EXPECT_EQ(gr.n, 2u);
  EXPECT_EQ(gr.N, 2u);
  EXPECT_EQ(gr.unit_group_order, 12u);

  const LocalData sz = local_data(parse_preset("square_zero(galois(2,1,2),2)"));
  EXPECT_EQ(sz.q, 4);
  EXPECT_EQ(sz.N, 1u);
  EXPECT_EQ(sz.nilpotency_index, 2u);
  EXPECT_EQ(sz.maximal.order(), 16u);

  try {
    local_data(zmod(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotLocal);
  }
}

TEST(LocalData, AgreesWithOracle) {
  for (const LocalRing& lr : local_catalog()) {
    const FiniteRing& r = lr.ring();
    const auto t = oracle::tables(r);
    const oracle::Set m = oracle::non_units(t);
    const LocalData& ld = lr.data();
    EXPECT_EQ(oracle::as_set(t, ld.maximal.group.elements()), m) << r.label();
    EXPECT_EQ(static_cast<std::uint64_t>(ld.q) * m.size(), r.order());
    EXPECT_EQ(log_base(static_cast<std::uint64_t>(ld.q), static_cast<std::uint64_t>(ld.p)), static_cast<int>(ld.n));
    EXPECT_EQ(ld.unit_group_order, oracle::units(t).size());
    // Nilpotency index: least v with every v-fold product of m equal to zero.
    oracle::Set power = m;
    unsigned v = 1;
    while (power.size() > 1) {
      oracle::Set prods;
      for (int a : power)
        for (int b : m) prods.push_back(t.mul[a][b]);
      power = oracle::additive_closure(t, prods);
      ++v;
    }
    EXPECT_EQ(ld.nilpotency_index, v) << r.label();
  }
}

TEST(IdealPower, Examples) {
  const FiniteRing r = parse_preset("trunc_poly(zmod(2,1),4)");
  const LocalRing lr(r);
  EXPECT_EQ(ideal_power(r, lr.maximal(), 0).order(), 16u);
  EXPECT_EQ(ideal_power(r, lr.maximal(), 1).order(), 8u);
  EXPECT_EQ(ideal_power(r, lr.maximal(), 2).order(), 4u);
  EXPECT_EQ(ideal_power(r, lr.maximal(), 4).order(), 1u);
}

TEST(Teichmuller, Examples) {
  const LocalRing z9(zmod(3, 2));
  EXPECT_EQ(z9.lift(el({4})), el({1}));
  EXPECT_EQ(z9.lift(el({5})), el({8}));
  EXPECT_EQ(z9.teichmuller().tbar, (std::vector{el({0}), el({1}), el({8})}));
  EXPECT_THROW(z9.lift(el({3})), Error);

  const auto [t, m] = z9.decompose(el({7}));
  EXPECT_EQ(t, el({1}));
  EXPECT_EQ(m, el({6}));

  const LocalRing dual(parse_preset("trunc_poly(zmod(2,1),2)"));
  EXPECT_EQ(dual.teichmuller().tbar, (std::vector{el({0, 0}), el({1, 0})}));
}

TEST(Teichmuller, FixedPointsOfQthPower) {
  for (const LocalRing& lr : local_catalog()) {
    const FiniteRing& r = lr.ring();
    const auto q = static_cast<std::uint64_t>(lr.data().q);
    std::vector<Element> fixed;
    r.for_each_element([&](const Element& x) {
      if (r.pow(x, q) == x && (r.is_zero(x) || lr.is_unit(x))) fixed.push_back(x);
    });
    std::sort(fixed.begin(), fixed.end());
    EXPECT_EQ(fixed, lr.teichmuller().tbar) << r.label();
    EXPECT_TRUE(teichmuller_is_unique(lr));
    // Generator has multiplicative order q - 1.
    const Element& g = lr.teichmuller().generator;
    std::set<Element> powers;
    Element x = r.one();
    for (Coord i = 0; i + 1 < lr.data().q; ++i) {
      powers.insert(x);
      x = r.mul(x, g);
    }
    EXPECT_EQ(powers.size(), static_cast<std::size_t>(lr.data().q - 1));
    EXPECT_EQ(x, r.one());
  }
}

TEST(Teichmuller, DecompositionIsABijection) {
  for (const LocalRing& lr : local_catalog()) {
    const FiniteRing& r = lr.ring();
    std::set<std::pair<Element, Element>> pairs;
    r.for_each_element([&](const Element& a) {
      const auto [t, m] = lr.decompose(a);
      EXPECT_TRUE(std::binary_search(lr.teichmuller().tbar.begin(), lr.teichmuller().tbar.end(), t));
      EXPECT_TRUE(lr.maximal().contains(m));
      EXPECT_EQ(r.add(t, m), a);
      pairs.emplace(t, m);
    });
    EXPECT_EQ(pairs.size(), r.order());
    EXPECT_EQ(lr.teichmuller().tbar.size() * lr.maximal().order(), r.order());
  }
}

TEST(Teichmuller, LiftIsMultiplicative) {
  for (const LocalRing& lr : local_catalog()) {
    const FiniteRing& r = lr.ring();
    if (r.order() > 256) continue;
    std::vector<Element> units;
    r.for_each_element([&](const Element& x) {
      if (lr.is_unit(x)) units.push_back(x);
    });
    for (const Element& u : units) {
      EXPECT_TRUE(lr.maximal().contains(r.sub(lr.lift(u), u)));
      for (const Element& v : units) EXPECT_EQ(lr.lift(r.mul(u, v)), r.mul(lr.lift(u), lr.lift(v))) << r.label();
    }
  }
}

TEST(ResidueField, TablesFormAField) {
  for (const LocalRing& lr : local_catalog()) {
    const ResidueField f = residue_field(lr);
    const std::size_t q = f.elements.size();
    ASSERT_EQ(static_cast<Coord>(q), lr.data().q);
    const std::size_t zero = lr.tbar_index(lr.ring().zero()), one = lr.tbar_index(lr.ring().one());
    for (std::size_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add[a][zero], a);
      EXPECT_EQ(f.mul[a][one], a);
      bool has_neg = false, has_inv = a == zero;
      for (std::size_t b = 0; b < q; ++b) {
        has_neg = has_neg || f.add[a][b] == zero;
        has_inv = has_inv || f.mul[a][b] == one;
        for (std::size_t c = 0; c < q; ++c) {
          EXPECT_EQ(f.add[f.add[a][b]][c], f.add[a][f.add[b][c]]);
          EXPECT_EQ(f.mul[a][f.add[b][c]], f.add[f.mul[a][b]][f.mul[a][c]]);
        }
      }
      EXPECT_TRUE(has_neg && has_inv);
    }
    for (const auto& [d, idx] : f.subfields)
      EXPECT_EQ(static_cast<Coord>(idx.size()), arith::ipow(lr.data().p, d));
  }
}

TEST(TauSubgroup, Examples) {
  const LocalRing f4(parse_preset("galois(2,1,2)"));
  EXPECT_EQ(tau_subgroup(f4, 1).size(), 2u);
  EXPECT_EQ(tau_subgroup(f4, 2).size(), 4u);
  try {
    tau_subgroup(f4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubfieldDegree);
  }
}

TEST(LowerUpperRings, Examples) {
  const LocalRing gr(parse_preset("galois(2,2,2)"));
  EXPECT_EQ(lower_ring(gr, 1).order(), 4u);   // Z/4
  EXPECT_EQ(lower_ring(gr, 2).order(), 16u);
  EXPECT_EQ(upper_ring(gr, 1).order(), 8u);   // Z/4 + 2R
  EXPECT_EQ(upper_ring(gr, 2).order(), 16u);

  const LocalRing sz(parse_preset("square_zero(galois(2,1,2),2)"));
  EXPECT_EQ(lower_ring(sz, 2).order(), 4u);
  EXPECT_EQ(upper_ring(sz, 1).order(), 32u);
}

TEST(LowerUpperRings, BoundAllSubringsWithAGivenResidueField) {
  for (const LocalRing& lr : local_catalog()) {
    const FiniteRing& r = lr.ring();
    if (r.order() > 64) continue;
    const auto t = oracle::tables(r);
    const oracle::Set m = oracle::as_set(t, lr.maximal().group.elements());
    for (unsigned d = 1; d <= lr.data().n; ++d) {
      if (lr.data().n % d != 0) continue;
      const oracle::Set lo = oracle::as_set(t, lower_ring(lr, d).group.elements());
      const oracle::Set hi = oracle::as_set(t, upper_ring(lr, d).group.elements());
      const Coord pd = arith::ipow(lr.data().p, d);
      for (const oracle::Set& s : oracle::all_subrings(t)) {
        oracle::Set sm;
        std::set_intersection(s.begin(), s.end(), m.begin(), m.end(), std::back_inserter(sm));
        if (static_cast<Coord>(s.size() / sm.size()) != pd) continue;
        EXPECT_TRUE(oracle::subset(lo, s)) << r.label() << " d=" << d;
        EXPECT_TRUE(oracle::subset(s, hi)) << r.label() << " d=" << d;
      }
    }
  }
}

TEST(Frobenius, ImageIsTheLowerRing) {
  for (const LocalRing& lr : local_catalog()) {
    if (lr.data().N != 1) {
      EXPECT_THROW(frobenius_field_embedding(lr), Error);
      continue;
    }
    EXPECT_EQ(frobenius_field_embedding(lr).group, lower_ring(lr, lr.data().n).group) << lr.ring().label();
  }
}

TEST(PAdic, Examples) {
  const LocalRing z8(zmod(2, 3));
  EXPECT_EQ(p_adic_unit_decomposition(z8, el({6})), std::make_pair(1u, el({3})));
  EXPECT_EQ(p_adic_unit_decomposition(z8, el({4})), std::make_pair(2u, el({1})));
  EXPECT_EQ(p_adic_unit_decomposition(z8, el({5})), std::make_pair(0u, el({5})));
  EXPECT_THROW(p_adic_unit_decomposition(z8, el({0})), Error);

  const LocalRing gr(parse_preset("galois(2,2,2)"));
  EXPECT_TRUE(is_unramified(gr));
  const auto [i, u] = p_adic_unit_decomposition(gr, el({0, 2}));
  EXPECT_EQ(i, 1u);
  EXPECT_EQ(u, el({0, 1}));

  const LocalRing dual(parse_preset("trunc_poly(zmod(2,1),2)"));
  EXPECT_FALSE(is_unramified(dual));
  EXPECT_THROW(p_adic_unit_decomposition(dual, el({0, 1})), Error);
}

TEST(PAdic, EveryNonzeroElementDecomposes) {
  for (const char* expr : {"zmod(3,3)", "galois(2,2,2)", "galois(3,2,2)", "galois(2,3,2)"}) {
    const LocalRing lr(parse_preset(expr));
    const FiniteRing& r = lr.ring();
    r.for_each_element([&](const Element& a) {
      if (r.is_zero(a)) return;
      const auto [i, u] = p_adic_unit_decomposition(lr, a);
      EXPECT_TRUE(lr.is_unit(u));
      EXPECT_LT(i, lr.data().N);
      EXPECT_EQ(r.int_mul(arith::ipow(lr.data().p, i), u), a) << expr;
    });
  }
}

TEST(CharacteristicModule, Examples) {
  EXPECT_EQ(characteristic_module(LocalRing(parse_preset("galois(2,2,2)"))).rho, 0u);
  EXPECT_EQ(characteristic_module(LocalRing(parse_preset("trunc_poly(zmod(2,1),4)"))).rho, 1u);
  EXPECT_EQ(characteristic_module(LocalRing(parse_preset("square_zero(galois(2,1,2),2)"))).rho, 2u);
  const CharModule v = characteristic_module(LocalRing(parse_preset("square_zero(zmod(2,1),3)")));
  EXPECT_EQ(v.rho, 3u);
  EXPECT_EQ(v.coset_basis.size(), 3u);
}

TEST(CharacteristicModule, DimensionAgreesWithOracle) {
  for (const LocalRing& lr : local_catalog()) {
    const FiniteRing& r = lr.ring();
    const auto t = oracle::tables(r);
    const oracle::Set m = oracle::non_units(t);
    oracle::Set seeds;
    const int p_elem = t.of(r.int_mul(lr.data().p, r.one()));
    for (int a : m)
      for (int b : m) seeds.push_back(t.mul[a][b]);
    for (int x = 0; x < t.size(); ++x) seeds.push_back(t.mul[p_elem][x]);
    const oracle::Set denom = oracle::ideal_closure(t, seeds);
    const int rho = log_base(m.size() / denom.size(), static_cast<std::uint64_t>(lr.data().q));
    const CharModule v = characteristic_module(lr);
    EXPECT_EQ(static_cast<int>(v.rho), rho) << r.label();
    EXPECT_EQ(oracle::as_set(t, v.denominator.group.elements()), denom);
  }
}
