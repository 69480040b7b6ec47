#include <gtest/gtest.h>

#include "finring/catalog.hpp"
#include "finring/decomposition.hpp"
#include "finring/isomorphism.hpp"
#include "oracle.hpp"

using namespace finring;

namespace {

Element el(std::vector<Coord> c) { return Element(std::move(c)); }

// F_2[x]/(x^2 - x).
FiniteRing split_f2() { return make_ring({2, 2}, {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, {1, 0}, "F_2[x]/(x^2-x)"); }

std::vector<FiniteRing> catalog_rings() {
  std::vector<FiniteRing> out;
  for (const CatalogEntry& e : builtin_catalog()) out.push_back(e.ring());
  return out;
}

std::size_t atom_index(const IdempotentSet& ids, const Element& e) {
  return static_cast<std::size_t>(std::find(ids.atoms.begin(), ids.atoms.end(), e) - ids.atoms.begin());
}

// Local subrings of r, maximal among local subrings, from set closure.
std::set<oracle::Set> oracle_maximal_local(const FiniteRing& r) {
  const auto t = oracle::tables(r);
  std::set<oracle::Set> local;
  for (const oracle::Set& s : oracle::all_subrings(t)) {
    oracle::Set nu;
    for (int x : s) {
      bool unit = false;
      for (int y : s) unit = unit || t.mul[x][y] == t.one;
      if (!unit) nu.push_back(x);
    }
    if (nu.size() != s.size() && oracle::additive_closure(t, nu) == nu) local.insert(s);
  }
  std::set<oracle::Set> out;
  for (const oracle::Set& s : local) {
    bool covered = false;
    for (const oracle::Set& o : local) covered = covered || (o != s && oracle::subset(s, o));
    if (!covered) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Sylow, Examples) {
  auto z6 = sylow_decompose(zmod(6));
  ASSERT_EQ(z6.size(), 2u);
  EXPECT_EQ(z6[0].prime, 2);
  EXPECT_EQ(z6[0].ring().order(), 2u);
  EXPECT_EQ(z6[1].prime, 3);
  EXPECT_EQ(z6[1].ring().order(), 3u);

  auto z4 = sylow_decompose(zmod(2, 2));
  ASSERT_EQ(z4.size(), 1u);
  EXPECT_EQ(z4[0].ring().order(), 4u);

  auto z12 = sylow_decompose(zmod(12));
  ASSERT_EQ(z12.size(), 2u);
  EXPECT_TRUE(isomorphic(z12[0].ring(), zmod(2, 2)));
  EXPECT_TRUE(isomorphic(z12[1].ring(), zmod(3, 1)));
  // The 2-component of 1 in Z/12 is 9.
  EXPECT_EQ(z12[0].identity, el({9}));
}

TEST(Idempotents, Examples) {
  const auto local = idempotents(parse_preset("galois(2,2,2)"));
  EXPECT_EQ(local.all.size(), 2u);
  EXPECT_EQ(local.atoms.size(), 1u);

  const auto f2f2 = idempotents(parse_preset("product(zmod(2,1),zmod(2,1))"));
  EXPECT_EQ(f2f2.all, (std::vector{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})}));
  EXPECT_EQ(f2f2.atoms, (std::vector{el({0, 1}), el({1, 0})}));

  const auto mixed = idempotents(parse_preset("product(zmod(2,2),trunc_poly(zmod(2,1),2))"));
  EXPECT_EQ(mixed.all.size(), 4u);
  EXPECT_EQ(mixed.atoms.size(), 2u);

  EXPECT_THROW(idempotents(parse_preset("galois(2,3,3)"), 100), Error);
}

TEST(Idempotents, AtomsAreCompleteAndOrthogonal) {
  for (const FiniteRing& r : catalog_rings()) {
    const IdempotentSet ids = idempotents(r);
    Element sum = r.zero();
    for (std::size_t i = 0; i < ids.atoms.size(); ++i) {
      sum = r.add(sum, ids.atoms[i]);
      for (std::size_t j = i + 1; j < ids.atoms.size(); ++j) EXPECT_TRUE(r.is_zero(r.mul(ids.atoms[i], ids.atoms[j])));
    }
    EXPECT_EQ(sum, r.one()) << r.label();
    // Every idempotent is the sum of exactly one subset of atoms.
    const std::size_t n = ids.atoms.size();
    EXPECT_EQ(ids.all.size(), std::size_t{1} << n) << r.label();
    std::set<Element> sums;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Element s = r.zero();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) s = r.add(s, ids.atoms[i]);
      sums.insert(s);
    }
    EXPECT_EQ(std::vector<Element>(sums.begin(), sums.end()), ids.all) << r.label();
  }
}

TEST(Locality, Examples) {
  const auto z8 = is_local(zmod(2, 3));
  ASSERT_TRUE(z8.local);
  EXPECT_EQ(z8.maximal_ideal->group.elements(), (std::vector{el({0}), el({2}), el({4}), el({6})}));

  const FiniteRing z6 = zmod(6);
  const auto l6 = is_local(z6);
  EXPECT_FALSE(l6.local);
  ASSERT_TRUE(l6.non_units_summing);
  const auto [a, b] = *l6.non_units_summing;
  EXPECT_FALSE(is_unit(z6, a));
  EXPECT_FALSE(is_unit(z6, b));
  EXPECT_TRUE(is_unit(z6, z6.add(a, b)));

  const auto gr = is_local(parse_preset("galois(2,2,2)"));
  ASSERT_TRUE(gr.local);
  EXPECT_EQ(gr.maximal_ideal->order(), 4u);
}

TEST(Locality, AgreesWithNonUnitClosure) {
  for (const FiniteRing& r : catalog_rings()) {
    const auto t = oracle::tables(r);
    const oracle::Set nu = oracle::non_units(t);
    const bool expect = oracle::additive_closure(t, nu) == nu;
    const auto loc = is_local(r);
    EXPECT_EQ(loc.local, expect) << r.label();
    if (loc.local) {
      EXPECT_EQ(oracle::as_set(t, loc.maximal_ideal->group.elements()), nu);
    }
  }
}

TEST(Locality, NilradicalIsTheNilpotentElements) {
  const FiniteRing r = parse_preset("product(zmod(2,2),trunc_poly(zmod(2,1),2))");
  EXPECT_EQ(nilradical(r).order(), 4u);
  EXPECT_EQ(nilradical(parse_preset("galois(2,1,3)")).order(), 1u);
}

TEST(LocalDecompose, Examples) {
  const auto z4 = local_decompose(zmod(2, 2));
  ASSERT_EQ(z4.factors.size(), 1u);
  EXPECT_EQ(z4.factors[0].ring().order(), 4u);

  const auto f2f4 = local_decompose(parse_preset("product(zmod(2,1),galois(2,1,2))"));
  ASSERT_EQ(f2f4.factors.size(), 2u);
  EXPECT_EQ(f2f4.factors[0].ring().order(), 2u);
  EXPECT_EQ(f2f4.factors[1].ring().order(), 4u);

  const auto split = local_decompose(split_f2());
  ASSERT_EQ(split.factors.size(), 2u);
  EXPECT_EQ(split.factors[0].atom, el({0, 1}));
  EXPECT_EQ(split.factors[1].atom, el({1, 1}));
  for (const auto& f : split.factors) EXPECT_TRUE(isomorphic(f.ring(), zmod(2, 1)));
}

TEST(LocalDecompose, FactorsAreLocalPrimaryAndMultiply) {
  for (const FiniteRing& r : catalog_rings()) {
    std::uint64_t prod = 1;
    for (const LocalFactor& f : local_decompose(r).factors) {
      prod *= f.ring().order();
      EXPECT_TRUE(is_local(f.ring()).local);
      EXPECT_TRUE(arith::as_prime_power(characteristic(f.ring()))) << r.label();
    }
    EXPECT_EQ(prod, r.order()) << r.label();
  }
}

TEST(LocalDecompose, UniqueUpToReordering) {
  for (const FiniteRing& r : catalog_rings()) {
    const auto first = local_decompose(r);
    std::vector<FiniteRing> parts;
    for (const auto& f : first.factors) parts.push_back(f.ring());
    // Reassemble in reverse order and decompose again.
    std::reverse(parts.begin(), parts.end());
    const auto again = local_decompose(product(parts));
    ASSERT_EQ(again.factors.size(), first.factors.size());
    for (std::size_t i = 0; i < first.factors.size(); ++i) {
      EXPECT_EQ(again.factors[i].ring().order(), first.factors[i].ring().order());
      EXPECT_TRUE(isomorphic(again.factors[i].ring(), first.factors[i].ring())) << r.label();
    }
  }
}

TEST(SubringPartition, Examples) {
  const FiniteRing f2f2 = parse_preset("product(zmod(2,1),zmod(2,1))");
  const Subring diag = subring_generated_by(f2f2, std::vector<Element>{});
  EXPECT_EQ(subring_partition(f2f2, diag), (std::vector<std::vector<std::size_t>>{{0, 1}}));
  EXPECT_EQ(subring_partition(f2f2, whole_ring(f2f2)), (std::vector<std::vector<std::size_t>>{{0}, {1}}));

  const FiniteRing cube = parse_preset("product(zmod(2,1),zmod(2,1),zmod(2,1))");
  const IdempotentSet ids = idempotents(cube);
  const Subring b = subring_generated_by(cube, std::vector{el({0, 0, 1})});
  ASSERT_EQ(b.order(), 4u);  // {(a, a, c)}
  auto blocks = subring_partition(cube, b);
  std::set<std::set<std::size_t>> got;
  for (const auto& blk : blocks) got.insert(std::set<std::size_t>(blk.begin(), blk.end()));
  const std::set<std::set<std::size_t>> want = {
      {atom_index(ids, el({1, 0, 0})), atom_index(ids, el({0, 1, 0}))}, {atom_index(ids, el({0, 0, 1}))}};
  EXPECT_EQ(got, want);

  EXPECT_THROW(subring_partition(f2f2, Subring{subgroup_generated(f2f2, std::vector{el({1, 0})}), true}), Error);
}

TEST(SubringPartition, EveryCensusSubringPartitionsTheAtoms) {
  for (const FiniteRing& r : catalog_rings())
    for (const Subring& s : enumerate_all_subrings(r)) EXPECT_NO_THROW(subring_partition(r, s)) << r.label();
}

TEST(ResidueIntersection, Examples) {
  EXPECT_EQ(residue_field_intersection(std::vector<Coord>{4, 8}), 2);
  EXPECT_EQ(residue_field_intersection(std::vector<Coord>{4, 16}), 4);
  EXPECT_EQ(residue_field_intersection(std::vector<Coord>{8, 8}), 8);
  try {
    residue_field_intersection(std::vector<Coord>{4, 9});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MixedCharacteristic);
  }
  EXPECT_EQ(residue_field_intersection(parse_preset("product(galois(2,1,2),galois(2,1,3))")), 2);
}

TEST(MaximalLocalSubrings, Examples) {
  const FiniteRing f2f2 = parse_preset("product(zmod(2,1),zmod(2,1))");
  const auto a = maximal_local_subrings_of_product(f2f2);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].group.elements(), (std::vector{el({0, 0}), el({1, 1})}));

  const auto b = maximal_local_subrings_of_product(parse_preset("product(zmod(2,1),galois(2,1,2))"));
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].order(), 2u);

  const auto c = maximal_local_subrings_of_product(parse_preset("product(galois(2,1,2),galois(2,1,2))"));
  ASSERT_EQ(c.size(), 2u);
  for (const Subring& s : c) EXPECT_EQ(s.order(), 4u);

  EXPECT_TRUE(maximal_local_subrings_of_product(zmod(6)).empty());
}

TEST(MaximalLocalSubrings, AgreeWithOracle) {
  for (const FiniteRing& r : catalog_rings()) {
    if (r.order() > 64) continue;
    const auto t = oracle::tables(r);
    std::set<oracle::Set> mine;
    for (const Subring& s : maximal_local_subrings_of_product(r)) mine.insert(oracle::as_set(t, s.group.elements()));
    EXPECT_EQ(mine, oracle_maximal_local(r)) << r.label();
  }
}
