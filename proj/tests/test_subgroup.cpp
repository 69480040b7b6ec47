#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "finring/presets.hpp"
#include "finring/smith.hpp"
#include "finring/subgroup.hpp"
#include "oracle.hpp"

using namespace finring;

namespace {

Element el(std::vector<Coord> c) { return Element(std::move(c)); }

std::vector<Element> random_elements(const FiniteRing& r, std::mt19937_64& rng, std::size_t max_count) {
  std::uniform_int_distribution<std::uint64_t> pick(0, r.order() - 1);
  std::uniform_int_distribution<std::size_t> count(0, max_count);
  std::vector<Element> out;
  for (std::size_t i = count(rng); i > 0; --i) out.push_back(r.element_at(pick(rng)));
  return out;
}

const char* kRings[] = {"zmod(2,3)",
                        "zmod(12)",
                        "galois(2,2,2)",
                        "trunc_poly(zmod(2,2),2)",
                        "square_zero(zmod(3,1),2)",
                        "product(zmod(2,2),zmod(2,3))",
                        "product(zmod(4),zmod(6))",
                        "galois(2,3,3)",
                        "trunc_poly(zmod(3,2),2)"};

}  // namespace

TEST(Subgroup, Examples) {
  const FiniteRing z4 = zmod(2, 2);
  EXPECT_EQ(subgroup_generated(z4, std::vector{el({2})}).elements(), (std::vector{el({0}), el({2})}));

  const FiniteRing dual = parse_preset("trunc_poly(zmod(2,1),2)");
  EXPECT_EQ(subgroup_generated(dual, std::vector{el({1, 0})}).order(), 2u);

  const FiniteRing gr = parse_preset("galois(2,2,2)");
  const AdditiveSubgroup g = subgroup_generated(gr, std::vector{el({1, 0}), el({0, 2})});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.basis(), (std::vector{el({1, 0}), el({0, 2})}));
}

TEST(Subgroup, GeneratedFromItsBasisIsIdentical) {
  std::mt19937_64 rng(11);
  for (const char* expr : kRings) {
    const FiniteRing r = parse_preset(expr);
    for (int i = 0; i < 50; ++i) {
      const AdditiveSubgroup g = subgroup_generated(r, random_elements(r, rng, 4));
      EXPECT_EQ(subgroup_generated(r, g.basis()), g) << expr;
    }
  }
}

TEST(Subgroup, CanonicalUnderShuffleAndDuplication) {
  std::mt19937_64 rng(12);
  for (const char* expr : kRings) {
    const FiniteRing r = parse_preset(expr);
    for (int i = 0; i < 100; ++i) {
      std::vector<Element> gens = random_elements(r, rng, 5);
      const AdditiveSubgroup g = subgroup_generated(r, gens);
      std::vector<Element> other = gens;
      if (!gens.empty()) other.push_back(gens[rng() % gens.size()]);
      // Adding a combination of generators does not change the span.
      if (gens.size() >= 2) other.push_back(r.add(gens[0], r.int_mul(3, gens[1])));
      std::shuffle(other.begin(), other.end(), rng);
      const AdditiveSubgroup h = subgroup_generated(r, other);
      EXPECT_EQ(h.basis(), g.basis()) << expr;
    }
  }
}

TEST(Subgroup, MembershipAgreesWithEnumeration) {
  std::mt19937_64 rng(13);
  for (const char* expr : kRings) {
    const FiniteRing r = parse_preset(expr);
    ASSERT_LE(r.order(), 512u);
    const auto t = oracle::tables(r);
    for (int i = 0; i < 20; ++i) {
      const std::vector<Element> gens = random_elements(r, rng, 3);
      const AdditiveSubgroup g = subgroup_generated(r, gens);
      const oracle::Set expected = oracle::additive_closure(t, oracle::as_set(t, gens));
      EXPECT_EQ(g.order(), expected.size()) << expr;
      EXPECT_EQ(oracle::as_set(t, g.elements()), expected) << expr;
      for (int x = 0; x < t.size(); ++x)
        EXPECT_EQ(g.contains(t.elems[x]), std::binary_search(expected.begin(), expected.end(), x)) << expr;
    }
  }
}

TEST(Subgroup, ReduceGivesCanonicalCosetRepresentative) {
  std::mt19937_64 rng(14);
  for (const char* expr : kRings) {
    const FiniteRing r = parse_preset(expr);
    const AdditiveSubgroup g = subgroup_generated(r, random_elements(r, rng, 2));
    const auto members = g.elements();
    for (int i = 0; i < 50; ++i) {
      const Element x = r.element_at(rng() % r.order());
      const Element y = r.add(x, members[rng() % members.size()]);
      EXPECT_EQ(g.reduce(x), g.reduce(y));
      EXPECT_TRUE(g.contains(r.sub(x, g.reduce(x))));
    }
  }
}

TEST(Subgroup, SumAndIntersectionAgreeWithSets) {
  std::mt19937_64 rng(15);
  for (const char* expr : kRings) {
    const FiniteRing r = parse_preset(expr);
    if (r.order() > 128) continue;
    const auto t = oracle::tables(r);
    for (int i = 0; i < 20; ++i) {
      const AdditiveSubgroup a = subgroup_generated(r, random_elements(r, rng, 2));
      const AdditiveSubgroup b = subgroup_generated(r, random_elements(r, rng, 2));
      const oracle::Set sa = oracle::as_set(t, a.elements()), sb = oracle::as_set(t, b.elements());
      oracle::Set both;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
      oracle::Set seeds = sa;
      seeds.insert(seeds.end(), sb.begin(), sb.end());
      EXPECT_EQ(oracle::as_set(t, subgroup_intersection(a, b).elements()), both);
      EXPECT_EQ(oracle::as_set(t, subgroup_sum(a, b).elements()), oracle::additive_closure(t, seeds));
      EXPECT_EQ(a.is_subgroup_of(b), oracle::subset(sa, sb));
    }
  }
}

TEST(SmithForm, DiagonalDividesAndPreservesIndex) {
  using detail::Matrix;
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<Coord> entry(-12, 12);
  for (int i = 0; i < 200; ++i) {
    const std::size_t c = 1 + rng() % 3;
    Matrix a;
    for (std::size_t row = 0; row < c; ++row) a.push_back(std::vector<Coord>(c, 0));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    for (std::size_t k = 0; k < c; ++k) a[k][k] += 40;  // keep full rank
    const detail::Smith s = detail::smith_form(a, c);
    Coord prod = 1;
    for (std::size_t k = 0; k < c; ++k) {
      prod *= s.diag[k];
      if (k + 1 < c && s.diag[k] != 0) EXPECT_EQ(s.diag[k + 1] % s.diag[k], 0);
    }
    // |det| of the relation matrix is the group order.
    Coord det = 0;
    if (c == 1) det = a[0][0];
    if (c == 2) det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (c == 3)
      det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
            a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    EXPECT_EQ(std::abs(prod), std::abs(det));
    // V * V^-1 = I.
    for (std::size_t x = 0; x < c; ++x)
      for (std::size_t y = 0; y < c; ++y) {
        Coord sum = 0;
        for (std::size_t k = 0; k < c; ++k) sum += s.v[x][k] * s.v_inv[k][y];
        EXPECT_EQ(sum, x == y ? 1 : 0);
      }
  }
}

TEST(SmithForm, CyclicPresentationDropsTrivialFactors) {
  const auto cp = detail::cyclic_presentation({{2, 0}, {0, 3}}, 2);
  EXPECT_EQ(cp.orders, (std::vector<Coord>{6}));
  EXPECT_THROW(detail::cyclic_presentation({{2, 0}}, 2), Error);
}
