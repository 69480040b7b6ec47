#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "finring/arith.hpp"

using namespace finring;
using namespace finring::arith;

TEST(Arith, ModIsNonNegative) {
  EXPECT_EQ(mod(-1, 7), 6);
  EXPECT_EQ(mod(-8, 7), 6);
  EXPECT_EQ(mod(14, 7), 0);
}

TEST(Arith, MulmodDoesNotOverflow) {
  const Coord big = (Coord{1} << 62) - 57;
  EXPECT_EQ(mulmod(big - 1, big - 1, big), 1);
}

TEST(Arith, CheckedOpsThrowOnOverflow) {
  const Coord max = std::numeric_limits<Coord>::max();
  EXPECT_THROW(checked_mul(max / 2, 3), Error);
  EXPECT_THROW(checked_add(max, 1), Error);
  try {
    ipow(2, 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Overflow);
  }
  EXPECT_EQ(ipow(3, 4), 81);
  EXPECT_EQ(ipow(5, 0), 1);
}

TEST(Arith, ExtendedGcd) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Coord> d(-100000, 100000);
  for (int i = 0; i < 1000; ++i) {
    const Coord a = d(rng), b = d(rng);
    auto [g, x, y] = ext_gcd(a, b);
    EXPECT_EQ(x * a + y * b, g);
    EXPECT_GE(g, 0);
    if (g != 0) {
      EXPECT_EQ(a % g, 0);
      EXPECT_EQ(b % g, 0);
    }
  }
}

TEST(Arith, Primes) {
  std::vector<Coord> primes;
  for (Coord n = 0; n < 50; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<Coord>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}));
}

TEST(Arith, Factorization) {
  EXPECT_EQ(factorize(360), (std::vector<std::pair<Coord, unsigned>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(prime_divisors(12), (std::vector<Coord>{2, 3}));
  EXPECT_EQ(omega(1), 0u);
  EXPECT_EQ(omega(2), 1u);
  EXPECT_EQ(omega(6), 2u);
  EXPECT_EQ(omega(30), 3u);
}

TEST(Arith, PrimePowers) {
  auto pp = as_prime_power(8);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->p, 2);
  EXPECT_EQ(pp->e, 3u);
  EXPECT_FALSE(as_prime_power(12));
  EXPECT_FALSE(as_prime_power(1));
  EXPECT_EQ(as_prime_power(81)->e, 4u);
}

TEST(Arith, ProjectiveCount) {
  EXPECT_EQ(projective_count(2, 0), 0);
  EXPECT_EQ(projective_count(2, 1), 1);
  EXPECT_EQ(projective_count(2, 2), 3);
  EXPECT_EQ(projective_count(2, 3), 7);
  EXPECT_EQ(projective_count(4, 2), 5);
  EXPECT_EQ(projective_count(3, 2), 4);
  for (Coord q : {2, 3, 4, 5, 7, 8, 9})
    for (unsigned rho = 0; rho < 6; ++rho) EXPECT_EQ(projective_count(q, rho) * (q - 1), ipow(q, rho) - 1);
}

TEST(Arith, ChineseRemainder) {
  for (Coord m : {3, 4, 8, 9})
    for (Coord n : {7, 11, 25})
      for (Coord a = 0; a < m; ++a)
        for (Coord b = 0; b < n; ++b) {
          const Coord x = crt(a, m, b, n);
          EXPECT_GE(x, 0);
          EXPECT_LT(x, m * n);
          EXPECT_EQ(x % m, a);
          EXPECT_EQ(x % n, b);
        }
  EXPECT_THROW(crt(1, 4, 1, 6), Error);
}
