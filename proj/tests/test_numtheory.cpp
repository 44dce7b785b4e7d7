#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace monoquartic;
using numtheory::factor;
using numtheory::is_perfect_square;
using numtheory::is_prime;
using numtheory::is_squarefree;

TEST(Factor, EmptyProductForOne) {
  const auto f = factor(Int(1));
  EXPECT_EQ(f.sign, 1);
  EXPECT_TRUE(f.factors.empty());
}

TEST(Factor, NegativeInput) {
  const auto f = factor(Int(-1728));
  EXPECT_EQ(f.sign, -1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], (numtheory::PrimePower{2, 6}));
  EXPECT_EQ(f.factors[1], (numtheory::PrimePower{3, 3}));
}

TEST(Factor, DiscriminantOfNineNineteen) {
  const auto f = factor(Int(19773));
  EXPECT_EQ(f.sign, 1);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0], (numtheory::PrimePower{3, 2}));
  EXPECT_EQ(f.factors[1], (numtheory::PrimePower{13, 3}));
}

TEST(Factor, ZeroIsDomainError) { EXPECT_THROW(factor(Int(0)), std::domain_error); }

TEST(Factor, CofactorsBeyondTrialDivision) {
  // 1000003 * 1000033 is past the trial-division bound; the third prime pushes past 64 bits
  const Int p1("1000003"), p2("1000033"), p3("4611686018427388039");
  const auto f = factor(p1 * p2 * p3 * p3);
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[0], (numtheory::PrimePower{p1, 1}));
  EXPECT_EQ(f.factors[1], (numtheory::PrimePower{p2, 1}));
  EXPECT_EQ(f.factors[2], (numtheory::PrimePower{p3, 2}));
  EXPECT_FALSE(is_squarefree(Int(p1 * p2 * p3 * p3)));
}

TEST(Squarefree, Examples) {
  EXPECT_FALSE(is_squarefree(Int(0)));
  EXPECT_TRUE(is_squarefree(Int(-15)));
  EXPECT_FALSE(is_squarefree(Int(12)));
  EXPECT_TRUE(is_squarefree(Int(1)));
  EXPECT_TRUE(is_squarefree(Int(-1)));
}

TEST(PerfectSquare, Examples) {
  EXPECT_TRUE(is_perfect_square(Int(1521)));
  EXPECT_FALSE(is_perfect_square(Int(-4)));
  EXPECT_TRUE(is_perfect_square(Int(0)));
  EXPECT_FALSE(is_perfect_square(Int(1520)));
}

TEST(Prime, Examples) {
  EXPECT_TRUE(is_prime(Int(13)));
  EXPECT_FALSE(is_prime(Int(1)));
  EXPECT_FALSE(is_prime(Int(0)));
  EXPECT_FALSE(is_prime(Int(-7)));
  EXPECT_TRUE(is_prime(Int("2305843009213693951")));  // 2^61 - 1
}

TEST(Prime, StrongPseudoprimesAreRejected) {
  // strong pseudoprimes to several small bases
  for (const char* n : {"2047", "3215031751", "341550071728321", "3825123056546413051", "318665857834031151167461"}) {
    EXPECT_FALSE(is_prime(Int(n))) << n;
  }
}

TEST(Prime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 100000; ++n) {
    ASSERT_EQ(numtheory::is_prime_u64(n), testsupport::trial_prime(n)) << n;
  }
}

TEST(FactorProperty, ReconstructionAndSquarefreeness) {
  std::mt19937_64 rng(20241016);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t v = 0;
    while (v == 0) v = testsupport::uniform(rng, -1000000000000LL, 1000000000000LL);
    const Int n = from_int64(v);
    const auto f = factor(n);
    ASSERT_EQ(f.value(), n);
    bool all_simple = true;
    for (std::size_t j = 0; j < f.factors.size(); ++j) {
      ASSERT_TRUE(is_prime(f.factors[j].prime));
      ASSERT_GE(f.factors[j].exponent, 1u);
      if (j > 0) {
        ASSERT_LT(f.factors[j - 1].prime, f.factors[j].prime);
      }
      all_simple = all_simple && f.factors[j].exponent == 1;
    }
    ASSERT_EQ(is_squarefree(n), all_simple) << v;
  }
}

TEST(PerfectSquareProperty, MatchesFloatingRootCheck) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    std::int64_t v = testsupport::uniform(rng, -1000000000000LL, 1000000000000LL);
    if (i % 3 == 0) {
      const std::int64_t r = testsupport::uniform(rng, 0, 1000000);
      v = r * r;
    }
    bool expected = false;
    if (v >= 0) {
      auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
      while (r * r > v) --r;
      while ((r + 1) * (r + 1) <= v) ++r;
      expected = r * r == v;
    }
    ASSERT_EQ(is_perfect_square(from_int64(v)), expected) << v;
  }
}

TEST(Divisors, PositiveDivisorsOfTwelve) {
  const auto d = numtheory::positive_divisors(Int(-12));
  const std::vector<Int> expected{1, 2, 3, 4, 6, 12};
  EXPECT_EQ(d, expected);
}
