#include <gtest/gtest.h>

#include "finsum/fibonacci.hpp"
#include "finsum/finite_sums.hpp"

using finsum::HardyKind;
using finsum::Int;
using finsum::Rational;

TEST(Fibonacci, Values) {
  const long expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21};
  for (long n = 0; n <= 8; ++n) EXPECT_EQ(finsum::fib(n), expected[n]) << n;
  EXPECT_EQ(finsum::fib(25), 75025);
  EXPECT_EQ(finsum::fib(100), Int("354224848179261915075"));
  EXPECT_THROW(finsum::fib(-1), finsum::DomainError);
}

TEST(Fibonacci, Recurrence) {
  for (long n = 1; n < 200; ++n) ASSERT_EQ(finsum::fib(n + 1), finsum::fib(n) + finsum::fib(n - 1));
}

TEST(Fibonacci, Pairs) {
  EXPECT_EQ(finsum::symmetric_pair(1), (finsum::IntPair{2, 5}));
  EXPECT_EQ(finsum::symmetric_pair(2), (finsum::IntPair{5, 13}));
  EXPECT_EQ(finsum::symmetric_pair(3), (finsum::IntPair{13, 34}));
  EXPECT_EQ(finsum::kuch_pair(1), (finsum::IntPair{5, 13}));
  EXPECT_EQ(finsum::kuch_pair(2), (finsum::IntPair{89, 233}));
  EXPECT_EQ(finsum::kuch_pair(3), (finsum::IntPair{1597, 4181}));
  EXPECT_THROW(finsum::symmetric_pair(0), finsum::DomainError);
  EXPECT_THROW(finsum::kuch_pair(0), finsum::DomainError);
}

TEST(Fibonacci, PairRecognition) {
  for (long n = 1; n <= 12; ++n) {
    const auto [h, k] = finsum::symmetric_pair(n);
    EXPECT_TRUE(finsum::is_symmetric_pair(h, k)) << n;
    EXPECT_FALSE(finsum::is_symmetric_pair(k, h)) << n;
    EXPECT_TRUE(finsum::is_coprime(h, k));
  }
  for (long n = 1; n <= 5; ++n) {
    const auto [h, k] = finsum::kuch_pair(n);
    EXPECT_TRUE(finsum::is_kuch_pair(h, k)) << n;
    EXPECT_TRUE(finsum::is_symmetric_pair(h, k)) << n;
  }
  EXPECT_FALSE(finsum::is_symmetric_pair(1, 2));  // n = 0 is excluded
  EXPECT_FALSE(finsum::is_symmetric_pair(3, 8));  // even-indexed
  EXPECT_FALSE(finsum::is_symmetric_pair(4, 9));
  EXPECT_FALSE(finsum::is_kuch_pair(2, 5));
  EXPECT_FALSE(finsum::is_kuch_pair(13, 34));
}

TEST(Fibonacci, SymmetricPairsHaveVanishingDedekindSums) {
  for (long n = 1; n <= 10; ++n) {
    const auto [h, k] = finsum::symmetric_pair(n);
    EXPECT_EQ(finsum::dedekind_fast(h, k), Rational(0)) << n;
    EXPECT_EQ(finsum::dedekind_fast(k, h), Rational(0)) << n;
  }
}

TEST(Fibonacci, SixNPairsAreSymmetric) {
  for (long n = 1; n <= 6; ++n) {
    const auto [h, k] = finsum::kuch_pair(n);
    EXPECT_EQ(finsum::dedekind_fast(h, k), finsum::dedekind_fast(k, h)) << n;
  }
}

TEST(Fibonacci, SixNPairIdentities) {
  for (long n = 1; n <= 2; ++n) {
    const auto [h, k] = finsum::kuch_pair(n);
    const Rational hr(h);
    const Rational kr(k);
    const Rational s5_sum = finsum::hardy_sum(HardyKind::S5, h, k) + finsum::hardy_sum(HardyKind::S5, k, h);
    EXPECT_EQ(s5_sum, Rational(1, 2) * (hr / kr + kr / hr - Rational(2)));
    EXPECT_EQ(hr * finsum::simsek_y(h, k) + kr * finsum::simsek_y(k, h),
              Rational(2) * hr * hr + Rational(2) * kr * kr - Rational(4) * hr * kr);
    const Rational b1 = kr * finsum::b1_sum(h, k) + hr * finsum::b1_sum(k, h);
    EXPECT_EQ(b1, (hr * hr - hr - kr + kr * kr) / Rational(2) - hr * kr + Rational(1));
    if (n == 1) EXPECT_EQ(b1, Rational(24));
  }
}
