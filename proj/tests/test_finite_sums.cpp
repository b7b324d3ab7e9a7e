#include <chrono>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "finsum/finite_sums.hpp"
#include "oracle.hpp"

using finsum::HardyKind;
using finsum::Int;
using finsum::ParityClass;
using finsum::Rational;

namespace {

Rational S(long h, long k) { return finsum::hardy_sum(HardyKind::S, h, k); }
Rational s5(long h, long k) { return finsum::hardy_sum(HardyKind::S5, h, k); }

template <typename Fn>
void for_coprime(long h_max, long k_max, Fn&& fn) {
  for (long k = 1; k <= k_max; ++k) {
    for (long h = 1; h <= h_max; ++h) {
      if (finsum::is_coprime(h, k)) fn(h, k);
    }
  }
}

}  // namespace

TEST(Dedekind, NaiveExamples) {
  EXPECT_EQ(finsum::dedekind_naive(1, 3), Rational(1, 18));
  EXPECT_EQ(finsum::dedekind_naive(3, 5), Rational(0));
  EXPECT_EQ(finsum::dedekind_naive(1, 1), Rational(0));
  EXPECT_EQ(finsum::dedekind_naive(2, 6), Rational(1, 18));
  EXPECT_THROW(finsum::dedekind_naive(1, 0), finsum::DomainError);
  EXPECT_THROW(finsum::dedekind_naive(1, -3), finsum::DomainError);
}

TEST(Dedekind, NaiveMatchesOracleIncludingNonCoprimeAndNegative) {
  for (long k = 1; k <= 40; ++k) {
    for (long h = -45; h <= 45; ++h) {
      ASSERT_EQ(finsum::dedekind_naive(h, k), oracle::dedekind(h, k)) << h << "," << k;
    }
  }
}

TEST(Dedekind, FastExamples) {
  EXPECT_EQ(finsum::dedekind_fast(3, 5), Rational(0));
  EXPECT_EQ(finsum::dedekind_fast(5, 3), Rational(-1, 18));
  EXPECT_EQ(finsum::dedekind_fast(1, 2), Rational(0));
  EXPECT_EQ(finsum::dedekind_fast(0, 1), Rational(0));
  EXPECT_THROW(finsum::dedekind_fast(2, 6), finsum::PreconditionError);
  EXPECT_THROW(finsum::dedekind_fast(1, 0), finsum::DomainError);
}

TEST(Dedekind, FastMatchesNaive) {
  for_coprime(150, 150, [](long h, long k) {
    ASSERT_EQ(finsum::dedekind_fast(h, k), finsum::dedekind_naive(h, k)) << h << "," << k;
  });
  // negative and out-of-range h go through periodicity and oddness
  for (long k = 1; k <= 30; ++k) {
    for (long h = -70; h <= 70; ++h) {
      if (!finsum::is_coprime(h, k)) continue;
      ASSERT_EQ(finsum::dedekind_fast(h, k), finsum::dedekind_naive(h, k)) << h << "," << k;
    }
  }
}

TEST(Dedekind, FastHandlesHugeModuli) {
  const Int k("1000000000039");
  std::mt19937_64 rng(7);
  const auto start = std::chrono::steady_clock::now();
  int done = 0;
  while (done < 10) {
    const Int h(static_cast<unsigned long>(rng() % 999999999999ULL + 1));
    if (!finsum::is_coprime(h, k)) continue;
    const Rational value = finsum::dedekind_fast(h, k);
    // s(-h, k) = -s(h, k) and s(h + k, k) = s(h, k)
    ASSERT_EQ(finsum::dedekind_fast(-h, k), -value);
    ASSERT_EQ(finsum::dedekind_fast(h + k, k), value);
    ++done;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(ms, 1000.0);
}

TEST(Hardy, Examples) {
  EXPECT_EQ(S(1, 2), Rational(1));
  EXPECT_EQ(s5(1, 3), Rational(1, 3));
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S3, 1, 3), Rational(1, 3));
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S4, 1, 2), Rational(1));
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S1, 2, 3), Rational(-1, 3));
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S2, 1, 2), Rational(0));
  EXPECT_THROW(finsum::hardy_sum(HardyKind::S, 1, 0), finsum::DomainError);
}

TEST(Hardy, ExamplesAgreeWithDedekindCrossChecks) {
  // s3(1,3) = 2s(1,3) - 4s(2,3); s4(1,2) = -4s(1,2) + 8s(1,4); s1(2,3) = 2s(2,3) - 4s(2,6)
  using finsum::dedekind_naive;
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S3, 1, 3), Rational(2) * dedekind_naive(1, 3) - Rational(4) * dedekind_naive(2, 3));
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S4, 1, 2), Rational(-4) * dedekind_naive(1, 2) + Rational(8) * dedekind_naive(1, 4));
  EXPECT_EQ(finsum::hardy_sum(HardyKind::S1, 2, 3), Rational(2) * dedekind_naive(2, 3) - Rational(4) * dedekind_naive(2, 6));
}

TEST(Hardy, AllKindsMatchOracle) {
  for (long k = 1; k <= 30; ++k) {
    for (long h = -31; h <= 31; ++h) {
      ASSERT_EQ(finsum::hardy_sum(HardyKind::S, h, k), oracle::S(h, k)) << h << "," << k;
      ASSERT_EQ(finsum::hardy_sum(HardyKind::S1, h, k), oracle::s1(h, k)) << h << "," << k;
      ASSERT_EQ(finsum::hardy_sum(HardyKind::S2, h, k), oracle::s2(h, k)) << h << "," << k;
      ASSERT_EQ(finsum::hardy_sum(HardyKind::S3, h, k), oracle::s3(h, k)) << h << "," << k;
      ASSERT_EQ(finsum::hardy_sum(HardyKind::S4, h, k), oracle::s4(h, k)) << h << "," << k;
      ASSERT_EQ(finsum::hardy_sum(HardyKind::S5, h, k), oracle::s5(h, k)) << h << "," << k;
    }
  }
}

TEST(Hardy, ParityForcedZeros) {
  for_coprime(60, 60, [](long h, long k) {
    const bool h_odd = h % 2 != 0;
    const bool k_odd = k % 2 != 0;
    if (h_odd == k_odd) ASSERT_EQ(S(h, k), Rational(0));
    if (h_odd) ASSERT_EQ(finsum::hardy_sum(HardyKind::S1, h, k), Rational(0));
    if (k_odd) ASSERT_EQ(finsum::hardy_sum(HardyKind::S2, h, k), Rational(0));
    if (!k_odd) ASSERT_EQ(finsum::hardy_sum(HardyKind::S3, h, k), Rational(0));
    if (!h_odd) ASSERT_EQ(finsum::hardy_sum(HardyKind::S4, h, k), Rational(0));
    if (h_odd != k_odd) ASSERT_EQ(s5(h, k), Rational(0));
  });
}

TEST(S5Alt, Examples) {
  EXPECT_EQ(finsum::s5_alt(1, 3), Rational(1, 3));
  EXPECT_EQ(finsum::s5_alt(1, 1), Rational(0));
  EXPECT_EQ(finsum::s5_alt(3, 5), s5(3, 5));
  EXPECT_EQ(finsum::s5_alt(3, 5), Rational(4, 5));
  EXPECT_THROW(finsum::s5_alt(2, 5), finsum::PreconditionError);
  EXPECT_THROW(finsum::s5_alt(3, 4), finsum::PreconditionError);
}

TEST(S5Alt, EqualsS5ForOddPairs) {
  for (long k = 1; k <= 99; k += 2) {
    for (long h = 1; h <= 99; h += 2) {
      if (!finsum::is_coprime(h, k)) continue;
      ASSERT_EQ(finsum::s5_alt(h, k), s5(h, k)) << h << "," << k;
    }
  }
}

TEST(MixedSum, Examples) {
  EXPECT_EQ(finsum::mixed_sum(1, 3), s5(1, 3) - Rational(1, 2) * S(1, 3));
  EXPECT_EQ(finsum::mixed_sum(1, 3), Rational(1, 3));
  EXPECT_EQ(finsum::mixed_sum(1, 1), Rational(0));
  EXPECT_EQ(finsum::mixed_sum(2, 3), Rational(-1));
  EXPECT_EQ(finsum::mixed_sum(2, 3), s5(2, 3) - Rational(1, 2) * S(2, 3));
}

TEST(MixedSum, DecomposesIntoS5AndS) {
  for_coprime(60, 60, [](long h, long k) {
    ASSERT_EQ(finsum::mixed_sum(h, k), oracle::mixed(h, k));
    ASSERT_EQ(finsum::mixed_sum(h, k), s5(h, k) - Rational(1, 2) * S(h, k)) << h << "," << k;
  });
}

TEST(SimsekY, Examples) {
  EXPECT_EQ(finsum::simsek_y(1, 3), Rational(4));
  EXPECT_EQ(finsum::simsek_y(3, 1), Rational(0));
  EXPECT_EQ(finsum::simsek_y(5, 13), Rational(4 * 13) * s5(5, 13));
  EXPECT_EQ(finsum::simsek_y(5, 13), Rational(-16));
  EXPECT_THROW(finsum::simsek_y(1, 0), finsum::DomainError);
  EXPECT_THROW(finsum::simsek_y(2, 4), finsum::PreconditionError);
}

TEST(SimsekY, EqualsFourKTimesS5) {
  for_coprime(60, 60, [](long h, long k) {
    ASSERT_EQ(finsum::simsek_y(h, k), Rational(4 * k) * s5(h, k)) << h << "," << k;
    ASSERT_EQ(finsum::simsek_y(h, k), oracle::Y(h, k));
  });
}

TEST(C1, Examples) {
  EXPECT_EQ(finsum::c1_sum(1, 3), Rational(1, 3));
  EXPECT_EQ(finsum::c1_sum(1, 1), Rational(0));
  EXPECT_EQ(finsum::c1_sum(3, 5), Rational(2, 5));
  EXPECT_THROW(finsum::c1_sum(1, -1), finsum::DomainError);
  for_coprime(40, 40, [](long h, long k) { ASSERT_EQ(finsum::c1_sum(h, k), oracle::C1(h, k)); });
}

TEST(B1, Examples) {
  EXPECT_EQ(finsum::b1_sum(3, 2), Rational(1));
  EXPECT_EQ(finsum::b1_sum(5, 2), Rational(-2));
  EXPECT_EQ(finsum::b1_sum(3, 5), Rational(2));
  EXPECT_EQ(finsum::b1_sum(5, 3), Rational(-2));
  for (long k = 1; k <= 50; ++k) EXPECT_EQ(finsum::b1_sum(1, k), Rational(0)) << k;
  EXPECT_THROW(finsum::b1_sum(1, 0), finsum::DomainError);
}

TEST(B1, MatchesOracle) {
  for (long k = 1; k <= 40; ++k) {
    for (long h = -41; h <= 41; ++h) ASSERT_EQ(finsum::b1_sum(h, k), oracle::B1(h, k)) << h << "," << k;
  }
}

TEST(B1, VariantWithoutJDiffers) {
  // B1(3,2) with (-1)^floor only: 1 * (-1)^1 = -1; the laws need the j-signed form.
  EXPECT_EQ(finsum::b1_variant_no_j(3, 2), Rational(-1));
  EXPECT_EQ(finsum::b1_variant_no_j(1, 7), Rational(0));
  EXPECT_NE(finsum::b1_variant_no_j(3, 2), finsum::b1_sum(3, 2));
}

TEST(YMulti, Examples) {
  const std::vector<Int> a{3, 2};
  const std::vector<Int> b{2, 3};
  const std::vector<Int> c{5, 2};
  EXPECT_EQ(finsum::y_multi(a), Rational(1));
  EXPECT_EQ(finsum::y_multi(b), Rational(-3));
  EXPECT_EQ(finsum::y_multi(c), Rational(-2));
}

TEST(YMulti, Preconditions) {
  const std::vector<Int> one{3};
  const std::vector<Int> shared{2, 4};
  const std::vector<Int> three_shared{3, 5, 9};
  const std::vector<Int> zero{3, 0};
  EXPECT_THROW(finsum::y_multi(one), finsum::PreconditionError);
  EXPECT_THROW(finsum::y_multi(shared), finsum::PreconditionError);
  EXPECT_THROW(finsum::y_multi(three_shared), finsum::PreconditionError);
  EXPECT_THROW(finsum::y_multi(zero), finsum::PreconditionError);
}

TEST(YMulti, MatchesOracle) {
  for (long n = 2; n <= 23; ++n) {
    for (long a1 = 1; a1 <= 12; ++a1) {
      for (long a2 = 1; a2 <= 12; ++a2) {
        if (!finsum::is_coprime(a1, n) || !finsum::is_coprime(a2, n) || !finsum::is_coprime(a1, a2)) continue;
        const std::vector<Int> args{a1, a2, n};
        ASSERT_EQ(finsum::y_multi(args), oracle::Y_multi(args));
      }
      if (finsum::is_coprime(a1, n)) {
        const std::vector<Int> pair{a1, n};
        ASSERT_EQ(finsum::y_multi(pair), oracle::Y_multi(pair));
      }
    }
  }
}

TEST(ParityClass, Examples) {
  EXPECT_EQ(finsum::parity_class(3, 5), ParityClass::BothOdd);
  EXPECT_EQ(finsum::parity_class(5, 2), ParityClass::HOddKEven);
  EXPECT_EQ(finsum::parity_class(2, 3), ParityClass::HEvenKOdd);
  EXPECT_THROW(finsum::parity_class(2, 4), finsum::PreconditionError);
}
