#include <gtest/gtest.h>

#include <random>

#include "tmh/error.hpp"
#include "tmh/kernels.hpp"
#include "tmh/thue_morse.hpp"

using namespace tmh;

namespace {

// Term-by-term sum of coef(l) / (x + l) for l < len.
template <class Coef>
Rational direct_sum(const Rational& x, std::uint64_t len, Coef coef) {
  Rational s = 0;
  for (std::uint64_t l = 0; l < len; ++l) s += coef(l) / (x + Rational(Integer(l)));
  return s;
}

Rational direct_g(unsigned k, const Rational& x) {
  return direct_sum(x, std::uint64_t{1} << k, [](std::uint64_t l) { return Rational(epsilon(l)); });
}

Rational c(unsigned k) { return Rational(kernel_constant(k)); }

Rational power(const Rational& x, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

TEST(KernelConstant, ValuesAndRecursion) {
  EXPECT_EQ(kernel_constant(0), 1);
  EXPECT_EQ(kernel_constant(1), 1);
  EXPECT_EQ(kernel_constant(2), 4);
  EXPECT_EQ(kernel_constant(3), 48);
  for (unsigned k = 0; k < 20; ++k) {
    EXPECT_EQ(kernel_constant(k + 1), Integer(k + 1) * pow2(k) * kernel_constant(k));
  }
  const KernelOrder order(4);
  EXPECT_EQ(order.c, 1536);
}

TEST(KernelG, Examples) {
  EXPECT_EQ(g(0, Rational(2)), Rational(1, 2));
  EXPECT_EQ(g(1, Rational(1)), Rational(1, 2));
  EXPECT_EQ(g(2, Rational(1)), Rational(5, 12));
  EXPECT_THROW(g(1, Rational(0)), DomainError);
  EXPECT_THROW(g(1, Rational(-1, 2)), DomainError);
  EXPECT_THROW(g(31, Rational(1)), ResourceError);
}

TEST(KernelG, MatchesDirectSumAndRecursion) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const unsigned k = static_cast<unsigned>(rng() % 11);
    const Rational x(static_cast<long>(1 + rng() % 1000), 10);
    ASSERT_EQ(g(k, x), direct_g(k, x));
    if (k >= 1) {
      const Rational shift(Integer(std::uint64_t{1} << (k - 1)));
      ASSERT_EQ(g(k, x), g(k - 1, x) - g(k - 1, x + shift));
    }
  }
}

TEST(KernelG, BallEnclosesExact) {
  for (unsigned k : {0u, 3u, 7u, 12u}) {
    const Rational x(7, 3);
    const RealBall b = g(k, RealBall::from_rational(x, 160));
    EXPECT_TRUE(b.contains(g(k, x))) << k;
  }
}

TEST(KernelG, BoundsAndMonotonicity) {
  for (unsigned k = 1; k <= 6; ++k) {
    const Rational two_k(Integer(std::uint64_t{1} << k));
    for (long num : {1L, 3L, 10L, 57L, 400L}) {
      const Rational x(num, 2);
      const Rational v = g(k, x);
      EXPECT_GT(v, 0);
      EXPECT_LT(g(k, x + 1), v);
      EXPECT_LT(v, c(k) / power(x, k + 1));
      EXPECT_GT(v, c(k) / power(x + two_k, k + 1));
      EXPECT_LT(v, g(k - 1, x));
    }
  }
}

TEST(KernelGShifted, Examples) {
  EXPECT_EQ(g_shifted(1, 1, Rational(1)), Rational(-1, 2));
  for (unsigned k = 0; k <= 5; ++k) EXPECT_EQ(g_shifted(k, 0, Rational(3, 2)), g(k, Rational(3, 2)));
  for (unsigned k = 1; k <= 6; ++k) {
    const std::uint64_t period = std::uint64_t{1} << k;
    for (std::uint64_t m = 0; m < period; ++m) {
      for (long x : {1L, 2L, 10L}) {
        const Rational v = g_shifted(k, m, Rational(x));
        const Rational oracle = direct_sum(Rational(x), period, [&](std::uint64_t n) {
          return Rational(f_periodic(k, static_cast<std::int64_t>(n + m)));
        });
        ASSERT_EQ(v, oracle);
        EXPECT_GE(f_periodic(k, static_cast<std::int64_t>(m)) * v, g(k, Rational(x)));
      }
    }
  }
}

TEST(KernelBigG, ClosedFormAndTelescoping) {
  EXPECT_EQ(G(0, Rational(5)), Rational(1, 5));
  EXPECT_EQ(G(1, Rational(2)), Rational(1, 6));
  EXPECT_EQ(G(2, Rational(1)), Rational(1, 3));
  EXPECT_EQ(G(2, Rational(1)), G(1, Rational(1)) - G(1, Rational(2)));
  for (unsigned k = 0; k < 6; ++k) {
    for (long x = 1; x < 8; ++x) EXPECT_EQ(G(k + 1, Rational(x)), G(k, Rational(x)) - G(k, Rational(x + 1)));
    Rational sum = 0;
    for (long m = 3; m <= 40; ++m) sum += G(k + 1, Rational(m));
    EXPECT_EQ(sum, G(k, Rational(3)) - G(k, Rational(41)));
  }
  EXPECT_TRUE(G(3, RealBall(2, 128)).contains(G(3, Rational(2))));
}

TEST(TmPartialSum, MatchesDirectSum) {
  EXPECT_EQ(tm_partial_sum(Rational(1), 3), Rational(1, 6));
  for (std::uint64_t r = 1; r <= 300; ++r) {
    const Rational x(5, 3);
    ASSERT_EQ(tm_partial_sum(x, r),
              direct_sum(x, r, [](std::uint64_t l) { return Rational(epsilon(l)); }))
        << r;
  }
  for (unsigned k = 0; k <= 8; ++k) EXPECT_EQ(tm_partial_sum(Rational(2), std::uint64_t{1} << k), g(k, Rational(2)));
  const RealBall b = tm_partial_sum(RealBall::from_rational(Rational(5, 3), 128), 77);
  EXPECT_TRUE(b.contains(tm_partial_sum(Rational(5, 3), 77)));
}

TEST(TmPartialSum, SignLaw) {
  for (unsigned k = 1; k <= 6; ++k) {
    const std::uint64_t period = std::uint64_t{1} << k;
    const Rational x(Integer(2 * period * (k + 1)));
    for (std::uint64_t r = 1; r < period; ++r) {
      const int s = sgn(tm_partial_sum(x, r));
      EXPECT_EQ(s, -epsilon(r)) << "k=" << k << " r=" << r;
    }
  }
}

TEST(TmPartialSum, LeadingTerm) {
  // x^{h+1} |S| / c_h -> 1 where 2^h is the lowest set bit of r.
  for (std::uint64_t r : {1ULL, 6ULL, 12ULL, 40ULL}) {
    const unsigned h = static_cast<unsigned>(__builtin_ctzll(r));
    const Rational x(Integer(1000000));
    Rational ratio = tm_partial_sum(x, r) * power(x, h + 1) / c(h);
    if (ratio < 0) ratio = -ratio;
    EXPECT_NEAR(ratio.get_d(), 1.0, 1e-3) << r;
  }
}

TEST(GTailSum, LogTwo) {
  const RealBall v = g_tail_sum(1, RealBall(1, 128), 1e-9);
  EXPECT_TRUE(v.overlaps(const_log2(128)));
  EXPECT_TRUE(v.radius_below(1e-9));
}

TEST(GTailSum, BoundsAndAsymptotics) {
  for (unsigned k = 1; k <= 4; ++k) {
    for (long x : {1L, 5L, 50L}) {
      const RealBall v = g_tail_sum(k, RealBall(x, 128), 1e-6);
      EXPECT_TRUE(v.certainly_positive());
      RealBall upper = RealBall::from_integer(kernel_constant(k - 1), 128) / pow(RealBall(x, 128), k);
      EXPECT_EQ(compare(v, upper), -1) << k << " " << x;
    }
  }
  // x^k * sum -> c_k / (k 2^k), which is 1/2 for k = 2.
  const RealBall v = g_tail_sum(2, RealBall(10000, 128), 1e-14);
  EXPECT_NEAR(v.mid_double() * 1e8, 0.5, 0.005);
  EXPECT_THROW(g_tail_sum(0, RealBall(1, 64), 1e-3), DomainError);
  EXPECT_THROW(g_tail_sum(1, RealBall(1, 64), 1e-30, 16), PrecisionError);
}

TEST(KernelBounds, RatioAndCrossOrder) {
  for (unsigned k = 1; k <= 5; ++k) {
    const std::uint64_t period = std::uint64_t{1} << k;
    const Rational shift{Integer(period)};
    for (std::uint64_t x = (k + 1) * (period << 2); x < (k + 1) * (period << 2) + 40; x += 7) {
      const Rational q{Integer(x)};
      EXPECT_LT(g(k, q), Rational(4, 3) * g(k, q + shift));
    }
    for (unsigned h = 0; h < k; ++h) {
      for (std::uint64_t x = 2 * period * k; x < 2 * period * k + 30; x += 5) {
        const Rational q{Integer(x)};
        EXPECT_LT(g(k, q), g(h, q + shift) / 2);
      }
    }
  }
}
