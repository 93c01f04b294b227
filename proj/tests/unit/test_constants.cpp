#include <gtest/gtest.h>

#include <cmath>

#include "tmh/constants.hpp"
#include "tmh/error.hpp"
#include "tmh/thue_morse.hpp"

using namespace tmh;

namespace {

// 50 decimals of the Thue-Morse constant, truncated.
const char* kTau0Digits = "39876108810841881240743054440027306033680891546719";

// Digamma evaluation of sum_r f(r+m) psi(r/2^k), 55 digits, truncated.
const char* kU20 = "-1.131971753677420964324276906548964005087042417023904082";
const char* kU32 = "0.8913084479808537343004478549697797061478842810120981416";

RealBall widened(const char* digits, long bits) {
  RealBall b = RealBall::from_decimal(digits, bits);
  b.add_error_pow2(-170);
  return b;
}

// Partial sum of the defining series in exact arithmetic.
Rational u_partial(unsigned k, std::uint64_t m, std::uint64_t terms) {
  Rational s = 0;
  for (std::uint64_t n = 1; n <= terms; ++n) s += Rational(f_periodic(k, static_cast<std::int64_t>(n + m)), n);
  return s;
}

}  // namespace

TEST(UClosedForm, KnownValues) {
  const RealBall u10 = u_closed_form(1, 0, 128);
  EXPECT_TRUE(u10.overlaps(-const_log2(128)));
  EXPECT_TRUE(u10.radius_at_most_pow2(-100));
  EXPECT_TRUE(u_closed_form(2, 0, 200).overlaps(widened(kU20, 200)));
  EXPECT_TRUE(u_closed_form(3, 2, 200).overlaps(widened(kU32, 200)));
  // U_{3,2} = ((2 sqrt 2 - 1) pi + log 4) / 8
  const long p = 200;
  RealBall expected = (sqrt(RealBall(2, p)) * 2L - 1L) * const_pi(p) + const_log2(p) * 2L;
  expected /= 8L;
  const RealBall u32 = u_closed_form(3, 2, p);
  EXPECT_TRUE(u32.overlaps(expected));
  EXPECT_NEAR(u32.mid_double(), std::stod(kU32), 1e-15);
  EXPECT_NEAR(u_closed_form(2, 0, 64).mid_double(), std::stod(kU20), 1e-15);
}

TEST(UClosedForm, OrderTwoFormulas) {
  const long p = 160;
  const RealBall pi = const_pi(p), log4 = const_log2(p) * 2L;
  RealBall u20 = -(pi + log4);
  u20 /= 4L;
  RealBall u21 = -(pi - log4);
  u21 /= 4L;
  EXPECT_TRUE(u_closed_form(2, 0, p).overlaps(u20));
  EXPECT_TRUE(u_closed_form(2, 1, p).overlaps(u21));
  EXPECT_TRUE(u_series(2, 1, 100000).overlaps(u21));
  EXPECT_TRUE(u_series(1, 0, 1000000).overlaps(-const_log2(p)));
  EXPECT_TRUE(u_series(1, 0, 1000000).radius_below(2.01e-6));
}

TEST(UClosedForm, Antisymmetry) {
  for (unsigned k = 1; k <= 6; ++k) {
    const std::uint64_t half = std::uint64_t{1} << (k - 1);
    for (std::uint64_t m = 0; m < 2 * half; ++m) {
      const RealBall a = u_closed_form(k, m, 128);
      const RealBall b = u_closed_form(k, (m + half) % (2 * half), 128);
      EXPECT_TRUE((a + b).contains_zero()) << k << " " << m;
    }
  }
}

TEST(UClosedForm, AgreesWithSeries) {
  for (unsigned k = 1; k <= 5; ++k) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      const RealBall closed = u_closed_form(k, m, 128);
      const RealBall series = u_series(k, m, 20000);
      EXPECT_TRUE(closed.overlaps(series)) << k << " " << m;
      // Exact partial sums lie within 2/N of the limit.
      const Rational partial = u_partial(k, m, 256);
      RealBall diff = closed - partial;
      EXPECT_LT(std::fabs(diff.mid_double()), 2.0 / 256) << k << " " << m;
    }
  }
  EXPECT_THROW(u_series(3, 0, 4), DomainError);
}

TEST(UClosedForm, CoefficientIdentity) {
  for (unsigned k = 1; k <= 6; ++k) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
      const ComplexBall sum = u_coefficient_sum(k, m, 128);
      EXPECT_TRUE(sum.re.contains(Rational(-epsilon(m)))) << k << " " << m;
      EXPECT_TRUE(sum.im.contains(Rational(0)));
    }
  }
}

TEST(UClosedForm, HighOrder) {
  const RealBall u = u_closed_form(12, 1234, 256);
  EXPECT_TRUE(u.radius_at_most_pow2(-200));
  EXPECT_TRUE(u.overlaps(u_series(12, 1234, 1 << 18, 128)));
  EXPECT_THROW(u_closed_form(0, 0, 64), DomainError);
  EXPECT_THROW(u_closed_form(17, 0, 64), DomainError);
}

TEST(Tau0, FiftyDigits) {
  const RealBall t = tau0(200);
  EXPECT_TRUE(t.radius_at_most_pow2(-200));
  EXPECT_EQ(t.certified_decimals(50).value_or(""), std::string("0.") + kTau0Digits);
  EXPECT_GT(t.mid_double(), 1.0 / 6.0);
  for (long p : {64L, 65L, 100L, 101L}) EXPECT_TRUE(tau0(p).radius_at_most_pow2(-p));
}

TEST(Tau0, AgreesWithSlowSeries) {
  // sum_{n <= N} eps(n-1)/n is within c_0 / N of the limit by alternation bounds.
  RealBall s(128);
  const std::uint64_t n_max = 1 << 16;
  for (std::uint64_t n = 1; n <= n_max; ++n) s.add_signed_reciprocal(epsilon(n - 1), n);
  RealBall d = tau0(128) - s;
  EXPECT_LT(std::fabs(d.mid_double()), 1e-6);
  EXPECT_TRUE(tau0(64).overlaps(tau0(300)));
}

TEST(NamedOracle, SymbolicKindsOnly) {
  const auto oracle = named_oracle(TargetNumber::named_u(2, 1, Rational(1)));
  EXPECT_TRUE(oracle(128).overlaps(u_closed_form(2, 1, 128) + Rational(1)));
  const auto combo = named_oracle(parse_target("sqrt:1:2,2:5"));
  EXPECT_NEAR(combo(64).mid_double(), 5.886349517372674, 1e-12);
  EXPECT_THROW(named_oracle(TargetNumber::rational(Rational(1, 3))), DomainError);
}
