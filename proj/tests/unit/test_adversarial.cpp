#include <gtest/gtest.h>

#include "tmh/adversarial.hpp"
#include "tmh/error.hpp"

using namespace tmh;

namespace {

Rational pow4_inverse(std::uint64_t n) { return Rational(1, Integer(1) << (2 * n)); }

// |tau - sigma_m(tau)| by exact greedy simulation.
Rational greedy_error(const Rational& tau, std::uint64_t m) {
  Rational sigma = 0;
  for (std::uint64_t n = 1; n <= m; ++n) sigma += Rational(sigma <= tau ? 1 : -1, n);
  Rational d = tau - sigma;
  return d < 0 ? Rational(-d) : d;
}

void expect_witnesses_hold(const AdversarialResult& r, const std::function<Rational(std::uint64_t)>& f) {
  ASSERT_EQ(r.target.kind(), TargetNumber::Kind::DecimalExact);
  EXPECT_EQ(r.target.exact_value(), r.center);
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    const auto& w = r.witnesses[i];
    if (i > 0) EXPECT_GT(w.index, r.witnesses[i - 1].index);
    EXPECT_LE(w.bound, f(w.index));
    EXPECT_LT(greedy_error(r.center, w.index), w.bound) << "m=" << w.index;
  }
  EXPECT_GT(r.slack, 0);
}

}  // namespace

TEST(Adversarial, FirstIterateNearOne) {
  const AdversarialResult r = construct_adversarial(pow4_inverse, 1);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].index, 1u);
  const Rational f1 = pow4_inverse(1);
  EXPECT_GT(r.center, 1 - f1 / 2);
  EXPECT_LT(r.center, 1 + f1 / 2);
}

TEST(Adversarial, FourToTheMinusN) {
  const AdversarialResult r = construct_adversarial(pow4_inverse, 3);
  ASSERT_EQ(r.witnesses.size(), 3u);
  expect_witnesses_hold(r, pow4_inverse);
}

TEST(Adversarial, SlowlyDecayingBoundIsClamped) {
  const auto f = [](std::uint64_t n) { return Rational(1, n * n + 1); };
  const AdversarialResult r = construct_adversarial(f, 4);
  ASSERT_EQ(r.witnesses.size(), 4u);
  expect_witnesses_hold(r, f);
  EXPECT_EQ(r.witnesses[0].bound, Rational(1, 2));
  for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
    EXPECT_LE(r.witnesses[i].bound * 5, r.witnesses[i - 1].bound);
  }
}

TEST(Adversarial, PrefixIntervalContainsTarget) {
  const Rational tau(7, 5);
  for (std::uint64_t m : {1u, 5u, 40u}) {
    const PrefixInterval in = prefix_interval(tau, m);
    if (in.has_lo) EXPECT_LE(in.lo, tau);
    if (in.has_hi) EXPECT_GT(in.hi, tau);
  }
}

TEST(Adversarial, Errors) {
  EXPECT_THROW(construct_adversarial(pow4_inverse, 0), DomainError);
  EXPECT_THROW(construct_adversarial([](std::uint64_t) { return Rational(0); }, 1), DomainError);
  EXPECT_THROW(construct_adversarial(pow4_inverse, 3, 2), BudgetError);
}
