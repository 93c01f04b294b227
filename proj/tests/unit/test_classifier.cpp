#include <gtest/gtest.h>

#include <cmath>

#include "tmh/classifier.hpp"
#include "tmh/error.hpp"
#include "tmh/thue_morse.hpp"

using namespace tmh;

TEST(Classifier, OrderTwoOffsets) {
  for (int r = 1; r <= 10; ++r) {
    const ClassificationResult c = classify(TargetNumber::named_u(2, 0, Rational(r)), 3);
    if (r <= 3) {
      EXPECT_EQ(c.verdict, Verdict::InXk) << r;
      EXPECT_EQ(c.k, 2u);
      EXPECT_EQ(c.phase, 0u);
    } else {
      EXPECT_EQ(c.verdict, Verdict::NotInXk) << r;
      EXPECT_EQ(c.k, 3u);
    }
  }
}

TEST(Classifier, MinusLogTwoIsInFirstSet) {
  const ClassificationResult c = classify(TargetNumber::named_u(1, 0), 4);
  ASSERT_EQ(c.verdict, Verdict::InXk);
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.onset, 24u);
  ASSERT_EQ(c.steps.size(), 1u);
  EXPECT_EQ(c.steps[0].correction, 0);
  EXPECT_GE(c.verified_through, c.onset + 2 * 64 - 1);
}

TEST(Classifier, TranscriptInvariants) {
  for (const char* text : {"sqrt:1:2", "tau0", "u:3:5+1/7", "u:2:1+2"}) {
    const TargetNumber t = parse_target(text);
    const ClassificationResult c = classify(t, 4);
    ASSERT_FALSE(c.steps.empty());
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const auto& s = c.steps[i];
      const std::uint64_t period = std::uint64_t{1} << s.h;
      EXPECT_EQ((s.block_start + s.phase) % period, 0u);
      EXPECT_GE(s.block_start, block_floor(s.h));
      if (s.start_bound) EXPECT_LE(static_cast<double>(s.block_start), *s.start_bound) << text << " h=" << s.h;
      if (i + 1 < c.steps.size()) EXPECT_NE(s.decision, Decision::Confirmed);
    }
  }
}

TEST(Classifier, NonMembersAndSymbolicMembers) {
  EXPECT_EQ(classify(parse_target("sqrt:1:2"), 4).verdict, Verdict::NotInXk);
  EXPECT_EQ(classify(TargetNumber::tau0(), 4).verdict, Verdict::NotInXk);
  const ClassificationResult c = classify(parse_target("u:3:5"), 4);
  EXPECT_EQ(c.verdict, Verdict::InXk);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(c.phase, 5u);
  // Monotone consistency: every earlier level was refuted.
  for (std::size_t i = 0; i + 1 < c.steps.size(); ++i) EXPECT_NE(c.steps[i].decision, Decision::Undetermined);
}

TEST(Classifier, RefutationSurvivesDoubledPrecision) {
  ClassifyOptions coarse, fine;
  fine.initial_gap_precision = 2 * coarse.initial_gap_precision;
  for (const char* text : {"sqrt:1:2,2:5", "u:2:0+4", "tau0-1/2"}) {
    const auto a = classify(parse_target(text), 3, coarse);
    const auto b = classify(parse_target(text), 3, fine);
    EXPECT_EQ(a.verdict, b.verdict) << text;
    ASSERT_EQ(a.steps.size(), b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) EXPECT_EQ(a.steps[i].decision, b.steps[i].decision);
  }
}

TEST(Classifier, RationalAndDomain) {
  EXPECT_EQ(classify(TargetNumber::rational(Rational(1, 3)), 3).verdict, Verdict::RationalTarget);
  EXPECT_EQ(classify(TargetNumber::decimal("0.25"), 3).verdict, Verdict::RationalTarget);
  EXPECT_THROW(classify(TargetNumber::tau0(), 0), DomainError);
  EXPECT_THROW(classify(TargetNumber::tau0(), 17), DomainError);
}

TEST(Classifier, UndeterminedForHiddenMember) {
  // A black-box oracle for U_{1,0}: the identity can never be confirmed.
  const TargetNumber u = TargetNumber::named_u(1, 0);
  const TargetNumber hidden = TargetNumber::custom(u.oracle(), "minus-log-2");
  ClassifyOptions options;
  options.max_precision = 512;
  const ClassificationResult c = classify(hidden, 3, options);
  EXPECT_EQ(c.verdict, Verdict::Undetermined);
  EXPECT_EQ(c.k, 1u);
  EXPECT_TRUE(c.gap.contains_zero());
}

TEST(Classifier, BudgetErrorCarriesTranscript) {
  ClassifyOptions options;
  options.step_budget = 400;
  try {
    classify(parse_target("sqrt:1:2"), 5, options);
    FAIL() << "expected a budget error";
  } catch (const ClassificationError& e) {
    EXPECT_FALSE(e.steps().empty());
    EXPECT_LT(e.steps().size(), 5u);
  }
}

TEST(FirstBlockIndex, FirstLevelBound) {
  for (const char* text : {"sqrt:1:2", "sqrt:1:2,2:5", "tau0", "u:3:2", "-5/3"}) {
    const TargetNumber t = parse_target(text);
    const double mag = std::fabs(t.enclosure(64).mid_double());
    const std::uint64_t n = first_block_index(t, 1, 24, 1'000'000);
    // max(24, e^|tau| + 2) can be exceeded by a few steps: after n = 24 the
    // pattern (+, -) may still need up to three more signs, e.g. -, -, +, +, -.
    EXPECT_LE(static_cast<double>(n), std::max(24.0, std::exp(mag) + 2) + 3) << text;
  }
}

TEST(FirstBlockIndex, Fixtures) {
  // Independent 80-digit simulations.
  EXPECT_EQ(first_block_index(parse_target("sqrt:1:2"), 2, 64, 100000), 67u);
  EXPECT_EQ(first_block_index(parse_target("sqrt:1:2"), 3, 160, 100000), 163u);
  EXPECT_EQ(first_block_index(parse_target("sqrt:1:2,2:5"), 1, 24, 100000), 202u);
  EXPECT_THROW(first_block_index(parse_target("sqrt:1:2"), 0, 1, 10), DomainError);
  EXPECT_THROW(first_block_index(parse_target("sqrt:1:2"), 10, 1, 100), BudgetError);
}

TEST(FirstBlockIndex, ThueMorseConstantRepeatsBlocks) {
  const TargetNumber t = TargetNumber::tau0();
  for (unsigned h = 1; h <= 4; ++h) {
    std::uint64_t floor = 1;
    for (int i = 0; i < 4; ++i) {
      const std::uint64_t n = first_block_index(t, h, floor, 200000);
      EXPECT_GE(n, floor);
      floor = n + 1;
    }
  }
}
