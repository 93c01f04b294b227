#include <gtest/gtest.h>

#include <vector>

#include "tmh/error.hpp"
#include "tmh/thue_morse.hpp"
#include "tmh/weights.hpp"

using namespace tmh;

namespace {

// Schoolbook product of (1 + x + ... + x^{2^j - 1}) for j < k.
std::vector<Integer> product_oracle(unsigned k) {
  std::vector<Integer> p{1};
  for (unsigned j = 0; j < k; ++j) {
    const std::size_t len = std::size_t{1} << j;
    std::vector<Integer> next(p.size() + len - 1, 0);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < len; ++b) next[a + b] += p[a];
    p = std::move(next);
  }
  p.resize(std::size_t{1} << k, 0);
  return p;
}

// Iterated prefix sums of epsilon up to n_max.
std::vector<std::vector<long>> prefix_oracle(unsigned k_max, std::size_t n_max) {
  std::vector<std::vector<long>> table(k_max + 1, std::vector<long>(n_max));
  for (std::size_t n = 0; n < n_max; ++n) table[0][n] = epsilon(n);
  for (unsigned k = 1; k <= k_max; ++k) {
    long acc = 0;
    for (std::size_t n = 0; n < n_max; ++n) table[k][n] = acc += table[k - 1][n];
  }
  return table;
}

Integer pow2_signed(long e) { return e >= 0 ? pow2(static_cast<unsigned long>(e)) : Integer(0); }

}  // namespace

TEST(WeightVector, ListedValues) {
  EXPECT_EQ(weight_vector(0).w, std::vector<Integer>{1});
  EXPECT_EQ(weight_vector(2).w, (std::vector<Integer>{1, 1, 0, 0}));
  const std::vector<Integer> w4{1, 3, 5, 7, 8, 8, 8, 8, 7, 5, 3, 1, 0, 0, 0, 0};
  EXPECT_EQ(weight_vector(4).w, w4);
  EXPECT_THROW(weight_vector(21), ResourceError);
}

TEST(WeightVector, MatchesSchoolbookProduct) {
  for (unsigned k = 0; k <= 12; ++k) EXPECT_EQ(weight_vector(k).w, product_oracle(k)) << k;
}

TEST(WeightVector, StructuralInvariants) {
  for (unsigned k = 1; k <= 12; ++k) {
    const auto w = weight_vector(k).w;
    const std::size_t len = w.size();
    Integer sum = 0;
    for (const auto& v : w) sum += v;
    EXPECT_EQ(sum, pow2(k * (k - 1) / 2));
    for (std::size_t i = len - k; i < len; ++i) EXPECT_EQ(w[i], 0);
    for (std::size_t n = 0; n + k + 1 <= len; ++n) EXPECT_EQ(w[len - k - 1 - n], w[n]);
    const Integer top = pow2_signed(static_cast<long>((k - 1) * (k >= 2 ? k - 2 : 0) / 2));
    const std::size_t half = len / 2;
    for (std::size_t n = 0; n < len; ++n) {
      // The maximum is attained exactly on [2^{k-1} - k, 2^{k-1} - 1].
      const bool plateau = n + k >= half && n + 1 <= half;
      EXPECT_LE(w[n], top);
      EXPECT_EQ(w[n] == top, plateau) << "k=" << k << " n=" << n;
    }
  }
}

TEST(IteratedSums, MatchesPrefixOracle) {
  const std::size_t n_max = std::size_t{1} << 12;
  const auto table = prefix_oracle(9, n_max);
  for (unsigned k = 0; k <= 9; ++k) {
    const IteratedSums e(k);
    for (std::size_t n = 0; n < n_max; ++n) ASSERT_EQ(e(n), table[k][n]) << "k=" << k << " n=" << n;
  }
  EXPECT_EQ(eps_iterated(1, 0), 1);
  EXPECT_EQ(eps_iterated(1, 1), 0);
  EXPECT_EQ(eps_iterated(0, 19), -1);
}

TEST(IteratedSums, DyadicIdentityAndBound) {
  for (unsigned mu = 0; mu <= 8; ++mu) {
    const IteratedSums e(mu + 1);
    for (std::uint64_t odd = 1; odd < 200; odd += 2) {
      const std::uint64_t n = (std::uint64_t{1} << mu) * odd;
      EXPECT_EQ(e(n - 1), -pow2(mu * (mu >= 1 ? mu - 1 : 0) / 2) * epsilon(n));
    }
  }
  for (unsigned k = 1; k <= 10; ++k) {
    const IteratedSums e(k);
    const Integer top = pow2((k - 1) * (k >= 2 ? k - 2 : 0) / 2);
    for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_LE(abs(e(n)), top);
  }
}

TEST(FabiusProfile, ValuesMeanAndSymmetry) {
  const auto p1 = fabius_profile(1);
  ASSERT_EQ(p1.size(), 2u);
  EXPECT_EQ(p1[0].x, 0);
  EXPECT_EQ(p1[0].value, 2);
  EXPECT_EQ(p1[1].x, Rational(1, 2));
  EXPECT_EQ(p1[1].value, 0);
  for (unsigned k = 1; k <= 12; ++k) {
    const auto p = fabius_profile(k);
    Rational sum = 0;
    for (const auto& pt : p) sum += pt.value;
    EXPECT_EQ(sum / Rational(Integer(p.size())), 1) << k;
    const std::size_t len = p.size();
    for (std::size_t n = 0; n + k + 1 <= len; ++n) EXPECT_EQ(p[len - k - 1 - n].value, p[n].value);
  }
  EXPECT_THROW(fabius_profile(0), DomainError);
}
