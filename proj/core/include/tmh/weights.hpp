#pragma once

#include <cstdint>
#include <vector>

#include "tmh/rational.hpp"

namespace tmh {

/// Coefficients w_k(0..2^k-1) of prod_{j<k} (1 + x + ... + x^{2^j - 1}).
struct WeightVector {
  unsigned k = 0;
  std::vector<Integer> w;
};

/// Throws ResourceError for k > 20.
WeightVector weight_vector(unsigned k);

/// The k-fold iterated partial sums of epsilon, answered pointwise from W_k:
/// E_k(n) = epsilon(n >> k) * w_k(n mod 2^k).
class IteratedSums {
 public:
  explicit IteratedSums(unsigned k);
  [[nodiscard]] unsigned order() const { return weights_.k; }
  [[nodiscard]] Integer operator()(std::uint64_t n) const;
  [[nodiscard]] const WeightVector& weights() const { return weights_; }

 private:
  WeightVector weights_;
};

/// One-off E_k(n); builds W_k on every call.
Integer eps_iterated(unsigned k, std::uint64_t n);

struct ProfilePoint {
  Rational x;
  Rational value;
};

/// (n / 2^k, 2^{(3k - k^2)/2} w_k(n)) for n < 2^k; 1 <= k <= 20.
std::vector<ProfilePoint> fabius_profile(unsigned k);

}  // namespace tmh
