#include "tmh/weights.hpp"

#include <string>

#include "tmh/error.hpp"
#include "tmh/thue_morse.hpp"

namespace tmh {
namespace {

void check_order(unsigned k) {
  if (k > 20) throw ResourceError("weight vectors are limited to k <= 20, got " + std::to_string(k));
}

}  // namespace

WeightVector weight_vector(unsigned k) {
  check_order(k);
  const std::size_t len = std::size_t{1} << k;
  std::vector<Integer> w(len);
  w[0] = 1;
  std::size_t degree = 0;
  std::vector<Integer> next(len);
  for (unsigned j = 0; j < k; ++j) {
    // Multiply by 1 + x + ... + x^{width-1} with a sliding window sum.
    const std::size_t width = std::size_t{1} << j;
    const std::size_t new_degree = degree + width - 1;
    Integer window = 0;
    for (std::size_t n = 0; n <= new_degree; ++n) {
      if (n <= degree) window += w[n];
      if (n >= width) window -= w[n - width];
      next[n] = window;
    }
    for (std::size_t n = 0; n <= new_degree; ++n) w[n].swap(next[n]);
    degree = new_degree;
  }
  return {k, std::move(w)};
}

IteratedSums::IteratedSums(unsigned k) : weights_(weight_vector(k)) {}

Integer IteratedSums::operator()(std::uint64_t n) const {
  const std::uint64_t mask = (std::uint64_t{1} << weights_.k) - 1;
  const Integer& value = weights_.w[n & mask];
  return epsilon(n >> weights_.k) > 0 ? value : Integer(-value);
}

Integer eps_iterated(unsigned k, std::uint64_t n) { return IteratedSums(k)(n); }

std::vector<ProfilePoint> fabius_profile(unsigned k) {
  if (k == 0) throw DomainError("fabius_profile: k must be positive");
  const WeightVector wv = weight_vector(k);
  const long exponent = (3L * k - static_cast<long>(k) * k) / 2;
  Rational scale;
  if (exponent >= 0) {
    scale = Rational(pow2(static_cast<unsigned long>(exponent)));
  } else {
    scale = Rational(Integer(1), pow2(static_cast<unsigned long>(-exponent)));
  }
  const Integer den = pow2(k);
  std::vector<ProfilePoint> out;
  out.reserve(wv.w.size());
  for (std::size_t n = 0; n < wv.w.size(); ++n) {
    out.push_back({make_rational(Integer(static_cast<unsigned long>(n)), den), Rational(wv.w[n]) * scale});
  }
  return out;
}

}  // namespace tmh
