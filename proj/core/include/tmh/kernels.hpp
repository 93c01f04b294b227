#pragma once

#include <cstdint>

#include "tmh/rational.hpp"
#include "tmh/real_ball.hpp"

namespace tmh {

/// c_k = 2^{k(k-1)/2} k!.
Integer kernel_constant(unsigned k);

/// A kernel order k together with its scale constant c_k.
struct KernelOrder {
  unsigned k;
  Integer c;

  explicit KernelOrder(unsigned order) : k(order), c(kernel_constant(order)) {}
};

/// g_k(x) = sum_{l < 2^k} epsilon(l) / (x + l), for x > 0 and k <= 30.
Rational g(unsigned k, const Rational& x);
RealBall g(unsigned k, const RealBall& x);

/// sum_{n < 2^k} f_k(n + m) / (n + x), for x > 0.
Rational g_shifted(unsigned k, std::uint64_t m, const Rational& x);
RealBall g_shifted(unsigned k, std::uint64_t m, const RealBall& x);

/// k! / prod_{l=0..k} (x + l), for x > 0.
Rational G(unsigned k, const Rational& x);
RealBall G(unsigned k, const RealBall& x);

/// sum_{l < r} epsilon(l) / (x + l), assembled from one g-kernel per set bit
/// of r.
Rational tm_partial_sum(const Rational& x, std::uint64_t r);
RealBall tm_partial_sum(const RealBall& x, std::uint64_t r);

/// Enclosure of sum_{h >= 0} g_k(x + h 2^k) for k >= 1 and x >= 1.
///
/// Terms are summed explicitly; the remainder is enclosed by integrating the
/// bounds c_k / (y + 2^k)^{k+1} < g_k(y) < c_k / y^{k+1}. The number of
/// explicit terms doubles until the radius is at most target_radius; past
/// max_terms a PrecisionError is thrown.
RealBall g_tail_sum(unsigned k, const RealBall& x, double target_radius,
                    std::uint64_t max_terms = std::uint64_t{1} << 22);

}  // namespace tmh
