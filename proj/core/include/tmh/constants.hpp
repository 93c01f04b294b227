#pragma once

#include <cstdint>

#include "tmh/complex_ball.hpp"
#include "tmh/real_ball.hpp"
#include "tmh/target.hpp"

namespace tmh {

/// U_{k,m} = sum_{n >= 1} f_k(n + m) / n through its finite expansion in
/// logarithms of 1 - e^{2 pi i a / 2^k}; 1 <= k <= 16. Throws
/// ConsistencyError if the imaginary part is certainly nonzero.
RealBall u_closed_form(unsigned k, std::uint64_t m, long precision_bits);

/// Partial sum of the defining series with a rigorous tail radius 2/n_terms;
/// requires n_terms >= 2^k.
RealBall u_series(unsigned k, std::uint64_t m, std::uint64_t n_terms, long precision_bits = 128);

/// sum_a c(a) e^{2 pi i a m / 2^k} over odd a, which equals -epsilon(m).
ComplexBall u_coefficient_sum(unsigned k, std::uint64_t m, long precision_bits);

/// The Thue-Morse constant sum_{n >= 1} epsilon(n-1) / n with radius at most
/// 2^{-precision_bits}. The cost grows like 2^{sqrt(2 precision_bits)}
/// terms; 200 bits takes about 10^6.
RealBall tau0(long precision_bits);

/// The enclosure oracle of a symbolic target.
TargetNumber::Oracle named_oracle(const TargetNumber& target);

}  // namespace tmh
