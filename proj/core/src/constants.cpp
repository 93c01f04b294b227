#include "tmh/constants.hpp"

#include <cmath>
#include <mutex>
#include <optional>
#include <string>

#include "tmh/error.hpp"
#include "tmh/kernels.hpp"
#include "tmh/thue_morse.hpp"

namespace tmh {
namespace {

void check_u_order(unsigned k) {
  if (k < 1 || k > 16) throw DomainError("U constants need 1 <= k <= 16, got " + std::to_string(k));
}

/// pi * num / 2^shift.
RealBall pi_fraction(long num, unsigned shift, RealBall::Precision p) {
  RealBall r = const_pi(p);
  r *= num;
  r.mul_2si(-static_cast<long>(shift));
  return r;
}

/// c(a) e^{2 pi i a m / 2^k}.
ComplexBall coefficient(unsigned k, std::uint64_t a, std::uint64_t m, RealBall::Precision p) {
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  ComplexBall c = i_power(k, p);
  // e^{pi i a / 2^k} e^{2 pi i a m / 2^k} = e^{pi i a (2m + 1) / 2^k}
  const std::uint64_t phase = (a * (2 * (m & mask) + 1)) & ((mask << 1) | 1);
  c *= exp_i(pi_fraction(static_cast<long>(phase), k, p));
  RealBall prod(1, p);
  for (unsigned j = 1; j <= k; ++j) prod *= sin(pi_fraction(static_cast<long>(a), j, p));
  c *= prod;
  return c;
}

struct Tau0Plan {
  unsigned k;
  std::uint64_t n;
};

/// log2 of 2^{binom(k-1,2)} G_{k-1}(n+1), the remainder bound at n = 2^k q.
double tau0_tail_log2(unsigned k, double n) {
  double lg = (k >= 1 ? (k - 1.0) * (k - 2.0) / 2.0 : 0.0) + std::lgamma(static_cast<double>(k)) / std::log(2.0);
  for (unsigned l = 0; l < k; ++l) lg -= std::log2(n + 1.0 + l);
  return lg;
}

Tau0Plan plan_tau0(long bits) {
  std::optional<Tau0Plan> best;
  for (unsigned k = 1; k <= 40; ++k) {
    const double block = std::ldexp(1.0, static_cast<int>(k));
    // Solve k log2(n) ~ bits + binom + log2((k-1)!) for n, then walk q up.
    const double need = static_cast<double>(bits) + 4.0 + (k - 1.0) * (k - 2.0) / 2.0 +
                        std::lgamma(static_cast<double>(k)) / std::log(2.0);
    double q = std::max(1.0, std::floor(std::exp2(need / k) / block));
    while (tau0_tail_log2(k, q * block) > -static_cast<double>(bits) - 2.0) q += 1.0;
    const double n = q * block;
    if (n > 1e13) continue;
    if (!best || n < static_cast<double>(best->n)) best = Tau0Plan{k, static_cast<std::uint64_t>(n)};
  }
  if (!best) throw ResourceError("tau0: precision " + std::to_string(bits) + " bits is out of reach");
  return *best;
}

RealBall compute_tau0(long bits) {
  const Tau0Plan plan = plan_tau0(bits);
  const RealBall::Precision wp = bits + 2 * static_cast<long>(std::log2(static_cast<double>(plan.n)) + 1) + 16;
  RealBall sigma(wp);
  for (std::uint64_t m = 1; m <= plan.n; ++m) sigma.add_signed_reciprocal(epsilon(m - 1), m);
  // |tau0 - sigma_n| <= 2^{binom(k-1,2)} G_{k-1}(n+1).
  const unsigned k = plan.k;
  RealBall bound = G(k - 1, RealBall::from_integer(Integer(plan.n + 1), wp));
  bound.mul_2si(static_cast<long>((k - 1) * (k >= 2 ? k - 2 : 0) / 2));
  mpfr_t hi;
  mpfr_init2(hi, wp);
  bound.upper(hi);
  sigma.add_error(hi);
  mpfr_clear(hi);
  return sigma;
}

}  // namespace

RealBall u_closed_form(unsigned k, std::uint64_t m, long precision_bits) {
  check_u_order(k);
  const RealBall::Precision p = precision_bits + static_cast<long>(k) + 16;
  const std::uint64_t period = std::uint64_t{1} << k;
  ComplexBall total(p);
  for (std::uint64_t a = 1; a < period; a += 2) {
    ComplexBall one_minus_zeta = exp_i(pi_fraction(static_cast<long>(2 * a), k, p));
    one_minus_zeta.re = 1 - one_minus_zeta.re;
    one_minus_zeta.im = -one_minus_zeta.im;
    total += coefficient(k, a, m, p) * log(one_minus_zeta);
  }
  if (!total.im.contains_zero()) {
    throw ConsistencyError("u_closed_form: imaginary part " + total.im.to_string(10) + " is not zero");
  }
  return total.re;
}

RealBall u_series(unsigned k, std::uint64_t m, std::uint64_t n_terms, long precision_bits) {
  check_u_order(k);
  if (n_terms < (std::uint64_t{1} << k)) throw DomainError("u_series: need at least 2^k terms");
  RealBall sum(precision_bits);
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t n = 1; n <= n_terms; ++n) sum.add_signed_reciprocal(epsilon((n + m) & mask), n);
  // Window sums of f_k are bounded by 2 in absolute value, so Abel
  // summation bounds the tail by 2/n_terms.
  RealBall tail = RealBall(2, 64) / static_cast<long>(n_terms);
  mpfr_t hi;
  mpfr_init2(hi, 64);
  tail.upper(hi);
  sum.add_error(hi);
  mpfr_clear(hi);
  return sum;
}

ComplexBall u_coefficient_sum(unsigned k, std::uint64_t m, long precision_bits) {
  check_u_order(k);
  const RealBall::Precision p = precision_bits + static_cast<long>(k) + 16;
  ComplexBall total(p);
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << k); a += 2) total += coefficient(k, a, m, p);
  return total;
}

RealBall tau0(long precision_bits) {
  static std::mutex mutex;
  static std::optional<RealBall> cached;
  std::lock_guard lock(mutex);
  if (!cached || !cached->radius_at_most_pow2(-precision_bits)) cached = compute_tau0(precision_bits);
  return *cached;
}

TargetNumber::Oracle named_oracle(const TargetNumber& target) {
  switch (target.kind()) {
    case TargetNumber::Kind::NamedU:
    case TargetNumber::Kind::Tau0:
    case TargetNumber::Kind::SqrtCombo:
      return target.oracle();
    default:
      throw DomainError("named_oracle: target " + target.describe() + " is not symbolic");
  }
}

}  // namespace tmh
