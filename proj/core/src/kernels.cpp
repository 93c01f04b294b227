#include "tmh/kernels.hpp"

#include <algorithm>
#include <string>

#include "tmh/error.hpp"
#include "tmh/thue_morse.hpp"

namespace tmh {
namespace {

constexpr unsigned kMaxOrder = 30;

void check_order(unsigned k, const char* what) {
  if (k > kMaxOrder) throw ResourceError(std::string(what) + ": order exceeds 30");
}

void check_positive(const Rational& x, const char* what) {
  if (sgn(x) <= 0) throw DomainError(std::string(what) + ": argument must be positive");
}

void check_positive(const RealBall& x, const char* what) {
  if (!x.certainly_positive()) throw DomainError(std::string(what) + ": argument must be positive");
}

Rational shifted(const Rational& x, std::uint64_t l) { return x + Rational(Integer(l)); }

RealBall shifted(const RealBall& x, std::uint64_t l) {
  RealBall y(x);
  y += RealBall::from_integer(Integer(l), x.precision());
  return y;
}

Rational reciprocal(const Rational& x) { return 1 / x; }
RealBall reciprocal(const RealBall& x) { return 1 / x; }

template <class T>
T g_rec(unsigned k, const T& x) {
  if (k == 0) return reciprocal(x);
  const std::uint64_t half = std::uint64_t{1} << (k - 1);
  T r = g_rec(k - 1, x);
  r -= g_rec(k - 1, shifted(x, half));
  return r;
}

/// sum_{l in [lo, hi)} coef(l) / (x + l), split in halves so that exact
/// partial sums stay balanced in size.
template <class T, class Coef>
T harmonic_sum(const T& x, std::uint64_t lo, std::uint64_t hi, const Coef& coef) {
  if (hi - lo == 1) {
    T r = reciprocal(shifted(x, lo));
    if (coef(lo) < 0) r = -r;
    return r;
  }
  const std::uint64_t mid = lo + (hi - lo) / 2;
  T r = harmonic_sum(x, lo, mid, coef);
  r += harmonic_sum(x, mid, hi, coef);
  return r;
}

template <class T>
T g_impl(unsigned k, const T& x) {
  check_order(k, "g");
  check_positive(x, "g");
  return g_rec(k, x);
}

template <class T>
T g_shifted_impl(unsigned k, std::uint64_t m, const T& x) {
  check_order(k, "g_shifted");
  check_positive(x, "g_shifted");
  const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  return harmonic_sum(x, 0, std::uint64_t{1} << k,
                      [&](std::uint64_t n) { return epsilon((n + m) & mask); });
}

template <class T>
T tm_partial_sum_impl(const T& x, std::uint64_t r, T zero) {
  check_positive(x, "tm_partial_sum");
  T total = std::move(zero);
  std::uint64_t offset = 0;
  int sign = 1;
  for (int h = 63; h >= 0; --h) {
    const std::uint64_t bit = std::uint64_t{1} << h;
    if ((r & bit) == 0) continue;
    check_order(static_cast<unsigned>(h), "tm_partial_sum");
    T term = g_rec(static_cast<unsigned>(h), shifted(x, offset));
    if (sign > 0) {
      total += term;
    } else {
      total -= term;
    }
    offset += bit;
    sign = -sign;
  }
  return total;
}

}  // namespace

Integer kernel_constant(unsigned k) {
  return pow2(static_cast<unsigned long>(k) * (k == 0 ? 0 : k - 1) / 2) * factorial(k);
}

Rational g(unsigned k, const Rational& x) { return g_impl(k, x); }
RealBall g(unsigned k, const RealBall& x) { return g_impl(k, x); }

Rational g_shifted(unsigned k, std::uint64_t m, const Rational& x) { return g_shifted_impl(k, m, x); }
RealBall g_shifted(unsigned k, std::uint64_t m, const RealBall& x) { return g_shifted_impl(k, m, x); }

Rational G(unsigned k, const Rational& x) {
  check_positive(x, "G");
  Rational denom = x;
  for (unsigned l = 1; l <= k; ++l) denom *= shifted(x, l);
  return Rational(factorial(k)) / denom;
}

RealBall G(unsigned k, const RealBall& x) {
  check_positive(x, "G");
  RealBall denom(x);
  for (unsigned l = 1; l <= k; ++l) denom *= shifted(x, l);
  return RealBall::from_integer(factorial(k), x.precision()) / denom;
}

Rational tm_partial_sum(const Rational& x, std::uint64_t r) { return tm_partial_sum_impl(x, r, Rational(0)); }
RealBall tm_partial_sum(const RealBall& x, std::uint64_t r) {
  return tm_partial_sum_impl(x, r, RealBall(x.precision()));
}

RealBall g_tail_sum(unsigned k, const RealBall& x, double target_radius, std::uint64_t max_terms) {
  if (k == 0) throw DomainError("g_tail_sum: k must be positive");
  check_order(k, "g_tail_sum");
  {
    mpfr_t lo;
    mpfr_init2(lo, x.precision());
    x.lower(lo);
    const bool below_one = mpfr_cmp_ui(lo, 1) < 0;
    mpfr_clear(lo);
    if (below_one) throw DomainError("g_tail_sum: x must be at least 1");
  }
  const RealBall::Precision p = x.precision();
  const RealBall ck = RealBall::from_integer(kernel_constant(k), p);
  const std::uint64_t step = std::uint64_t{1} << k;
  const RealBall k_step = RealBall::from_integer(Integer(static_cast<unsigned long>(k)) * Integer(step), p);

  RealBall explicit_sum(p);
  std::uint64_t terms = 0;
  std::uint64_t checkpoint = 1;
  for (;;) {
    for (; terms < checkpoint; ++terms) explicit_sum += g_rec(k, shifted(x, terms * step));
    const RealBall y = shifted(x, terms * step);
    RealBall lower_tail = ck / (k_step * pow(shifted(y, step), k));
    RealBall upper_tail = ck / pow(y, k + 1) + ck / (k_step * pow(y, k));
    RealBall tail = hull(lower_tail, upper_tail);
    RealBall total = explicit_sum + tail;
    if (total.radius_below(target_radius) || mpfr_cmp_d(total.rad(), target_radius) == 0) return total;
    if (checkpoint >= max_terms) {
      throw PrecisionError("g_tail_sum: target radius not reached within " + std::to_string(max_terms) +
                           " terms");
    }
    checkpoint = std::min(checkpoint * 2, max_terms);
  }
}

}  // namespace tmh
