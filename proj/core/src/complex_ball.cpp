#include "tmh/complex_ball.hpp"

#include "tmh/error.hpp"

namespace tmh {

ComplexBall& ComplexBall::operator+=(const ComplexBall& other) {
  re += other.re;
  im += other.im;
  return *this;
}

ComplexBall& ComplexBall::operator*=(const ComplexBall& other) {
  RealBall r = re * other.re - im * other.im;
  RealBall i = re * other.im + im * other.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexBall& ComplexBall::operator*=(const RealBall& scale) {
  re *= scale;
  im *= scale;
  return *this;
}

ComplexBall operator+(ComplexBall a, const ComplexBall& b) { return a += b; }
ComplexBall operator*(ComplexBall a, const ComplexBall& b) { return a *= b; }

ComplexBall exp_i(const RealBall& theta) { return {cos(theta), sin(theta)}; }

ComplexBall i_power(long k, RealBall::Precision precision) {
  const long r = ((k % 4) + 4) % 4;
  static constexpr long kRe[4] = {1, 0, -1, 0};
  static constexpr long kIm[4] = {0, 1, 0, -1};
  return {RealBall(kRe[r], precision), RealBall(kIm[r], precision)};
}

ComplexBall log(const ComplexBall& z) {
  const RealBall::Precision p = std::max(z.re.precision(), z.im.precision());
  RealBall modulus2 = z.re * z.re + z.im * z.im;
  RealBall log_abs = log(modulus2);
  log_abs.mul_2si(-1);
  RealBall arg(p);
  if (z.re.certainly_positive()) {
    arg = atan(z.im / z.re);
  } else if (z.im.certainly_positive()) {
    RealBall half_pi = const_pi(p);
    half_pi.mul_2si(-1);
    arg = half_pi - atan(z.re / z.im);
  } else if (z.im.certainly_negative()) {
    RealBall half_pi = const_pi(p);
    half_pi.mul_2si(-1);
    arg = -half_pi - atan(z.re / z.im);
  } else {
    throw DomainError("complex log: enclosure meets the branch cut");
  }
  return {std::move(log_abs), std::move(arg)};
}

}  // namespace tmh
