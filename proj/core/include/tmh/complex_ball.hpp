#pragma once

#include "tmh/real_ball.hpp"

namespace tmh {

/// Rectangular complex enclosure: a ball for each coordinate.
struct ComplexBall {
  RealBall re;
  RealBall im;

  explicit ComplexBall(RealBall::Precision precision = RealBall::kDefaultPrecision)
      : re(precision), im(precision) {}
  ComplexBall(RealBall real, RealBall imag) : re(std::move(real)), im(std::move(imag)) {}

  ComplexBall& operator+=(const ComplexBall& other);
  ComplexBall& operator*=(const ComplexBall& other);
  ComplexBall& operator*=(const RealBall& scale);
};

ComplexBall operator+(ComplexBall a, const ComplexBall& b);
ComplexBall operator*(ComplexBall a, const ComplexBall& b);

/// e^{i theta}.
ComplexBall exp_i(const RealBall& theta);

/// i^k.
ComplexBall i_power(long k, RealBall::Precision precision);

/// Principal logarithm. Throws DomainError when the enclosure meets the
/// branch cut (the closed negative real axis).
ComplexBall log(const ComplexBall& z);

}  // namespace tmh
