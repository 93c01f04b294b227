#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "tmh/rational.hpp"

namespace tmh {

/// Midpoint-radius real number at a configurable binary precision.
///
/// The represented set is [mid - rad, mid + rad]. Every operation returns a
/// ball that contains the exact result of applying the operation to every
/// pair of points of the inputs: midpoints are rounded to nearest, and the
/// rounding error is folded into the radius, which is always rounded up.
///
/// The radius is stored at a short fixed precision; only its magnitude
/// matters.
class RealBall {
 public:
  using Precision = mpfr_prec_t;
  static constexpr Precision kRadiusPrecision = 32;
  static constexpr Precision kDefaultPrecision = 128;

  /// The exact ball {0}.
  explicit RealBall(Precision precision = kDefaultPrecision);
  RealBall(long value, Precision precision);

  static RealBall from_integer(const Integer& value, Precision precision);
  static RealBall from_rational(const Rational& value, Precision precision);
  /// Smallest ball at the given precision containing [lo, hi].
  static RealBall from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, Precision precision);
  /// Parses a decimal literal, e.g. "0.3987", into an enclosing ball.
  static RealBall from_decimal(const std::string& text, Precision precision);

  RealBall(const RealBall& other);
  RealBall(RealBall&& other) noexcept;
  RealBall& operator=(const RealBall& other);
  RealBall& operator=(RealBall&& other) noexcept;
  ~RealBall();

  [[nodiscard]] Precision precision() const { return mpfr_get_prec(mid_); }
  [[nodiscard]] mpfr_srcptr mid() const { return mid_; }
  [[nodiscard]] mpfr_srcptr rad() const { return rad_; }

  [[nodiscard]] double mid_double() const;
  /// Radius rounded up to a double (saturates at the smallest subnormal).
  [[nodiscard]] double rad_double() const;
  [[nodiscard]] bool is_exact() const { return mpfr_zero_p(rad_) != 0; }

  /// +1 or -1 when every point of the ball has that sign, 0 otherwise.
  [[nodiscard]] int certain_sign() const;
  [[nodiscard]] bool certainly_positive() const { return certain_sign() > 0; }
  [[nodiscard]] bool certainly_negative() const { return certain_sign() < 0; }
  [[nodiscard]] bool contains_zero() const { return certain_sign() == 0; }

  [[nodiscard]] bool contains(const Rational& value) const;
  [[nodiscard]] bool contains(const RealBall& other) const;
  [[nodiscard]] bool overlaps(const RealBall& other) const;

  /// True when rad <= 2^exponent.
  [[nodiscard]] bool radius_at_most_pow2(long exponent) const;
  /// True when rad < value.
  [[nodiscard]] bool radius_below(double value) const;

  /// Lower and upper endpoints rounded outward at the ball's precision.
  void lower(mpfr_ptr out) const;
  void upper(mpfr_ptr out) const;

  /// Rounds the midpoint to a new precision, widening the radius as needed.
  void set_precision(Precision precision);
  void add_error(mpfr_srcptr error);
  void add_error_pow2(long exponent);

  /// this += sign / n, the inner step of every harmonic-type summation.
  void add_signed_reciprocal(int sign, unsigned long n);

  RealBall& operator+=(const RealBall& other);
  RealBall& operator-=(const RealBall& other);
  RealBall& operator*=(const RealBall& other);
  RealBall& operator/=(const RealBall& other);
  RealBall& operator+=(long value);
  RealBall& operator-=(long value);
  RealBall& operator*=(long value);
  RealBall& operator/=(long value);
  RealBall& operator+=(const Rational& value);
  RealBall& operator-=(const Rational& value);
  RealBall& operator*=(const Rational& value);

  /// Exact scaling by 2^exponent.
  RealBall& mul_2si(long exponent);

  [[nodiscard]] RealBall operator-() const;
  [[nodiscard]] RealBall abs() const;

  /// Decimal midpoint with `digits` significant digits, e.g. "3.1415e+00".
  [[nodiscard]] std::string mid_string(int digits = 20) const;
  /// Radius in scientific notation with a few digits, rounded up.
  [[nodiscard]] std::string rad_string() const;
  /// "[mid +/- rad]"
  [[nodiscard]] std::string to_string(int digits = 20) const;

  /// The value truncated toward zero to `digits` decimals, e.g. "-0.125",
  /// when every point of the ball gives the same string.
  [[nodiscard]] std::optional<std::string> certified_decimals(int digits) const;

 private:
  struct Uninitialized {};
  RealBall(Uninitialized, Precision precision);

  mpfr_t mid_;
  mpfr_t rad_;

  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  friend RealBall operator/(const RealBall& a, const RealBall& b);
  friend RealBall sqrt(const RealBall& x);
  friend RealBall log(const RealBall& x);
  friend RealBall exp(const RealBall& x);
  friend RealBall sin(const RealBall& x);
  friend RealBall cos(const RealBall& x);
  friend RealBall atan(const RealBall& x);
  friend RealBall hull(const RealBall& a, const RealBall& b);
};

RealBall operator+(const RealBall& a, const RealBall& b);
RealBall operator-(const RealBall& a, const RealBall& b);
RealBall operator*(const RealBall& a, const RealBall& b);
RealBall operator/(const RealBall& a, const RealBall& b);

inline RealBall operator+(RealBall a, long b) { return a += b; }
inline RealBall operator-(RealBall a, long b) { return a -= b; }
inline RealBall operator*(RealBall a, long b) { return a *= b; }
inline RealBall operator/(RealBall a, long b) { return a /= b; }
inline RealBall operator+(long a, RealBall b) { return b += a; }
inline RealBall operator*(long a, RealBall b) { return b *= a; }
RealBall operator-(long a, const RealBall& b);
RealBall operator/(long a, const RealBall& b);
inline RealBall operator+(RealBall a, const Rational& b) { return a += b; }
inline RealBall operator-(RealBall a, const Rational& b) { return a -= b; }
inline RealBall operator*(RealBall a, const Rational& b) { return a *= b; }

RealBall sqrt(const RealBall& x);
RealBall log(const RealBall& x);
RealBall exp(const RealBall& x);
RealBall sin(const RealBall& x);
RealBall cos(const RealBall& x);
RealBall atan(const RealBall& x);
RealBall pow(const RealBall& x, unsigned long exponent);
/// Certified sign of a - b, or 0 when the enclosures overlap.
int compare(const RealBall& a, const RealBall& b);
/// Smallest ball containing both arguments.
RealBall hull(const RealBall& a, const RealBall& b);

RealBall const_pi(RealBall::Precision precision);
RealBall const_log2(RealBall::Precision precision);

}  // namespace tmh
