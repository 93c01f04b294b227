#include "tmh/real_ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

#include "tmh/error.hpp"

namespace tmh {
namespace {

using Precision = RealBall::Precision;
constexpr Precision kRadPrec = RealBall::kRadiusPrecision;

/// Small fixed-precision temporaries for radius bookkeeping. Radius
/// arithmetic is all upward-rounded on nonnegative values.
struct RadiusScratch {
  mpfr_t a, b, c;
  RadiusScratch() {
    mpfr_init2(a, kRadPrec);
    mpfr_init2(b, kRadPrec);
    mpfr_init2(c, kRadPrec);
  }
  ~RadiusScratch() {
    mpfr_clear(a);
    mpfr_clear(b);
    mpfr_clear(c);
  }
  RadiusScratch(const RadiusScratch&) = delete;
  RadiusScratch& operator=(const RadiusScratch&) = delete;
};

RadiusScratch& radius_scratch() {
  thread_local RadiusScratch scratch;
  return scratch;
}

/// Working-precision temporary, resized lazily.
struct WideScratch {
  mpfr_t v;
  WideScratch() { mpfr_init2(v, 64); }
  ~WideScratch() { mpfr_clear(v); }
  WideScratch(const WideScratch&) = delete;
  WideScratch& operator=(const WideScratch&) = delete;
  mpfr_ptr at(Precision p) {
    if (mpfr_get_prec(v) != p) mpfr_set_prec(v, p);
    return v;
  }
};

WideScratch& wide_scratch() {
  thread_local WideScratch scratch;
  return scratch;
}

/// rad += ulp(value) when the operation that produced value was inexact.
void add_ulp(mpfr_ptr rad, mpfr_srcptr value, int ternary) {
  if (ternary == 0 || !mpfr_regular_p(value)) return;
  auto& s = radius_scratch();
  const long e = mpfr_get_exp(value) - static_cast<long>(mpfr_get_prec(value));
  mpfr_set_ui_2exp(s.c, 1, e, MPFR_RNDU);
  mpfr_add(rad, rad, s.c, MPFR_RNDU);
}

/// out = |x| rounded up to radius precision.
void abs_up(mpfr_ptr out, mpfr_srcptr x) { mpfr_abs(out, x, MPFR_RNDU); }

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational to_rational(mpfr_srcptr x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

class Temp {
 public:
  explicit Temp(Precision p) { mpfr_init2(v_, p); }
  ~Temp() { mpfr_clear(v_); }
  Temp(const Temp&) = delete;
  Temp& operator=(const Temp&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

/// Applies a monotone function through the endpoints.
template <class F>
RealBall monotone(const RealBall& x, F f, bool increasing) {
  const Precision p = x.precision();
  Temp lo(p), hi(p), flo(p), fhi(p);
  x.lower(lo);
  x.upper(hi);
  if (increasing) {
    f(flo.get(), lo.get(), MPFR_RNDD);
    f(fhi.get(), hi.get(), MPFR_RNDU);
  } else {
    f(flo.get(), hi.get(), MPFR_RNDD);
    f(fhi.get(), lo.get(), MPFR_RNDU);
  }
  return RealBall::from_bounds(flo.get(), fhi.get(), p);
}

}  // namespace

RealBall::RealBall(Uninitialized, Precision precision) {
  mpfr_init2(mid_, precision);
  mpfr_init2(rad_, kRadPrec);
}

RealBall::RealBall(Precision precision) : RealBall(Uninitialized{}, precision) {
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RealBall::RealBall(long value, Precision precision) : RealBall(Uninitialized{}, precision) {
  mpfr_set_zero(rad_, 1);
  add_ulp(rad_, mid_, mpfr_set_si(mid_, value, MPFR_RNDN));
}

RealBall RealBall::from_integer(const Integer& value, Precision precision) {
  RealBall r(Uninitialized{}, precision);
  mpfr_set_zero(r.rad_, 1);
  add_ulp(r.rad_, r.mid_, mpfr_set_z(r.mid_, value.get_mpz_t(), MPFR_RNDN));
  return r;
}

RealBall RealBall::from_rational(const Rational& value, Precision precision) {
  RealBall r(Uninitialized{}, precision);
  mpfr_set_zero(r.rad_, 1);
  add_ulp(r.rad_, r.mid_, mpfr_set_q(r.mid_, value.get_mpq_t(), MPFR_RNDN));
  return r;
}

RealBall RealBall::from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, Precision precision) {
  if (mpfr_cmp(lo, hi) > 0) throw DomainError("RealBall::from_bounds: lo > hi");
  RealBall r(Uninitialized{}, precision);
  mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);
  const Precision wp = std::max({precision, mpfr_get_prec(lo), mpfr_get_prec(hi)});
  Temp up(wp), down(wp);
  mpfr_sub(up, hi, r.mid_, MPFR_RNDU);
  mpfr_sub(down, r.mid_, lo, MPFR_RNDU);
  if (mpfr_cmp(up.get(), down.get()) < 0) mpfr_swap(up, down);
  mpfr_set(r.rad_, up.get(), MPFR_RNDU);
  if (mpfr_sgn(r.rad_) < 0) mpfr_set_zero(r.rad_, 1);
  return r;
}

RealBall RealBall::from_decimal(const std::string& text, Precision precision) {
  Temp lo(precision), hi(precision);
  if (mpfr_set_str(lo, text.c_str(), 10, MPFR_RNDD) != 0) {
    throw ParseError("RealBall::from_decimal: cannot parse '" + text + "'");
  }
  mpfr_set_str(hi, text.c_str(), 10, MPFR_RNDU);
  return from_bounds(lo, hi, precision);
}

RealBall::RealBall(const RealBall& other) : RealBall(Uninitialized{}, other.precision()) {
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& other) noexcept : RealBall(Uninitialized{}, MPFR_PREC_MIN) {
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

RealBall& RealBall::operator=(const RealBall& other) {
  if (this == &other) return *this;
  if (precision() != other.precision()) mpfr_set_prec(mid_, other.precision());
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
  return *this;
}

RealBall& RealBall::operator=(RealBall&& other) noexcept {
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

double RealBall::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double RealBall::rad_double() const {
  const double d = mpfr_get_d(rad_, MPFR_RNDU);
  return d;
}

int RealBall::certain_sign() const {
  if (mpfr_cmpabs(mid_, rad_) > 0) return mpfr_sgn(mid_);
  return 0;
}

bool RealBall::contains(const Rational& value) const {
  Rational d = to_rational(mid_) - value;
  return abs_q(d) <= to_rational(rad_);
}

bool RealBall::contains(const RealBall& other) const {
  const Rational d = abs_q(to_rational(mid_) - to_rational(other.mid_));
  return d + to_rational(other.rad_) <= to_rational(rad_);
}

bool RealBall::overlaps(const RealBall& other) const {
  const Rational d = abs_q(to_rational(mid_) - to_rational(other.mid_));
  return d <= to_rational(rad_) + to_rational(other.rad_);
}

bool RealBall::radius_at_most_pow2(long exponent) const {
  return mpfr_cmp_ui_2exp(rad_, 1, exponent) <= 0;
}

bool RealBall::radius_below(double value) const { return mpfr_cmp_d(rad_, value) < 0; }

void RealBall::lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void RealBall::upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

void RealBall::set_precision(Precision precision) {
  add_ulp(rad_, mid_, mpfr_prec_round(mid_, precision, MPFR_RNDN));
}

void RealBall::add_error(mpfr_srcptr error) {
  auto& s = radius_scratch();
  abs_up(s.a, error);
  mpfr_add(rad_, rad_, s.a, MPFR_RNDU);
}

void RealBall::add_error_pow2(long exponent) {
  auto& s = radius_scratch();
  mpfr_set_ui_2exp(s.a, 1, exponent, MPFR_RNDU);
  mpfr_add(rad_, rad_, s.a, MPFR_RNDU);
}

void RealBall::add_signed_reciprocal(int sign, unsigned long n) {
  mpfr_ptr t = wide_scratch().at(std::max<Precision>(precision(), 64));
  mpfr_set_ui(t, n, MPFR_RNDN);
  add_ulp(rad_, t, mpfr_ui_div(t, 1, t, MPFR_RNDN));
  const int ternary = sign > 0 ? mpfr_add(mid_, mid_, t, MPFR_RNDN) : mpfr_sub(mid_, mid_, t, MPFR_RNDN);
  add_ulp(rad_, mid_, ternary);
}

RealBall& RealBall::operator+=(const RealBall& other) {
  if (other.precision() > precision()) set_precision(other.precision());
  mpfr_add(rad_, rad_, other.rad_, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_add(mid_, mid_, other.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator-=(const RealBall& other) {
  if (other.precision() > precision()) set_precision(other.precision());
  mpfr_add(rad_, rad_, other.rad_, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_sub(mid_, mid_, other.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator*=(const RealBall& other) {
  if (other.precision() > precision()) set_precision(other.precision());
  auto& s = radius_scratch();
  // rad = |ma| rb + |mb| ra + ra rb
  abs_up(s.a, mid_);
  mpfr_mul(s.a, s.a, other.rad_, MPFR_RNDU);
  abs_up(s.b, other.mid_);
  mpfr_mul(s.b, s.b, rad_, MPFR_RNDU);
  mpfr_add(s.a, s.a, s.b, MPFR_RNDU);
  mpfr_mul(s.b, rad_, other.rad_, MPFR_RNDU);
  mpfr_add(rad_, s.a, s.b, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_mul(mid_, mid_, other.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator/=(const RealBall& other) {
  if (other.contains_zero()) throw DomainError("RealBall: division by a ball containing zero");
  if (other.precision() > precision()) set_precision(other.precision());
  auto& s = radius_scratch();
  // rad = (|ma| rb + |mb| ra) / (|mb| (|mb| - rb))
  abs_up(s.a, mid_);
  mpfr_mul(s.a, s.a, other.rad_, MPFR_RNDU);
  abs_up(s.b, other.mid_);
  mpfr_mul(s.b, s.b, rad_, MPFR_RNDU);
  mpfr_add(s.a, s.a, s.b, MPFR_RNDU);
  mpfr_abs(s.b, other.mid_, MPFR_RNDD);
  mpfr_sub(s.c, s.b, other.rad_, MPFR_RNDD);
  mpfr_mul(s.b, s.b, s.c, MPFR_RNDD);
  mpfr_div(rad_, s.a, s.b, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_div(mid_, mid_, other.mid_, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator+=(long value) {
  add_ulp(rad_, mid_, mpfr_add_si(mid_, mid_, value, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator-=(long value) {
  add_ulp(rad_, mid_, mpfr_sub_si(mid_, mid_, value, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator*=(long value) {
  auto& s = radius_scratch();
  mpfr_set_si(s.a, value, MPFR_RNDU);
  mpfr_abs(s.a, s.a, MPFR_RNDU);
  mpfr_mul(rad_, rad_, s.a, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_mul_si(mid_, mid_, value, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator/=(long value) {
  if (value == 0) throw DomainError("RealBall: division by zero");
  auto& s = radius_scratch();
  mpfr_set_si(s.a, value, MPFR_RNDD);
  mpfr_abs(s.a, s.a, MPFR_RNDD);
  mpfr_div(rad_, rad_, s.a, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_div_si(mid_, mid_, value, MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator+=(const Rational& value) {
  add_ulp(rad_, mid_, mpfr_add_q(mid_, mid_, value.get_mpq_t(), MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator-=(const Rational& value) {
  add_ulp(rad_, mid_, mpfr_sub_q(mid_, mid_, value.get_mpq_t(), MPFR_RNDN));
  return *this;
}

RealBall& RealBall::operator*=(const Rational& value) {
  auto& s = radius_scratch();
  const Rational a = abs_q(value);
  mpfr_set_q(s.a, a.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(rad_, rad_, s.a, MPFR_RNDU);
  add_ulp(rad_, mid_, mpfr_mul_q(mid_, mid_, value.get_mpq_t(), MPFR_RNDN));
  return *this;
}

RealBall& RealBall::mul_2si(long exponent) {
  mpfr_mul_2si(mid_, mid_, exponent, MPFR_RNDN);
  mpfr_mul_2si(rad_, rad_, exponent, MPFR_RNDU);
  return *this;
}

RealBall RealBall::operator-() const {
  RealBall r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RealBall RealBall::abs() const {
  RealBall r(*this);
  if (certain_sign() != 0) {
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
    return r;
  }
  // Straddles zero: [0, |mid| + rad].
  Temp hi(precision()), zero(precision());
  mpfr_abs(hi, mid_, MPFR_RNDU);
  mpfr_add(hi, hi, rad_, MPFR_RNDU);
  mpfr_set_zero(zero, 1);
  return from_bounds(zero, hi, precision());
}

std::string RealBall::mid_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), mid_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string RealBall::rad_string() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.3RUe", rad_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string RealBall::to_string(int digits) const {
  return "[" + mid_string(digits) + " +/- " + rad_string() + "]";
}

std::optional<std::string> RealBall::certified_decimals(int digits) const {
  const int sign = certain_sign();
  if (sign == 0) return std::nullopt;
  Temp lo(precision()), hi(precision());
  lower(lo);
  upper(hi);
  Rational scale(Integer(1), Integer(1));
  mpz_ui_pow_ui(scale.get_num_mpz_t(), 10, static_cast<unsigned long>(digits));
  auto truncated = [&](mpfr_ptr x) {
    Rational q = abs_q(to_rational(x)) * scale;
    Integer n;
    mpz_fdiv_q(n.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return n;
  };
  // For negative balls |lo| is the larger magnitude.
  const Integer a = truncated(lo), b = truncated(hi);
  if (a != b) return std::nullopt;
  std::string s = a.get_str();
  if (s.size() < static_cast<std::size_t>(digits) + 1) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (sign < 0) s.insert(0, "-");
  return s;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(a);
  r += b;
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) {
  RealBall r(a);
  r -= b;
  return r;
}

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(a);
  r *= b;
  return r;
}

RealBall operator/(const RealBall& a, const RealBall& b) {
  RealBall r(a);
  r /= b;
  return r;
}

RealBall operator-(long a, const RealBall& b) {
  RealBall r(a, b.precision());
  r -= b;
  return r;
}

RealBall operator/(long a, const RealBall& b) {
  RealBall r(a, b.precision());
  r /= b;
  return r;
}

RealBall sqrt(const RealBall& x) {
  {
    Temp lo(x.precision());
    x.lower(lo);
    if (mpfr_sgn(lo.get()) < 0) throw DomainError("sqrt: ball contains negative values");
  }
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_sqrt(r, a, rnd); }, true);
}

RealBall log(const RealBall& x) {
  if (!x.certainly_positive()) throw DomainError("log: ball is not certainly positive");
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_log(r, a, rnd); }, true);
}

RealBall exp(const RealBall& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_exp(r, a, rnd); }, true);
}

RealBall atan(const RealBall& x) {
  return monotone(x, [](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_atan(r, a, rnd); }, true);
}

RealBall sin(const RealBall& x) {
  RealBall r(x);
  add_ulp(r.rad_, r.mid_, mpfr_sin(r.mid_, x.mid_, MPFR_RNDN));
  return r;
}

RealBall cos(const RealBall& x) {
  RealBall r(x);
  add_ulp(r.rad_, r.mid_, mpfr_cos(r.mid_, x.mid_, MPFR_RNDN));
  return r;
}

RealBall pow(const RealBall& x, unsigned long exponent) {
  RealBall result(1, x.precision());
  RealBall base(x);
  while (exponent != 0) {
    if (exponent & 1UL) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

int compare(const RealBall& a, const RealBall& b) {
  auto& s = radius_scratch();
  mpfr_ptr diff = wide_scratch().at(std::max(a.precision(), b.precision()));
  const int ternary = mpfr_sub(diff, a.mid(), b.mid(), MPFR_RNDN);
  mpfr_add(s.a, a.rad(), b.rad(), MPFR_RNDU);
  add_ulp(s.a, diff, ternary);
  if (mpfr_cmpabs(diff, s.a) > 0) return mpfr_sgn(diff);
  return 0;
}

RealBall hull(const RealBall& a, const RealBall& b) {
  const RealBall::Precision p = std::max(a.precision(), b.precision());
  Temp alo(p), ahi(p), blo(p), bhi(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_min(alo, alo, blo, MPFR_RNDD);
  mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
  return RealBall::from_bounds(alo, ahi, p);
}

RealBall const_pi(RealBall::Precision precision) {
  Temp lo(precision), hi(precision);
  mpfr_const_pi(lo, MPFR_RNDD);
  mpfr_const_pi(hi, MPFR_RNDU);
  return RealBall::from_bounds(lo, hi, precision);
}

RealBall const_log2(RealBall::Precision precision) {
  Temp lo(precision), hi(precision);
  mpfr_const_log2(lo, MPFR_RNDD);
  mpfr_const_log2(hi, MPFR_RNDU);
  return RealBall::from_bounds(lo, hi, precision);
}

}  // namespace tmh
