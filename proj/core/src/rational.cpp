#include "tmh/rational.hpp"

#include <algorithm>
#include <cctype>

#include "tmh/error.hpp"

namespace tmh {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!is_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
  Integer n(std::string(s), 10);
  return negative ? Integer(-n) : n;
}

}  // namespace

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer p = parse_integer(text.substr(0, slash), text);
    const std::string_view den = text.substr(slash + 1);
    if (!is_digits(den)) throw ParseError("not a rational number: '" + std::string(text) + "'");
    const Integer q(std::string(den), 10);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(p, q);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
      negative = head.front() == '-';
      head.remove_prefix(1);
    }
    if ((head.empty() && frac.empty()) || (!head.empty() && !is_digits(head)) ||
        (!frac.empty() && !is_digits(frac))) {
      throw ParseError("not a decimal number: '" + std::string(text) + "'");
    }
    const Integer num(std::string(head) + std::string(frac), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    return make_rational(negative ? Integer(-num) : num, den);
  }
  return Rational(parse_integer(text, text));
}

std::string to_exact_decimal(const Rational& value) {
  Integer den = value.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_str();
  const unsigned long digits = std::max(twos, fives);
  if (digits == 0) return value.get_num().get_str();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled = value.get_num() * scale / value.get_den();
  const bool negative = scaled < 0;
  std::string s = Integer(abs(scaled)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow2(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace tmh
