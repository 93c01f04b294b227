#include "tmh/target.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tmh/constants.hpp"
#include "tmh/error.hpp"

namespace tmh {
namespace {

bool square_free(unsigned long n) {
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return true;
}

std::string offset_suffix(const Rational& offset) {
  if (offset == 0) return "";
  return (offset > 0 ? "+" : "") + offset.get_str();
}

/// Bits of headroom needed above the binary point for |x|.
long magnitude_bits(const RealBall& x) {
  const double m = std::fabs(x.mid_double()) + x.rad_double();
  return m > 1.0 ? static_cast<long>(std::ceil(std::log2(m))) + 1 : 0;
}

}  // namespace

TargetNumber TargetNumber::rational(Rational value) {
  TargetNumber t;
  t.kind_ = Kind::ExactRational;
  value.canonicalize();
  t.value_ = std::move(value);
  return t;
}

TargetNumber TargetNumber::decimal(const std::string& digits) {
  if (digits.find('.') == std::string::npos) throw ParseError("decimal target needs a point: '" + digits + "'");
  TargetNumber t;
  t.kind_ = Kind::DecimalExact;
  t.value_ = parse_rational(digits);
  t.text_ = digits;
  return t;
}

TargetNumber TargetNumber::named_u(unsigned k, std::uint64_t m, Rational offset) {
  if (k < 1 || k > 16) throw DomainError("U_{k,m} needs 1 <= k <= 16");
  TargetNumber t;
  t.kind_ = Kind::NamedU;
  t.k_ = k;
  t.m_ = m & ((std::uint64_t{1} << k) - 1);
  offset.canonicalize();
  t.value_ = std::move(offset);
  return t;
}

TargetNumber TargetNumber::tau0(Rational offset) {
  TargetNumber t;
  t.kind_ = Kind::Tau0;
  offset.canonicalize();
  t.value_ = std::move(offset);
  return t;
}

TargetNumber TargetNumber::sqrt_combo(std::vector<SqrtTerm> terms, Rational offset) {
  for (const auto& term : terms) {
    if (term.radicand < 2 || !square_free(term.radicand)) {
      throw DomainError("radicand " + std::to_string(term.radicand) + " must be square-free and at least 2");
    }
  }
  // Merge equal radicands so that a nonempty list is always irrational.
  std::sort(terms.begin(), terms.end(), [](const SqrtTerm& a, const SqrtTerm& b) { return a.radicand < b.radicand; });
  std::vector<SqrtTerm> merged;
  for (auto& term : terms) {
    if (!merged.empty() && merged.back().radicand == term.radicand) {
      merged.back().coeff += term.coeff;
    } else {
      merged.push_back(std::move(term));
    }
  }
  std::erase_if(merged, [](const SqrtTerm& t) { return t.coeff == 0; });
  if (merged.empty()) throw DomainError("sqrt combination has no nonzero term");
  terms = std::move(merged);
  TargetNumber t;
  t.kind_ = Kind::SqrtCombo;
  t.sqrt_terms_ = std::move(terms);
  offset.canonicalize();
  t.value_ = std::move(offset);
  return t;
}

TargetNumber TargetNumber::custom(Oracle oracle, std::string label) {
  TargetNumber t;
  t.kind_ = Kind::Custom;
  t.custom_ = std::make_shared<const Oracle>(std::move(oracle));
  t.text_ = std::move(label);
  return t;
}

const Rational& TargetNumber::exact_value() const {
  if (!is_exact()) throw DomainError("target " + describe() + " has no exact value");
  return value_;
}

RealBall TargetNumber::base_enclosure(long working_bits) const {
  switch (kind_) {
    case Kind::ExactRational:
    case Kind::DecimalExact:
      return RealBall::from_rational(value_, working_bits);
    case Kind::NamedU:
      return u_closed_form(k_, m_, working_bits) + value_;
    case Kind::Tau0:
      return tmh::tau0(working_bits) + value_;
    case Kind::SqrtCombo: {
      RealBall sum(working_bits);
      for (const auto& term : sqrt_terms_) {
        sum += sqrt(RealBall(static_cast<long>(term.radicand), working_bits)) * term.coeff;
      }
      return sum + value_;
    }
    case Kind::Custom:
      return (*custom_)(working_bits);
  }
  throw ConsistencyError("unknown target kind");
}

RealBall TargetNumber::enclosure(long precision_bits) const {
  if (kind_ == Kind::Custom) {
    RealBall r = (*custom_)(precision_bits);
    if (!r.radius_at_most_pow2(-precision_bits + 2)) {
      throw ConsistencyError("oracle for " + text_ + " violated its radius contract");
    }
    return r;
  }
  long working = precision_bits + 8;
  for (int attempt = 0; attempt < 8; ++attempt) {
    RealBall r = base_enclosure(working);
    if (r.radius_at_most_pow2(-precision_bits + 2)) return r;
    working += magnitude_bits(r) + working / 2 + 8;
  }
  throw PrecisionError("enclosure of " + describe() + " did not reach " + std::to_string(precision_bits) + " bits");
}

TargetNumber::Oracle TargetNumber::oracle() const {
  return [self = *this](long bits) { return self.enclosure(bits); };
}

std::string TargetNumber::describe() const {
  switch (kind_) {
    case Kind::ExactRational:
      return value_.get_den() == 1 ? value_.get_str() + "/1" : value_.get_str();
    case Kind::DecimalExact:
      return text_;
    case Kind::NamedU:
      return "u:" + std::to_string(k_) + ":" + std::to_string(m_) + offset_suffix(value_);
    case Kind::Tau0:
      return "tau0" + offset_suffix(value_);
    case Kind::SqrtCombo: {
      std::ostringstream out;
      out << "sqrt:";
      for (std::size_t i = 0; i < sqrt_terms_.size(); ++i) {
        if (i) out << ',';
        out << sqrt_terms_[i].coeff.get_str() << ':' << sqrt_terms_[i].radicand;
      }
      return out.str() + offset_suffix(value_);
    }
    case Kind::Custom:
      return "custom:" + text_;
  }
  return "?";
}

namespace {

/// Splits "body+p/q" or "body-p/q" at the last top-level sign that follows
/// the body.
std::pair<std::string, Rational> split_offset(const std::string& text, std::size_t body_start) {
  for (std::size_t i = text.size(); i-- > body_start;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != ':' && text[i - 1] != ',') {
      return {text.substr(0, i), parse_rational(text.substr(text[i] == '+' ? i + 1 : i))};
    }
  }
  return {text, Rational(0)};
}

unsigned long parse_unsigned(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18) {
    throw ParseError("bad integer '" + s + "' in target '" + whole + "'");
  }
  return std::stoul(s);
}

}  // namespace

TargetNumber parse_target(const std::string& text) {
  if (text.empty()) throw ParseError("empty target");
  if (text.rfind("u:", 0) == 0) {
    auto [body, offset] = split_offset(text, 2);
    const auto colon = body.find(':', 2);
    if (colon == std::string::npos) throw ParseError("expected u:k:m, got '" + text + "'");
    const unsigned long k = parse_unsigned(body.substr(2, colon - 2), text);
    const unsigned long m = parse_unsigned(body.substr(colon + 1), text);
    if (k < 1 || k > 16) throw ParseError("u:k:m needs 1 <= k <= 16 in '" + text + "'");
    if (m >= (1UL << k)) throw ParseError("u:k:m needs m < 2^k in '" + text + "'");
    return TargetNumber::named_u(static_cast<unsigned>(k), m, offset);
  }
  if (text.rfind("tau0", 0) == 0) {
    auto [body, offset] = split_offset(text, 4);
    if (body != "tau0") throw ParseError("expected tau0[+p/q], got '" + text + "'");
    return TargetNumber::tau0(offset);
  }
  if (text.rfind("sqrt:", 0) == 0) {
    auto [body, offset] = split_offset(text, 5);
    std::vector<SqrtTerm> terms;
    std::stringstream items(body.substr(5));
    std::string item;
    while (std::getline(items, item, ',')) {
      const auto colon = item.rfind(':');
      if (colon == std::string::npos) throw ParseError("expected coeff:radicand in '" + text + "'");
      terms.push_back({parse_rational(item.substr(0, colon)), parse_unsigned(item.substr(colon + 1), text)});
    }
    try {
      return TargetNumber::sqrt_combo(std::move(terms), offset);
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (text.find('.') != std::string::npos) return TargetNumber::decimal(text);
  return TargetNumber::rational(parse_rational(text));
}

}  // namespace tmh
