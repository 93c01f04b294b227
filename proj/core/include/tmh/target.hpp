#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "tmh/rational.hpp"
#include "tmh/real_ball.hpp"

namespace tmh {

struct SqrtTerm {
  Rational coeff;
  unsigned long radicand;  // square-free, positive
};

/// A real number to approximate, described either exactly or symbolically,
/// with an enclosure oracle.
///
/// enclosure(P) always returns a ball of radius at most 2^{-P+2}.
class TargetNumber {
 public:
  enum class Kind { ExactRational, NamedU, Tau0, SqrtCombo, DecimalExact, Custom };
  using Oracle = std::function<RealBall(long precision_bits)>;

  static TargetNumber rational(Rational value);
  /// The exact value of a finite decimal literal such as "0.125".
  static TargetNumber decimal(const std::string& digits);
  /// U_{k,m} + offset, 1 <= k <= 16, m reduced mod 2^k.
  static TargetNumber named_u(unsigned k, std::uint64_t m, Rational offset = Rational(0));
  static TargetNumber tau0(Rational offset = Rational(0));
  static TargetNumber sqrt_combo(std::vector<SqrtTerm> terms, Rational offset = Rational(0));
  /// A user-supplied oracle. The greedy engine treats it as a black box:
  /// comparisons are only ever decided numerically.
  static TargetNumber custom(Oracle oracle, std::string label);

  [[nodiscard]] Kind kind() const { return kind_; }
  /// ExactRational or DecimalExact.
  [[nodiscard]] bool is_exact() const { return kind_ == Kind::ExactRational || kind_ == Kind::DecimalExact; }
  /// The exact value; throws DomainError for non-exact kinds.
  [[nodiscard]] const Rational& exact_value() const;
  /// The rational offset of the symbolic kinds (the value itself for exact ones).
  [[nodiscard]] const Rational& offset() const { return value_; }
  [[nodiscard]] unsigned u_order() const { return k_; }
  [[nodiscard]] std::uint64_t u_phase() const { return m_; }
  [[nodiscard]] const std::vector<SqrtTerm>& sqrt_terms() const { return sqrt_terms_; }

  [[nodiscard]] RealBall enclosure(long precision_bits) const;
  [[nodiscard]] Oracle oracle() const;

  /// Round-trippable description in the CLI target syntax.
  [[nodiscard]] std::string describe() const;

 private:
  TargetNumber() = default;
  [[nodiscard]] RealBall base_enclosure(long working_bits) const;

  Kind kind_ = Kind::ExactRational;
  Rational value_;
  unsigned k_ = 0;
  std::uint64_t m_ = 0;
  std::vector<SqrtTerm> sqrt_terms_;
  std::string text_;
  std::shared_ptr<const Oracle> custom_;
};

/// Parses the CLI target syntax: "p/q", "d.ddd", "u:k:m[+p/q]",
/// "tau0[+p/q]", "sqrt:c1:r1[,c2:r2...][+p/q]". Offsets may be negative
/// ("-p/q" instead of "+p/q"). Throws ParseError.
TargetNumber parse_target(const std::string& text);

}  // namespace tmh
