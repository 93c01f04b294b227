#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tmh/rational.hpp"
#include "tmh/target.hpp"

namespace tmh {

struct AdversarialWitness {
  std::uint64_t index;  // m_i
  Rational bound;       // clamped f(m_i)
};

struct AdversarialResult {
  TargetNumber target;  // the last iterate, as an exact decimal
  Rational center;
  std::vector<AdversarialWitness> witnesses;
  /// Bound on the distance from `center` to the limit of the iteration.
  Rational slack;
};

/// Builds a target whose greedy errors dip below f at the witness indices:
/// |target - sigma_{m_i}(target)| < f(m_i) for i = 1..i_max.
///
/// f is first clamped to f(1) <= 1/2 and f(n+1) <= f(n)/5. Iterates are short
/// decimals; greedy runs are exact. BudgetError if a search for the next
/// witness exceeds step_budget steps.
AdversarialResult construct_adversarial(const std::function<Rational(std::uint64_t)>& f, unsigned i_max,
                                        std::uint64_t step_budget = 20'000);

/// The half-open interval [lo, hi) of targets whose first m greedy signs
/// agree with those of `target`; hi is absent when unbounded.
struct PrefixInterval {
  Rational lo;
  bool has_lo = false;
  Rational hi;
  bool has_hi = false;
};

PrefixInterval prefix_interval(const Rational& target, std::uint64_t m);

}  // namespace tmh
