#include "tmh/classifier.hpp"

#include <cmath>
#include <limits>

#include "tmh/constants.hpp"
#include "tmh/thue_morse.hpp"

namespace tmh {
namespace {

constexpr unsigned kMaxLevel = 16;

/// Sign accessor that extends the greedy stream on demand.
class SignStream {
 public:
  SignStream(GreedyState& state, std::uint64_t budget) : state_(state), budget_(budget) {}

  /// s_n, 1-based.
  Sign at(std::uint64_t n) {
    while (state_.n() < n) {
      if (state_.n() >= budget_) {
        throw BudgetError("greedy step budget of " + std::to_string(budget_) + " exhausted");
      }
      state_.step();
    }
    return state_.signs()[n - 1];
  }

  [[nodiscard]] std::uint64_t emitted() const { return state_.n(); }

 private:
  GreedyState& state_;
  std::uint64_t budget_;
};

std::uint64_t find_block(SignStream& signs, unsigned h, std::uint64_t n_floor) {
  const std::vector<Sign> pattern = block(h);
  for (std::uint64_t start = n_floor;; ++start) {
    std::size_t j = 0;
    while (j < pattern.size() && signs.at(start + j) == pattern[j]) ++j;
    if (j == pattern.size()) return start;
  }
}

Rational correction_term(const std::vector<Sign>& signs, unsigned h, std::uint64_t start, std::uint64_t phase) {
  Rational sum = 0;
  for (std::uint64_t n = 1; n < start; ++n) {
    const int diff = signs[n - 1] - f_periodic(h, static_cast<std::int64_t>(n + phase));
    if (diff == 0) continue;
    Rational term(diff, static_cast<unsigned long>(n));
    term.canonicalize();
    sum += term;
  }
  return sum;
}

RealBall numeric_gap(const TargetNumber& target, unsigned h, std::uint64_t phase, const Rational& correction,
                     long bits) {
  RealBall gap = target.enclosure(bits);
  gap -= u_closed_form(h, phase, bits);
  gap -= correction;
  return gap;
}

/// Upper bound max(N_{h-1}, floor_h, 2^h + 4/|G_{h-1}|) using the lower end of |G|.
double start_bound(const ClassificationStep& previous, unsigned h) {
  const RealBall magnitude = previous.gap.abs();
  mpfr_t lower;
  mpfr_init2(lower, 64);
  magnitude.lower(lower);
  const double g = mpfr_get_d(lower, MPFR_RNDD);
  mpfr_clear(lower);
  double bound = std::max(static_cast<double>(previous.block_start), static_cast<double>(block_floor(h)));
  const double reach = g > 0 ? std::ldexp(1.0, static_cast<int>(h)) + 4.0 / g : std::numeric_limits<double>::infinity();
  return std::max(bound, reach);
}

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::InXk: return "InXk";
    case Verdict::NotInXk: return "NotInXk";
    case Verdict::Undetermined: return "UndeterminedAtPrecision";
    case Verdict::RationalTarget: return "RationalTarget";
  }
  return "?";
}

std::string to_string(Decision decision) {
  switch (decision) {
    case Decision::Confirmed: return "confirmed";
    case Decision::RefutedExact: return "refuted_exact";
    case Decision::RefutedNumeric: return "refuted_numeric";
    case Decision::Undetermined: return "undetermined";
  }
  return "?";
}

std::uint64_t block_floor(unsigned h) { return (std::uint64_t{1} << (h + 2)) * (h + 2); }

std::uint64_t first_block_index(const TargetNumber& target, unsigned h, std::uint64_t n_floor,
                                std::uint64_t n_budget, GreedyOptions options) {
  if (h < 1) throw DomainError("first_block_index: h must be at least 1");
  if (h > 30) throw ResourceError("first_block_index: h must be at most 30");
  if (n_floor < 1) n_floor = 1;
  GreedyState state(target, options);
  SignStream signs(state, n_budget);
  return find_block(signs, h, n_floor);
}

ClassificationResult classify(const TargetNumber& target, unsigned k_max, const ClassifyOptions& options) {
  if (k_max < 1 || k_max > kMaxLevel) throw DomainError("classify: k_max must lie in 1..16");
  ClassificationResult result;
  if (target.is_exact()) {
    result.verdict = Verdict::RationalTarget;
    return result;
  }

  GreedyOptions greedy;
  greedy.max_precision = options.max_precision;
  greedy.horizon = block_floor(k_max) * 4;
  GreedyState state(target, greedy);
  SignStream signs(state, options.step_budget);

  auto fail = [&](const std::string& what) -> ClassificationError {
    return ClassificationError("classify " + target.describe() + ": " + what, result.steps);
  };

  const bool symbolic_u = target.kind() == TargetNumber::Kind::NamedU;
  for (unsigned h = 1; h <= k_max; ++h) {
    ClassificationStep step;
    step.h = h;
    if (!result.steps.empty()) step.start_bound = start_bound(result.steps.back(), h);
    try {
      step.block_start = find_block(signs, h, block_floor(h));
    } catch (const Error& e) {
      throw fail(std::string("level ") + std::to_string(h) + ": " + e.what());
    }
    const std::uint64_t period = std::uint64_t{1} << h;
    step.phase = (period - step.block_start % period) % period;
    step.correction = correction_term(state.signs(), h, step.block_start, step.phase);

    if (symbolic_u && target.u_order() == h && target.u_phase() == step.phase) {
      const Rational residual = target.offset() - step.correction;
      step.gap = RealBall::from_rational(residual, options.initial_gap_precision);
      step.gap_precision = options.initial_gap_precision;
      step.decision = residual == 0 ? Decision::Confirmed : Decision::RefutedExact;
    } else {
      step.decision = Decision::Undetermined;
      for (long bits = options.initial_gap_precision; bits <= options.max_precision; bits *= 2) {
        step.gap = numeric_gap(target, h, step.phase, step.correction, bits);
        step.gap_precision = bits;
        if (!step.gap.contains_zero()) {
          step.decision = Decision::RefutedNumeric;
          break;
        }
      }
    }
    result.steps.push_back(step);
    result.k = h;
    result.gap = step.gap;

    if (step.decision == Decision::Confirmed) {
      const std::uint64_t last = step.block_start + period * options.verify_periods - 1;
      try {
        for (std::uint64_t n = step.block_start; n <= last; ++n) {
          if (signs.at(n) != f_periodic(h, static_cast<std::int64_t>(n + step.phase))) {
            throw ConsistencyError("classify: periodic tail broken at n = " + std::to_string(n) + " for " +
                                   target.describe());
          }
        }
      } catch (const BudgetError& e) {
        throw fail(std::string("verification: ") + e.what());
      }
      result.verdict = Verdict::InXk;
      result.phase = step.phase;
      result.onset = step.block_start;
      result.verified_through = last;
      result.greedy_steps = signs.emitted();
      return result;
    }
    if (step.decision == Decision::Undetermined) {
      result.verdict = Verdict::Undetermined;
      result.greedy_steps = signs.emitted();
      return result;
    }
  }
  result.verdict = Verdict::NotInXk;
  result.greedy_steps = signs.emitted();
  return result;
}

}  // namespace tmh
