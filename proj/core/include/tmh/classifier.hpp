#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmh/error.hpp"
#include "tmh/greedy.hpp"
#include "tmh/rational.hpp"
#include "tmh/real_ball.hpp"
#include "tmh/target.hpp"

namespace tmh {

enum class Verdict { InXk, NotInXk, Undetermined, RationalTarget };

std::string to_string(Verdict verdict);

enum class Decision {
  Confirmed,        // symbolic identity holds
  RefutedExact,     // gap is a nonzero rational
  RefutedNumeric,   // gap enclosure excludes zero
  Undetermined,     // gap enclosure still contains zero at the ceiling
};

std::string to_string(Decision decision);

struct ClassificationStep {
  unsigned h = 0;
  std::uint64_t block_start = 0;  // N_h, 1-based
  std::uint64_t phase = 0;        // m_h = -N_h mod 2^h
  Rational correction;        // sum_{n < N_h} (s_n - f_h(n + m_h)) / n
  /// tau - U_{h, m_h} - correction.
  RealBall gap;
  long gap_precision = 0;
  /// Upper bound for N_h derived from the previous gap; absent for h = 1.
  std::optional<double> start_bound;
  Decision decision = Decision::Undetermined;
};

struct ClassificationResult {
  Verdict verdict = Verdict::Undetermined;
  /// Level of the verdict: the matching k for InXk, the last level probed
  /// otherwise.
  unsigned k = 0;
  std::uint64_t phase = 0;        // InXk only
  std::uint64_t onset = 0;        // InXk only: s_n = f_k(n + phase) for n >= onset
  std::uint64_t verified_through = 0;  // InXk only: last n checked
  RealBall gap;
  std::vector<ClassificationStep> steps;
  std::uint64_t greedy_steps = 0;
};

struct ClassifyOptions {
  /// Total greedy steps allowed.
  std::uint64_t step_budget = 50'000'000;
  long initial_gap_precision = 128;
  /// Ceiling for the gap precision and for the greedy engine.
  long max_precision = 1L << 16;
  /// Periods of f_k checked past the onset after a confirmation.
  std::uint64_t verify_periods = 64;
};

/// Budget or precision exhaustion during classification; carries the levels
/// completed so far.
class ClassificationError : public BudgetError {
 public:
  ClassificationError(const std::string& what, std::vector<ClassificationStep> steps)
      : BudgetError(what), steps_(std::move(steps)) {}
  [[nodiscard]] const std::vector<ClassificationStep>& steps() const { return steps_; }

 private:
  std::vector<ClassificationStep> steps_;
};

/// Decides tau in X_h for h = 1..k_max (k_max <= 16), stopping at the first
/// confirmation or undecided level. Membership is confirmed only for NamedU
/// targets whose offset matches the computed correction exactly.
ClassificationResult classify(const TargetNumber& target, unsigned k_max, const ClassifyOptions& options = {});

/// Minimal N >= n_floor with s_{N+j} = epsilon(j) for 0 <= j < 2^h. Throws
/// BudgetError once more than n_budget greedy steps would be needed.
std::uint64_t first_block_index(const TargetNumber& target, unsigned h, std::uint64_t n_floor,
                                std::uint64_t n_budget, GreedyOptions options = {});

/// 2^{h+2}(h+2): the smallest admissible N_h.
std::uint64_t block_floor(unsigned h);

}  // namespace tmh
