#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tmh/rational.hpp"
#include "tmh/real_ball.hpp"
#include "tmh/target.hpp"
#include "tmh/thue_morse.hpp"

namespace tmh {

struct GreedyOptions {
  /// Working precision for sigma; 0 sizes it from `horizon`.
  RealBall::Precision initial_precision = 0;
  /// Ceiling for both sigma and target precision.
  RealBall::Precision max_precision = RealBall::Precision{1} << 20;
  /// Expected number of steps, used only to pre-size the precision.
  std::uint64_t horizon = 0;
};

/// ceil((ln N)^2 / ln 4) * 3/2 + 64, with a floor of 64 bits.
RealBall::Precision presized_precision(std::uint64_t horizon);

/// The greedy sign process s_{n+1} = +1 iff sigma_n <= tau.
///
/// Exact targets run in rational arithmetic until every possible exact hit
/// lies behind (N <= 3 ln q for denominator q, or N = 1), then continue with
/// balls. Other targets use balls throughout: an undecided comparison
/// refines whichever enclosure is wider, replaying the retained signs when
/// sigma is refined.
class GreedyState {
 public:
  explicit GreedyState(TargetNumber target, GreedyOptions options = {});

  /// Emits s_{n+1} and advances to n+1.
  Sign step();

  /// Certified sign of sigma_n - tau (0 only for an exact hit).
  int compare();

  [[nodiscard]] std::uint64_t n() const { return n_; }
  [[nodiscard]] const TargetNumber& target() const { return target_; }
  [[nodiscard]] const std::vector<Sign>& signs() const { return signs_; }
  [[nodiscard]] std::optional<std::uint64_t> exact_hit() const { return exact_hit_; }
  [[nodiscard]] bool exact_mode() const { return exact_mode_; }
  /// sigma_n as an exact rational; only valid in exact mode.
  [[nodiscard]] const Rational& exact_sigma() const;
  /// sigma_n - tau exactly; only valid in exact mode.
  [[nodiscard]] Rational exact_deviation() const;
  [[nodiscard]] RealBall sigma() const;
  /// Enclosure of sigma_n - tau at the current precisions.
  [[nodiscard]] RealBall deviation() const;
  [[nodiscard]] const RealBall& target_ball() const { return tau_ball_; }
  [[nodiscard]] RealBall::Precision precision() const { return precision_; }
  [[nodiscard]] RealBall::Precision target_precision() const { return tau_bits_; }

  /// sigma_index recomputed from the retained signs at the current precision.
  [[nodiscard]] RealBall sigma_at(std::uint64_t index) const;

  /// Doubles the precision of the wider of the two enclosures. Throws
  /// PrecisionError at the ceiling.
  void refine();
  void refine_sigma();
  void refine_target();

 private:
  void leave_exact_mode();

  TargetNumber target_;
  GreedyOptions options_;
  std::uint64_t n_ = 0;
  std::vector<Sign> signs_;
  std::optional<std::uint64_t> exact_hit_;

  bool exact_mode_ = false;
  std::uint64_t exact_horizon_ = 0;
  Rational exact_sigma_;
  Rational exact_tau_;

  // Ball mode: sigma_n = base_sigma_ + sum_{base_n_ < m <= n} s_m / m.
  std::uint64_t base_n_ = 0;
  Rational base_sigma_;
  RealBall::Precision precision_;
  RealBall sigma_ball_;
  long tau_bits_;
  RealBall tau_ball_;
};

struct StepEvent {
  std::uint64_t n;
  Sign sign;
  const GreedyState& state;
};

using Observer = std::function<void(const StepEvent&)>;

struct RunSummary {
  std::uint64_t steps = 0;
  RealBall sigma;
  RealBall deviation;
  std::optional<std::uint64_t> exact_hit;
  RealBall::Precision precision = 0;
  long target_precision = 0;
  std::vector<Sign> signs;
};

/// Runs n_max steps, calling every observer after each one.
RunSummary run(const TargetNumber& target, std::uint64_t n_max, const std::vector<Observer>& observers = {},
               GreedyOptions options = {});

/// The unique N with sigma_N = h/k, found by exact simulation of
/// max(1, ceil(3 ln k)) steps.
std::optional<std::uint64_t> exact_hit_search(const Rational& target);

/// Number of exact steps exact_hit_search simulates for denominator k.
std::uint64_t exact_hit_bound(const Integer& denominator);

}  // namespace tmh
