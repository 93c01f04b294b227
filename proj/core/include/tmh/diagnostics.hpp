#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tmh/greedy.hpp"

namespace tmh {

/// A step m where |sigma_m - tau| is smaller than at every earlier step.
struct Record {
  std::uint64_t index;
  RealBall abs_error;
};

/// Streaming record detector; every comparison is certified, refining the
/// state's precision when two errors cannot be told apart.
class RecordTracker {
 public:
  void observe(GreedyState& state);
  [[nodiscard]] const std::vector<Record>& records() const { return records_; }

 private:
  RealBall current_error(GreedyState& state) const;

  std::vector<Record> records_;
  std::optional<Rational> best_exact_;
};

std::vector<Record> record_tracker(const TargetNumber& target, std::uint64_t n_max, GreedyOptions options = {});

/// log|sigma_m - tau| / (log m)^2 evaluated at the midpoint.
double record_log_ratio(const Record& record);

/// Classifies scaled deviations (sigma_n - tau) n^{k+1} against the limit
/// points 0, +-c_k, +-c_k/2 and collects witnesses of the strict
/// inequalities 0 < (sigma_n - tau) n^{k+1} < c_k and
/// 0 < (tau - sigma_n) n^{k+1} < c_k.
class ClusterReducer {
 public:
  explicit ClusterReducer(unsigned k);

  void add(std::uint64_t n, const RealBall& scaled);

  /// Label of the nearest limit point: "0", "c", "-c", "c/2", "-c/2", or
  /// "inf" / "-inf" beyond 2 c_k.
  [[nodiscard]] std::string nearest(const RealBall& scaled) const;

  [[nodiscard]] unsigned order() const { return k_; }
  [[nodiscard]] const Integer& scale() const { return c_; }
  [[nodiscard]] const std::vector<std::uint64_t>& above_witnesses() const { return above_; }
  [[nodiscard]] const std::vector<std::uint64_t>& below_witnesses() const { return below_; }

 private:
  unsigned k_;
  Integer c_;
  RealBall c_ball_;
  std::vector<std::uint64_t> above_;
  std::vector<std::uint64_t> below_;
};

using ScaledSink = std::function<void(std::uint64_t n, const RealBall& scaled)>;

/// Streams (n, (sigma_n - tau) n^{k+1}) for n = 1..n_max; k <= 8.
void scaled_deviations(const TargetNumber& target, unsigned k, std::uint64_t n_max, const ScaledSink& sink,
                       GreedyOptions options = {});

/// For h = 1..h_max, the least n >= 2^h h with |tau - sigma_{n-1}| <
/// g_{h-1}(n). The caller asserts the target is irrational and lies outside
/// every X_k; BudgetError when the greedy run exceeds n_budget steps.
std::vector<std::uint64_t> nh_sequence(const TargetNumber& target, unsigned h_max,
                                       std::uint64_t n_budget = 50'000'000, GreedyOptions options = {});

/// One row of the exponent diagnostic: -log|sigma_n - tau| / log n.
struct ExponentRow {
  std::uint64_t n;
  double exponent;
  RealBall abs_error;
};

void exponent_series(const TargetNumber& target, std::uint64_t n_max,
                     const std::function<void(const ExponentRow&)>& sink, GreedyOptions options = {});

}  // namespace tmh
