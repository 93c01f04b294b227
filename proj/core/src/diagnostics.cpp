#include "tmh/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tmh/error.hpp"
#include "tmh/kernels.hpp"

namespace tmh {
namespace {

/// log |x| for the midpoint of x, safe for magnitudes far below DBL_MIN.
double log_abs_mid(const RealBall& x) {
  if (mpfr_zero_p(x.mid())) return -std::numeric_limits<double>::infinity();
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_abs(t, x.mid(), MPFR_RNDN);
  mpfr_log(t, t, MPFR_RNDN);
  const double v = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return v;
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

RealBall RecordTracker::current_error(GreedyState& state) const {
  if (state.exact_mode()) return RealBall::from_rational(abs_rational(state.exact_deviation()), state.precision());
  return state.deviation().abs();
}

void RecordTracker::observe(GreedyState& state) {
  const std::uint64_t n = state.n();
  if (state.exact_mode()) {
    Rational d = abs_rational(state.exact_deviation());
    if (records_.empty() || d < *best_exact_) {
      records_.push_back({n, RealBall::from_rational(d, state.precision())});
      best_exact_ = std::move(d);
    }
    return;
  }
  if (records_.empty()) {
    records_.push_back({n, current_error(state)});
    return;
  }
  for (;;) {
    RealBall error = current_error(state);
    Record& best = records_.back();
    RealBall best_error = best_exact_ ? RealBall::from_rational(*best_exact_, state.precision()) : best.abs_error;
    const int c = compare(error, best_error);
    if (c < 0) {
      records_.push_back({n, std::move(error)});
      best_exact_.reset();
      return;
    }
    if (c > 0) return;
    state.refine();
    if (!best_exact_) best.abs_error = (state.sigma_at(best.index) - state.target_ball()).abs();
  }
}

std::vector<Record> record_tracker(const TargetNumber& target, std::uint64_t n_max, GreedyOptions options) {
  if (n_max < 1) throw DomainError("record_tracker: n_max must be at least 1");
  if (options.horizon == 0) options.horizon = n_max;
  GreedyState state(target, options);
  RecordTracker tracker;
  while (state.n() < n_max) {
    state.step();
    tracker.observe(state);
  }
  return tracker.records();
}

double record_log_ratio(const Record& record) {
  const double lm = std::log(static_cast<double>(record.index));
  return log_abs_mid(record.abs_error) / (lm * lm);
}

ClusterReducer::ClusterReducer(unsigned k)
    : k_(k), c_(kernel_constant(k)), c_ball_(RealBall::from_integer(c_, 128)) {}

void ClusterReducer::add(std::uint64_t n, const RealBall& scaled) {
  if (scaled.certainly_positive() && compare(c_ball_, scaled) > 0) above_.push_back(n);
  if (scaled.certainly_negative() && compare(c_ball_, -scaled) > 0) below_.push_back(n);
}

std::string ClusterReducer::nearest(const RealBall& scaled) const {
  const double v = scaled.mid_double();
  const double c = c_.get_d();
  if (v > 2 * c) return "inf";
  if (v < -2 * c) return "-inf";
  static const char* const kLabels[] = {"0", "c", "-c", "c/2", "-c/2"};
  const double points[] = {0.0, c, -c, c / 2, -c / 2};
  int best = 0;
  for (int i = 1; i < 5; ++i) {
    if (std::fabs(v - points[i]) < std::fabs(v - points[best])) best = i;
  }
  return kLabels[best];
}

void scaled_deviations(const TargetNumber& target, unsigned k, std::uint64_t n_max, const ScaledSink& sink,
                       GreedyOptions options) {
  if (k > 8) throw DomainError("scaled_deviations: k must be at most 8");
  if (options.horizon == 0) options.horizon = n_max;
  GreedyState state(target, options);
  while (state.n() < n_max) {
    state.step();
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), state.n(), k + 1);
    RealBall scaled = state.deviation();
    scaled *= RealBall::from_integer(power, state.precision());
    sink(state.n(), scaled);
  }
}

std::vector<std::uint64_t> nh_sequence(const TargetNumber& target, unsigned h_max, std::uint64_t n_budget,
                                       GreedyOptions options) {
  if (h_max < 1 || h_max > 30) throw DomainError("nh_sequence: h_max must lie in 1..30");
  if (options.horizon == 0) options.horizon = std::min<std::uint64_t>(n_budget, 10'000'000);
  GreedyState state(target, options);
  std::vector<std::uint64_t> found(h_max + 1, 0);
  std::vector<double> scale(h_max + 1);
  for (unsigned h = 1; h <= h_max; ++h) scale[h] = kernel_constant(h - 1).get_d();
  unsigned remaining = h_max;
  // The state sits at t = n - 1 while candidate n is tested.
  for (std::uint64_t n = 2;; ++n) {
    while (state.n() < n - 1) state.step();
    bool have_error = false;
    RealBall error(64);
    for (unsigned h = 1; h <= h_max; ++h) {
      if (found[h] != 0 || n < (std::uint64_t{1} << h) * h) continue;
      if (!have_error) {
        error = state.deviation().abs();
        have_error = true;
      }
      // Upper bound c_{h-1} / n^h for g_{h-1}(n) screens out most n cheaply.
      const double upper = scale[h] * std::pow(static_cast<double>(n), -static_cast<double>(h));
      if (std::isfinite(upper) && upper > 0 && error.mid_double() - error.rad_double() > upper * (1 + 1e-6)) {
        continue;
      }
      for (;;) {
        const RealBall kernel = g(h - 1, RealBall::from_integer(Integer(n), state.precision()));
        const int c = compare(kernel, error);
        if (c > 0) {
          found[h] = n;
          --remaining;
          break;
        }
        if (c < 0) break;
        state.refine();
        error = state.deviation().abs();
      }
    }
    if (remaining == 0) break;
    if (n > n_budget) {
      std::string have;
      for (unsigned h = 1; h <= h_max && found[h] != 0; ++h) have += " n_" + std::to_string(h) + "=" + std::to_string(found[h]);
      throw BudgetError("nh_sequence: budget of " + std::to_string(n_budget) + " steps exhausted;" + have);
    }
  }
  return {found.begin() + 1, found.end()};
}

void exponent_series(const TargetNumber& target, std::uint64_t n_max,
                     const std::function<void(const ExponentRow&)>& sink, GreedyOptions options) {
  if (options.horizon == 0) options.horizon = n_max;
  GreedyState state(target, options);
  while (state.n() < n_max) {
    state.step();
    if (state.n() < 2) continue;
    RealBall error = state.deviation().abs();
    const double exponent = -log_abs_mid(error) / std::log(static_cast<double>(state.n()));
    sink({state.n(), exponent, std::move(error)});
  }
}

}  // namespace tmh
