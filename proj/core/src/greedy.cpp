#include "tmh/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tmh/error.hpp"

namespace tmh {
namespace {

constexpr std::uint64_t kMinExactSteps = 512;
constexpr long kInitialTargetBits = 128;

double ln_integer(const Integer& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

long magnitude_bits(const RealBall& x) {
  const double m = std::fabs(x.mid_double()) + 1.0;
  return static_cast<long>(std::ceil(std::log2(m)));
}

}  // namespace

RealBall::Precision presized_precision(std::uint64_t horizon) {
  if (horizon < 2) return 64;
  const double ln = std::log(static_cast<double>(horizon));
  const double bits = std::ceil(ln * ln / std::log(4.0)) * 1.5 + 64.0;
  return std::max<RealBall::Precision>(64, static_cast<RealBall::Precision>(std::ceil(bits)));
}

std::uint64_t exact_hit_bound(const Integer& denominator) {
  if (denominator <= 1) return 1;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(3.0 * ln_integer(denominator))));
}

GreedyState::GreedyState(TargetNumber target, GreedyOptions options)
    : target_(std::move(target)),
      options_(options),
      precision_(options.initial_precision > 0 ? options.initial_precision : presized_precision(options.horizon)),
      sigma_ball_(64),
      tau_bits_(kInitialTargetBits),
      tau_ball_(64) {
  if (target_.is_exact()) {
    exact_mode_ = true;
    exact_tau_ = target_.exact_value();
    exact_horizon_ = std::max(kMinExactSteps, exact_hit_bound(exact_tau_.get_den()) + 1);
    exact_sigma_ = 0;
    return;
  }
  tau_bits_ = std::min<long>(precision_, kInitialTargetBits);
  tau_ball_ = target_.enclosure(tau_bits_);
  // Room for |tau| above the point and for n accumulated roundings.
  precision_ += magnitude_bits(tau_ball_);
  if (options_.horizon > 1) precision_ += static_cast<long>(std::log2(static_cast<double>(options_.horizon)));
  precision_ = std::min(precision_, options_.max_precision);
  sigma_ball_ = RealBall(precision_);
}

const Rational& GreedyState::exact_sigma() const {
  if (!exact_mode_) throw DomainError("exact_sigma: state is not in exact mode");
  return exact_sigma_;
}

Rational GreedyState::exact_deviation() const { return exact_sigma() - exact_tau_; }

RealBall GreedyState::sigma() const {
  if (exact_mode_) return RealBall::from_rational(exact_sigma_, precision_);
  return sigma_ball_;
}

RealBall GreedyState::deviation() const {
  if (exact_mode_) return RealBall::from_rational(exact_sigma_ - exact_tau_, precision_);
  return sigma_ball_ - tau_ball_;
}

int GreedyState::compare() {
  if (exact_mode_) return cmp(exact_sigma_, exact_tau_) < 0 ? -1 : (exact_sigma_ == exact_tau_ ? 0 : 1);
  for (;;) {
    const int s = tmh::compare(sigma_ball_, tau_ball_);
    if (s != 0) return s;
    refine();
  }
}

Sign GreedyState::step() {
  const Sign s = compare() <= 0 ? Sign{1} : Sign{-1};
  ++n_;
  signs_.push_back(s);
  if (exact_mode_) {
    exact_sigma_ += Rational(static_cast<long>(s), static_cast<unsigned long>(n_));
    if (!exact_hit_ && exact_sigma_ == exact_tau_) exact_hit_ = n_;
    if (n_ >= exact_horizon_) leave_exact_mode();
  } else {
    sigma_ball_.add_signed_reciprocal(s, n_);
  }
  return s;
}

void GreedyState::leave_exact_mode() {
  // Every exact hit lies at or before exact_horizon_, so ball comparisons
  // from here on terminate.
  if (target_.is_exact()) {
    const double m = std::fabs(exact_tau_.get_d()) + 1.0;
    precision_ += static_cast<long>(std::ceil(std::log2(m)));
    if (options_.horizon > 1) precision_ += static_cast<long>(std::log2(static_cast<double>(options_.horizon)));
    precision_ = std::min(precision_, options_.max_precision);
  }
  base_n_ = n_;
  base_sigma_ = exact_sigma_;
  sigma_ball_ = RealBall::from_rational(base_sigma_, precision_);
  tau_bits_ = precision_;
  tau_ball_ = target_.enclosure(tau_bits_);
  exact_mode_ = false;
  exact_sigma_ = 0;
}

RealBall GreedyState::sigma_at(std::uint64_t index) const {
  if (index > n_) throw DomainError("sigma_at: index beyond current step");
  RealBall s(precision_);
  std::uint64_t start = 0;
  if (!exact_mode_ && index >= base_n_) {
    s = RealBall::from_rational(base_sigma_, precision_);
    start = base_n_;
  }
  for (std::uint64_t m = start + 1; m <= index; ++m) s.add_signed_reciprocal(signs_[m - 1], m);
  return s;
}

void GreedyState::refine() {
  if (mpfr_cmp(tau_ball_.rad(), sigma_ball_.rad()) > 0) {
    refine_target();
  } else {
    refine_sigma();
  }
}

void GreedyState::refine_sigma() {
  if (exact_mode_) return;
  const RealBall::Precision next = precision_ * 2;
  if (next > options_.max_precision) {
    throw PrecisionError("sign comparison at n = " + std::to_string(n_) + " for " + target_.describe() +
                         " undecided at " + std::to_string(precision_) +
                         " bits; sigma_n may equal the target");
  }
  precision_ = next;
  sigma_ball_ = sigma_at(n_);
}

void GreedyState::refine_target() {
  if (exact_mode_) return;
  const long next = tau_bits_ * 2;
  if (next > options_.max_precision) {
    throw PrecisionError("target enclosure for " + target_.describe() + " needed beyond " +
                         std::to_string(tau_bits_) + " bits at n = " + std::to_string(n_));
  }
  tau_bits_ = next;
  tau_ball_ = target_.enclosure(tau_bits_);
}

RunSummary run(const TargetNumber& target, std::uint64_t n_max, const std::vector<Observer>& observers,
               GreedyOptions options) {
  if (n_max < 1) throw DomainError("run: n_max must be at least 1");
  if (options.horizon == 0) options.horizon = n_max;
  GreedyState state(target, options);
  for (std::uint64_t i = 0; i < n_max; ++i) {
    const Sign s = state.step();
    const StepEvent event{state.n(), s, state};
    for (const auto& observer : observers) observer(event);
  }
  RunSummary summary;
  summary.steps = state.n();
  summary.sigma = state.sigma();
  summary.deviation = state.deviation();
  summary.exact_hit = state.exact_hit();
  summary.precision = state.precision();
  summary.target_precision = state.target_precision();
  summary.signs = state.signs();
  return summary;
}

std::optional<std::uint64_t> exact_hit_search(const Rational& target) {
  Rational tau = target;
  tau.canonicalize();
  const std::uint64_t bound = exact_hit_bound(tau.get_den());
  Rational sigma = 0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    sigma += Rational(sigma <= tau ? 1L : -1L, static_cast<unsigned long>(n));
    if (sigma == tau) return n;
  }
  return std::nullopt;
}

}  // namespace tmh
