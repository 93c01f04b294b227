#include "tmh/adversarial.hpp"

#include <string>

#include "tmh/error.hpp"
#include "tmh/greedy.hpp"

namespace tmh {
namespace {

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Memoized clamp of f.
class ClampedBound {
 public:
  explicit ClampedBound(const std::function<Rational(std::uint64_t)>& f) : f_(f) {}

  const Rational& operator()(std::uint64_t n) {
    while (values_.size() < n) {
      const std::uint64_t next = values_.size() + 1;
      Rational v = f_(next);
      if (v <= 0) throw DomainError("construct_adversarial: f must be positive");
      const Rational cap = values_.empty() ? Rational(1, 2) : Rational(values_.back() / 5);
      if (v > cap) v = cap;
      values_.push_back(std::move(v));
    }
    return values_[n - 1];
  }

 private:
  const std::function<Rational(std::uint64_t)>& f_;
  std::vector<Rational> values_;
};

/// Exact greedy trajectory with running bounds of the prefix interval.
class ExactRun {
 public:
  explicit ExactRun(Rational target) : tau_(std::move(target)) {}

  void step() {
    const bool plus = sigma_ <= tau_;
    if (plus) {
      if (!has_lo_ || sigma_ > lo_) lo_ = sigma_, has_lo_ = true;
    } else {
      if (!has_hi_ || sigma_ < hi_) hi_ = sigma_, has_hi_ = true;
    }
    ++n_;
    sigma_ += Rational(plus ? 1L : -1L, static_cast<unsigned long>(n_));
  }

  [[nodiscard]] std::uint64_t n() const { return n_; }
  [[nodiscard]] const Rational& sigma() const { return sigma_; }
  [[nodiscard]] Rational error() const { return abs_rational(sigma_ - tau_); }
  [[nodiscard]] PrefixInterval interval() const { return {lo_, has_lo_, hi_, has_hi_}; }

 private:
  Rational tau_;
  Rational sigma_ = 0;
  std::uint64_t n_ = 0;
  Rational lo_, hi_;
  bool has_lo_ = false, has_hi_ = false;
};

/// A short decimal strictly inside (lo, hi), as close to `near` as the
/// shortest admissible digit count allows, avoiding exact hits.
Rational short_decimal(const Rational& lo, const Rational& hi, const Rational& near) {
  Integer scale = 1;
  for (int digits = 0; digits < 4000; ++digits, scale *= 10) {
    // Candidates round(near * scale) and its neighbours.
    const Rational scaled = near * Rational(scale);
    Integer base;
    mpz_fdiv_q(base.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    for (int delta : {0, 1, -1, 2, -2}) {
      Rational candidate(base + delta, scale);
      candidate.canonicalize();
      if (candidate > lo && candidate < hi && !exact_hit_search(candidate)) return candidate;
    }
  }
  throw ConsistencyError("construct_adversarial: no decimal found in a nonempty interval");
}

std::string decimal_string(const Rational& value) {
  std::string s = to_exact_decimal(value);
  if (s.find('.') == std::string::npos) s += ".0";
  return s;
}

}  // namespace

PrefixInterval prefix_interval(const Rational& target, std::uint64_t m) {
  ExactRun run(target);
  while (run.n() < m) run.step();
  return run.interval();
}

AdversarialResult construct_adversarial(const std::function<Rational(std::uint64_t)>& f, unsigned i_max,
                                        std::uint64_t step_budget) {
  if (i_max < 1) throw DomainError("construct_adversarial: i_max must be at least 1");
  ClampedBound bound(f);

  // tau_1 near 1, within f(1)/2 of sigma_1 = 1.
  const Rational f1 = bound(1);
  Rational tau = short_decimal(Rational(1) - f1 / 2, Rational(1) + f1 / 2, Rational(1) + f1 / 4);
  std::uint64_t m = 1;
  std::vector<AdversarialWitness> witnesses{{1, f1}};

  for (unsigned i = 1; i < i_max; ++i) {
    const Rational threshold = bound(m) / 8;
    ExactRun run(tau);
    Rational best;
    bool have_best = false;
    for (;;) {
      run.step();
      if (run.n() > step_budget) {
        throw BudgetError("construct_adversarial: no witness after m = " + std::to_string(m) + " within " +
                          std::to_string(step_budget) + " steps");
      }
      Rational err = run.error();
      const bool record = !have_best || err < best;
      if (record) {
        best = err;
        have_best = true;
      }
      if (run.n() > m && record && err < threshold) break;
    }
    const std::uint64_t q = run.n();
    // Advance one more sign so that the prefix interval covers sigma_1..sigma_q.
    ExactRun prefix(tau);
    while (prefix.n() < q) prefix.step();
    PrefixInterval in = prefix.interval();
    const Rational& sigma_q = prefix.sigma();
    const Rational half = bound(q) / 2;
    Rational lo = sigma_q - half, hi = sigma_q + half;
    // I_q is determined by comparisons at sigma_0..sigma_{q-1}; sigma_q, being a
    // record, lies inside it.
    if (in.has_lo && in.lo > lo) lo = in.lo;
    if (in.has_hi && in.hi < hi) hi = in.hi;
    tau = short_decimal(lo, hi, sigma_q);
    m = q;
    witnesses.push_back({q, bound(q)});
  }

  AdversarialResult result{TargetNumber::decimal(decimal_string(tau)), tau, std::move(witnesses), bound(m) / 2};
  return result;
}

}  // namespace tmh
