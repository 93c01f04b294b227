#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include <json.hpp>

#include "tmh/adversarial.hpp"
#include "tmh/classifier.hpp"
#include "tmh/constants.hpp"
#include "tmh/diagnostics.hpp"
#include "tmh/error.hpp"
#include "tmh/greedy.hpp"
#include "tmh/target.hpp"
#include "tmh/thue_morse.hpp"
#include "tmh/weights.hpp"

namespace tmh::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kDefaultCeiling = 1L << 20;
constexpr int kGapDigits = 30;

TargetNumber single_target(const RunConfig& config) {
  if (config.targets.size() != 1) {
    throw UsageError(config.subcommand + " takes exactly one --target");
  }
  return parse_target(config.targets.front());
}

GreedyOptions greedy_options(const RunConfig& config) {
  GreedyOptions options;
  options.max_precision = precision_ceiling();
  options.horizon = config.n_max;
  if (config.precision_bits > 0) {
    if (config.precision_bits > options.max_precision) {
      throw PrecisionError("--precision exceeds the ceiling of " + std::to_string(options.max_precision) + " bits");
    }
    options.initial_precision = config.precision_bits;
  }
  return options;
}

int digits_for(long bits) { return std::max(1, static_cast<int>(static_cast<double>(bits) * 0.30103)); }

int cmd_greedy(const RunConfig& config, std::ostream& out) {
  const TargetNumber target = single_target(config);
  const GreedyOptions options = greedy_options(config);
  TableWriter table(out, config.format, {"n", "sign", "dev_mid", "dev_rad"});
  const Observer write = [&](const StepEvent& e) {
    if (e.n < config.n_min) return;
    const RealBall dev = e.state.deviation();
    table.row({e.n, static_cast<std::int64_t>(e.sign), dev.mid_string(), dev.rad_string()});
  };
  run(target, config.n_max, {write}, options);
  table.finish();
  return 0;
}

int cmd_records(const RunConfig& config, std::ostream& out) {
  const std::vector<Record> records = record_tracker(single_target(config), config.n_max, greedy_options(config));
  TableWriter table(out, config.format, {"j", "m_j", "log_ratio", "abs_err_mid", "abs_err_rad"});
  std::uint64_t j = 0;
  for (const Record& r : records) {
    // The ratio is 0/0 at m = 1.
    const double ratio = r.index >= 2 ? record_log_ratio(r) : std::nan("");
    table.row({++j, r.index, ratio, r.abs_error.mid_string(), r.abs_error.rad_string()});
  }
  table.finish();
  return 0;
}

int cmd_exponent(const RunConfig& config, std::ostream& out) {
  const TargetNumber target = single_target(config);
  const GreedyOptions options = greedy_options(config);
  TableWriter table(out, config.format, {"n", "exponent", "abs_err_mid", "abs_err_rad"});
  exponent_series(
      target, config.n_max,
      [&](const ExponentRow& row) {
        if (row.n < config.n_min) return;
        table.row({row.n, row.exponent, row.abs_error.mid_string(), row.abs_error.rad_string()});
      },
      options);
  table.finish();
  return 0;
}

int cmd_limits(const RunConfig& config, std::ostream& out) {
  const TargetNumber target = single_target(config);
  const GreedyOptions options = greedy_options(config);
  const ClusterReducer reducer(config.k);
  TableWriter table(out, config.format, {"n", "scaled_mid", "scaled_rad", "nearest_cluster"});
  scaled_deviations(
      target, config.k, config.n_max,
      [&](std::uint64_t n, const RealBall& v) {
        if (n < config.n_min) return;
        table.row({n, v.mid_string(), v.rad_string(), reducer.nearest(v)});
      },
      options);
  table.finish();
  return 0;
}

Json optional_number(bool present, std::uint64_t value) { return present ? Json(value) : Json(nullptr); }

Json step_json(const ClassificationStep& s) {
  Json j = Json::object();
  j["h"] = s.h;
  j["N_h"] = s.block_start;
  j["m_h"] = s.phase;
  j["correction"] = s.correction.get_str();
  j["gap_midpoint"] = s.gap.mid_string(kGapDigits);
  j["gap_radius"] = s.gap.rad_string();
  j["gap_precision"] = s.gap_precision;
  j["start_bound"] = s.start_bound ? Json(*s.start_bound) : Json(nullptr);
  j["decision"] = to_string(s.decision);
  return j;
}

Json classification_json(const TargetNumber& target, const std::string& verdict, unsigned k,
                         const ClassificationResult* result, const std::vector<ClassificationStep>& steps) {
  const bool in_xk = result && result->verdict == Verdict::InXk;
  Json j = Json::object();
  j["target"] = target.describe();
  j["verdict"] = verdict;
  j["k"] = k;
  j["m"] = optional_number(in_xk, in_xk ? result->phase : 0);
  j["N"] = optional_number(in_xk, in_xk ? result->onset : 0);
  j["verified_through"] = optional_number(in_xk, in_xk ? result->verified_through : 0);
  const bool has_gap = !steps.empty();
  const RealBall& gap = has_gap ? (result ? result->gap : steps.back().gap) : RealBall();
  j["gap_midpoint"] = has_gap ? Json(gap.mid_string(kGapDigits)) : Json(nullptr);
  j["gap_radius"] = has_gap ? Json(gap.rad_string()) : Json(nullptr);
  j["greedy_steps"] = result ? result->greedy_steps : 0;
  j["steps"] = Json::array();
  for (const ClassificationStep& s : steps) j["steps"].push_back(step_json(s));
  return j;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  if (config.targets.empty()) throw UsageError("classify needs at least one --target");
  if (config.format != Format::Json) throw UsageError("classify only writes json");
  std::vector<TargetNumber> targets;
  for (const std::string& text : config.targets) targets.push_back(parse_target(text));

  ClassifyOptions options;
  options.step_budget = config.step_budget;
  options.verify_periods = config.verify_periods;
  options.max_precision = precision_ceiling();
  if (config.precision_bits > 0) options.initial_gap_precision = config.precision_bits;
  if (options.initial_gap_precision > options.max_precision) {
    throw PrecisionError("--precision exceeds the ceiling of " + std::to_string(options.max_precision) + " bits");
  }

  Json documents = Json::array();
  int status = 0;
  for (const TargetNumber& t : targets) {
    try {
      const ClassificationResult r = classify(t, config.k_max, options);
      documents.push_back(classification_json(t, to_string(r.verdict), r.k, &r, r.steps));
    } catch (const ClassificationError& e) {
      const unsigned k = e.steps().empty() ? 0 : e.steps().back().h;
      documents.push_back(classification_json(t, "BudgetExhausted", k, nullptr, e.steps()));
      status = 3;
    }
  }
  out << (documents.size() == 1 ? documents.front() : documents).dump(2) << '\n';
  return status;
}

int cmd_uconst(const RunConfig& config, std::ostream& out) {
  const long bits = config.precision_bits > 0 ? config.precision_bits : 128;
  if (bits > precision_ceiling()) throw PrecisionError("--precision exceeds the precision ceiling");
  if (config.k < 1 || config.k > 16) throw UsageError("uconst needs 1 <= k <= 16");
  const std::uint64_t period = std::uint64_t{1} << config.k;
  if (config.m && *config.m >= period) throw UsageError("uconst needs m < 2^k");
  TableWriter table(out, config.format, {"k", "m", "mid", "rad"});
  const std::uint64_t first = config.m.value_or(0);
  const std::uint64_t last = config.m ? *config.m + 1 : period;
  for (std::uint64_t m = first; m < last; ++m) {
    const RealBall u = u_closed_form(config.k, m, bits);
    table.row({static_cast<std::uint64_t>(config.k), m, u.mid_string(digits_for(bits)), u.rad_string()});
  }
  table.finish();
  return 0;
}

int cmd_tau0(const RunConfig& config, std::ostream& out) {
  const long ceiling = precision_ceiling();
  const double radius = std::pow(10.0, -config.digits);
  long bits = static_cast<long>(std::ceil(config.digits * 3.3219280948873622)) + 16;
  for (;;) {
    if (bits > ceiling) throw PrecisionError("tau0 digits need more than " + std::to_string(ceiling) + " bits");
    const RealBall t = tau0(bits);
    const auto text = t.certified_decimals(config.digits);
    if (text && t.radius_below(radius)) {
      out << *text << '\n';
      return 0;
    }
    bits += 32;
  }
}

int cmd_fabius(const RunConfig& config, std::ostream& out) {
  TableWriter table(out, config.format, {"x", "fprime"});
  for (const ProfilePoint& p : fabius_profile(config.k)) table.row({to_exact_decimal(p.x), to_exact_decimal(p.value)});
  table.finish();
  return 0;
}

std::vector<Sign> parse_signs(const std::string& text) {
  std::vector<Sign> signs;
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (c != ',' && c != ' ') {
      throw UsageError(std::string("unexpected character '") + c + "' in --signs");
    }
  }
  return signs;
}

int cmd_blocks(const RunConfig& config, std::ostream& out) {
  if (config.signs.empty() == config.targets.empty()) throw UsageError("blocks takes either --signs or --target");
  const std::vector<Sign> signs = config.targets.empty()
                                      ? parse_signs(config.signs)
                                      : run(single_target(config), config.n_max, {}, greedy_options(config)).signs;
  const BlockDecomposition d = parse_blocks(signs);
  TableWriter table(out, config.format, {"entry", "kappa", "k", "start", "length"});
  std::uint64_t start = 0;
  std::uint64_t index = 0;
  for (const BlockEntry& e : d.entries) {
    const std::uint64_t len = std::uint64_t{1} << e.k;
    table.row({++index, static_cast<std::int64_t>(e.kappa), static_cast<std::uint64_t>(e.k), start, len});
    start += len;
  }
  table.finish();
  std::cerr << "consumed " << d.consumed_len << " of " << signs.size() << " signs\n";
  return 0;
}

std::function<Rational(std::uint64_t)> parse_bound(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--bound must be geom:B or poly:E");
  const std::string kind = text.substr(0, colon);
  unsigned long value = 0;
  try {
    std::size_t used = 0;
    value = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw UsageError("bad --bound parameter");
  } catch (const std::logic_error&) {
    throw UsageError("bad --bound parameter in " + text);
  }
  if (kind == "geom" && value >= 2) {
    return [value](std::uint64_t n) {
      Integer d;
      mpz_ui_pow_ui(d.get_mpz_t(), value, n);
      return Rational(Integer(1), d);
    };
  }
  if (kind == "poly" && value >= 1) {
    return [value](std::uint64_t n) {
      Integer d;
      mpz_ui_pow_ui(d.get_mpz_t(), n, value);
      return Rational(Integer(1), d + 1);
    };
  }
  throw UsageError("--bound must be geom:B with B >= 2 or poly:E with E >= 1");
}

int cmd_adversarial(const RunConfig& config, std::ostream& out) {
  const auto f = parse_bound(config.bound);
  const AdversarialResult r = construct_adversarial(f, config.i_max, config.search_budget);
  const Rational tau = r.target.exact_value();
  std::uint64_t last = 0;
  for (const AdversarialWitness& w : r.witnesses) last = std::max(last, w.index);
  std::map<std::uint64_t, Rational> errors;
  Rational sigma = 0;
  for (std::uint64_t n = 1; n <= last; ++n) {
    sigma += Rational(sigma <= tau ? 1 : -1, static_cast<unsigned long>(n));
    errors[n] = abs(tau - sigma);
  }
  TableWriter table(out, config.format, {"target", "slack", "i", "m_i", "bound", "abs_error"});
  std::uint64_t i = 0;
  for (const AdversarialWitness& w : r.witnesses) {
    table.row({r.target.describe(), r.slack.get_d(), ++i, w.index, w.bound.get_d(), errors[w.index].get_d()});
  }
  table.finish();
  return 0;
}

int cmd_exact_hit(const RunConfig& config, std::ostream& out) {
  const TargetNumber t = single_target(config);
  if (!t.is_exact()) throw UsageError("exact-hit needs a rational or decimal target");
  const auto hit = exact_hit_search(t.exact_value());
  TableWriter table(out, config.format, {"target", "hit", "steps"});
  table.row({t.describe(), hit ? std::to_string(*hit) : std::string("none"),
             exact_hit_bound(t.exact_value().get_den())});
  table.finish();
  return 0;
}

}  // namespace

long precision_ceiling() {
  const char* env = std::getenv("TMH_MAX_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultCeiling;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 64) throw UsageError("TMH_MAX_PRECISION must be an integer >= 64");
  return value;
}

int run_command(const RunConfig& config, std::ostream& out) {
  static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands{
      {"greedy", cmd_greedy},   {"records", cmd_records}, {"exponent", cmd_exponent},
      {"limits", cmd_limits},   {"classify", cmd_classify}, {"uconst", cmd_uconst},
      {"tau0", cmd_tau0},       {"fabius", cmd_fabius},   {"blocks", cmd_blocks},
      {"adversarial", cmd_adversarial}, {"exact-hit", cmd_exact_hit},
  };
  const auto it = commands.find(config.subcommand);
  if (it == commands.end()) throw UsageError("unknown subcommand " + config.subcommand);
  return it->second(config, out);
}

}  // namespace tmh::cli
