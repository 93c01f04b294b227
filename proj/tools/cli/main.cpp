#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "tmh/error.hpp"

namespace {

using tmh::cli::Format;
using tmh::cli::RunConfig;

constexpr int kUsageExit = 2;
constexpr int kBudgetExit = 3;

const char* const kTargetHelp = "Target: p/q, d.ddd, u:k:m[+p/q], tau0[+p/q] or sqrt:c1:r1[,c2:r2...][+p/q]";

void add_target(CLI::App* cmd, RunConfig& config, bool required = true) {
  auto* opt = cmd->add_option("--target,-t", config.targets, kTargetHelp);
  if (required) opt->required();
}

void add_n_max(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--n-max,-n", config.n_max, "Number of greedy steps")->check(CLI::PositiveNumber);
}

void add_n_min(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--n-min", config.n_min, "First step written to the output");
}

void add_precision(CLI::App* cmd, RunConfig& config, const std::string& help) {
  cmd->add_option("--precision,-p", config.precision_bits, help)->check(CLI::Range(64L, 1L << 30));
}

void add_output(CLI::App* cmd, RunConfig& config, bool json_only = false) {
  cmd->add_option("--output,-o", config.output, "Output file (default: stdout)");
  if (json_only) return;
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  cmd->add_option("--format,-f", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy signed harmonic sums, Thue-Morse structure and exceptional targets"};
  app.require_subcommand(1);
  RunConfig config;

  auto* greedy = app.add_subcommand("greedy", "Stream the greedy signs and deviations sigma_n - tau");
  add_target(greedy, config);
  add_n_max(greedy, config);
  add_n_min(greedy, config);
  add_precision(greedy, config, "Initial working precision in bits");
  add_output(greedy, config);

  auto* records = app.add_subcommand("records", "Record indices of |sigma_m - tau| and log|err|/(log m)^2");
  add_target(records, config);
  add_n_max(records, config);
  add_precision(records, config, "Initial working precision in bits");
  add_output(records, config);

  auto* exponent = app.add_subcommand("exponent", "Approximation exponent -log|sigma_n - tau| / log n");
  add_target(exponent, config);
  add_n_max(exponent, config);
  add_n_min(exponent, config);
  add_precision(exponent, config, "Initial working precision in bits");
  add_output(exponent, config);

  auto* limits = app.add_subcommand("limits", "Scaled deviations (sigma_n - tau) n^(k+1) and nearest limit point");
  add_target(limits, config);
  add_n_max(limits, config);
  add_n_min(limits, config);
  limits->add_option("--k,-k", config.k, "Kernel order")->check(CLI::Range(0u, 8u));
  add_precision(limits, config, "Initial working precision in bits");
  add_output(limits, config);

  auto* classify = app.add_subcommand("classify", "Decide membership in the periodic-tail sets X_1..X_kmax");
  add_target(classify, config);
  classify->add_option("--k-max", config.k_max, "Highest level probed")->check(CLI::Range(1u, 16u));
  classify->add_option("--step-budget", config.step_budget, "Total greedy steps allowed")->check(CLI::PositiveNumber);
  classify->add_option("--verify-periods", config.verify_periods, "Periods checked after a confirmation");
  add_precision(classify, config, "Initial gap precision in bits");
  add_output(classify, config, true);

  auto* uconst = app.add_subcommand("uconst", "Closed-form enclosures of U_{k,m}");
  uconst->add_option("--k,-k", config.k, "Period exponent")->required()->check(CLI::Range(1u, 16u));
  uconst->add_option("--m,-m", config.m, "Phase (default: every m < 2^k)");
  add_precision(uconst, config, "Working precision in bits (default 128)");
  add_output(uconst, config);

  auto* tau0 = app.add_subcommand("tau0", "Certified decimal digits of the Thue-Morse constant");
  tau0->add_option("--digits,-d", config.digits, "Number of decimals")->check(CLI::Range(1, 100));
  tau0->add_option("--output,-o", config.output, "Output file (default: stdout)");

  auto* fabius = app.add_subcommand("fabius", "Scaled weight profile (n / 2^k, F'_k)");
  fabius->add_option("--k,-k", config.k, "Order")->required()->check(CLI::Range(1u, 20u));
  add_output(fabius, config);

  auto* blocks = app.add_subcommand("blocks", "Parse a sign prefix into signed Thue-Morse blocks");
  blocks->add_option("--signs,-s", config.signs, "Signs as a string of + and -");
  add_target(blocks, config, false);
  add_n_max(blocks, config);
  add_output(blocks, config);

  auto* adversarial = app.add_subcommand("adversarial", "Build a target with greedy errors below a bound");
  adversarial->add_option("--bound,-b", config.bound, "geom:B for B^-n or poly:E for 1/(n^E + 1)");
  adversarial->add_option("--i-max", config.i_max, "Number of witnesses")->check(CLI::Range(1u, 8u));
  adversarial->add_option("--step-budget", config.search_budget, "Steps allowed per witness search")
      ->check(CLI::PositiveNumber);
  add_output(adversarial, config);

  auto* exact_hit = app.add_subcommand("exact-hit", "The step N with sigma_N = tau, if any");
  add_target(exact_hit, config);
  add_output(exact_hit, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (config.subcommand == "classify") config.format = Format::Json;

  try {
    std::unique_ptr<std::ofstream> file;
    if (!config.output.empty()) {
      file = std::make_unique<std::ofstream>(config.output);
      if (!*file) throw tmh::cli::UsageError("cannot open " + config.output);
    }
    return tmh::cli::run_command(config, file ? *file : std::cout);
  } catch (const tmh::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const tmh::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const tmh::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const tmh::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudgetExit;
  } catch (const tmh::PrecisionError& e) {
    std::cerr << "precision ceiling reached: " << e.what() << '\n';
    return kBudgetExit;
  } catch (const tmh::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kBudgetExit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
