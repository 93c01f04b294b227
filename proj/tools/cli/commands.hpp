#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "table.hpp"

namespace tmh::cli {

/// Bad flags or flag combinations detected after parsing; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> targets;
  std::uint64_t n_max = 10'000;
  std::uint64_t n_min = 1;
  unsigned k = 1;
  std::optional<std::uint64_t> m;
  long precision_bits = 0;  // 0 picks a per-command default
  std::string output;       // empty for stdout
  Format format = Format::Csv;

  unsigned k_max = 3;
  std::uint64_t step_budget = 50'000'000;
  std::uint64_t verify_periods = 64;
  int digits = 50;
  std::string signs;
  std::string bound = "geom:4";
  unsigned i_max = 3;
  std::uint64_t search_budget = 20'000;
};

/// The precision ceiling: TMH_MAX_PRECISION when set, else 2^20 bits.
long precision_ceiling();

int run_command(const RunConfig& config, std::ostream& out);

}  // namespace tmh::cli
