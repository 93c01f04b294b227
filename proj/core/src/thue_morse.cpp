#include "tmh/thue_morse.hpp"

#include <string>

#include "tmh/error.hpp"

namespace tmh {

Sign f_periodic(unsigned k, std::int64_t n) {
  const std::int64_t period = std::int64_t{1} << k;
  std::int64_t r = n % period;
  if (r < 0) r += period;
  return epsilon(static_cast<std::uint64_t>(r));
}

std::vector<Sign> block(unsigned k) {
  if (k > 30) throw ResourceError("block: k = " + std::to_string(k) + " exceeds 30");
  std::vector<Sign> out(std::size_t{1} << k);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = epsilon(i);
  return out;
}

BlockDecomposition parse_blocks(std::span<const Sign> signs) {
  BlockDecomposition result;
  std::size_t pos = 0;
  unsigned floor_k = 0;
  while (pos < signs.size()) {
    const Sign kappa = signs[pos] > 0 ? Sign{1} : Sign{-1};
    const std::size_t remaining = signs.size() - pos;
    const std::size_t min_len = std::size_t{1} << floor_k;
    if (remaining < min_len) break;
    unsigned k = floor_k;
    if (kappa > 0) {
      // Length of agreement with +B_infinity.
      std::size_t run = 0;
      while (run < remaining && signs[pos + run] == epsilon(run)) ++run;
      if (run < min_len) break;
      while ((std::size_t{2} << k) <= run) ++k;
    } else {
      for (std::size_t i = 0; i < min_len; ++i) {
        if (signs[pos + i] != -epsilon(i)) return result;
      }
    }
    result.entries.push_back({kappa, k});
    pos += std::size_t{1} << k;
    result.consumed_len = pos;
    floor_k = k;
  }
  return result;
}

std::vector<Sign> expand(const BlockDecomposition& decomposition) {
  std::vector<Sign> out;
  out.reserve(decomposition.consumed_len);
  for (const auto& [kappa, k] : decomposition.entries) {
    const std::size_t len = std::size_t{1} << k;
    for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<Sign>(kappa * epsilon(i)));
  }
  return out;
}

}  // namespace tmh
