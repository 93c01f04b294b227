#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tmh {

/// +1 or -1.
using Sign = std::int8_t;

/// (-1)^{popcount(n)}.
inline Sign epsilon(std::uint64_t n) { return (__builtin_popcountll(n) & 1) ? Sign{-1} : Sign{1}; }

/// epsilon(n mod 2^k) with the least nonnegative residue. Requires k <= 62.
Sign f_periodic(unsigned k, std::int64_t n);

/// (epsilon(0), ..., epsilon(2^k - 1)). Throws ResourceError for k > 30.
std::vector<Sign> block(unsigned k);

struct BlockEntry {
  Sign kappa;
  unsigned k;

  friend bool operator==(const BlockEntry&, const BlockEntry&) = default;
};

struct BlockDecomposition {
  std::vector<BlockEntry> entries;
  /// Number of leading signs covered by the entries.
  std::size_t consumed_len = 0;
};

/// Left-to-right parse of a sign sequence into signed blocks kappa * B_k with
/// non-decreasing k. A positive block takes the largest admissible k, a
/// negative block the smallest; this keeps negative blocks short so that an
/// eventually periodic tail shows up as repeated +B_k. Parsing stops at the
/// first position where no admissible block fits.
BlockDecomposition parse_blocks(std::span<const Sign> signs);

/// Concatenation of kappa * B_k over the entries.
std::vector<Sign> expand(const BlockDecomposition& decomposition);

}  // namespace tmh
