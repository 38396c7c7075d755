#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace birack {

// Sparse integer row vector: (column, coefficient) pairs sorted by column,
// no zero coefficients.
struct SparseRow {
  std::vector<std::pair<std::uint64_t, std::int64_t>> terms;

  bool empty() const { return terms.empty(); }
};

// Removes zeros, divides by the content gcd and makes the leading
// coefficient positive.  Terms must already be sorted by column.
void normalize_row(SparseRow& row);

// Rank by exact integer elimination: rows are combined by cross
// multiplication and content removal, so no fractions ever appear.
// Throws overflow if a coefficient leaves the 64-bit range.
int exact_rank(std::vector<SparseRow> rows);

// Rank of the same matrix over Z_p, p = 2^31 - 1.
int modular_rank(const std::vector<SparseRow>& rows);

// Runs both paths and throws rank_mismatch if they disagree.
int checked_rank(std::vector<SparseRow> rows);

inline constexpr std::uint64_t kRankPrime = 2147483647;  // 2^31 - 1

}  // namespace birack
