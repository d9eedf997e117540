#pragma once

// Exact rank over Q of sparse integer matrices by fraction-free column
// reduction.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace rees {

/// A sparse column: (row, value) pairs sorted by row, no zero values.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

struct ReductionResult {
  std::size_t rank = 0;
  /// Pivot row ("lowest" nonzero row) of every column that survived
  /// reduction; used to clear columns of the next boundary map down.
  std::vector<std::uint32_t> pivot_rows;
};

/// Rank over Q of the matrix with the given columns and `rows` rows.
/// Columns flagged in `skip` are known to reduce to zero and are ignored.
/// Runs in int64 with overflow detection and restarts with arbitrary
/// precision if any intermediate value would overflow.
ReductionResult reduce_rank(const std::vector<SparseColumn>& columns, std::size_t rows,
                            const std::vector<char>* skip = nullptr);

/// Reference dense implementation (Bareiss elimination, big integers); for
/// tests and tiny matrices.
std::size_t dense_rank(const std::vector<std::vector<std::int64_t>>& matrix);

}  // namespace rees
