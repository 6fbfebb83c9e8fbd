#pragma once

#include <cstddef>
#include <vector>

#include "tropsolve/solver.hpp"

namespace tropsolve {

enum class DofRule { singleton, greedy };

struct DofStep {
  DofRule rule;
  std::size_t column;
  std::vector<std::size_t> removed_rows;
};

struct DofReport {
  std::vector<std::size_t> leading_cols;  // in selection order
  std::vector<std::size_t> free_cols;     // ascending
  std::size_t d_f = 0;
  std::vector<DofStep> trace;
};

/// Picks leading variables from the row coverage of a solvable system.
///
/// First every column that is the only minimum of some row is taken (rows in
/// ascending order) and all rows it covers are removed. Then, while rows
/// remain, the column covering the most remaining rows is taken, ties going
/// to the lowest column index. Throws PreconditionError if some row is
/// uncovered, i.e. the system has no solution.
DofReport degrees_of_freedom(const RowCoverage& coverage, std::size_t n);

struct MinimalCover {
  std::size_t min_size = 0;
  std::vector<std::size_t> witness;
};

inline constexpr std::size_t kMaxOracleColumns = 20;

/// Smallest column set covering every row, by enumerating subsets in
/// increasing size. Refuses n > kMaxOracleColumns.
MinimalCover minimal_leading_oracle(const RowCoverage& coverage, std::size_t n);

}  // namespace tropsolve
