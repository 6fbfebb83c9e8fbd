#include "tropsolve/freedom.hpp"

#include <algorithm>
#include <cstdint>

#include "tropsolve/errors.hpp"

namespace tropsolve {

namespace {

void check_coverage(const RowCoverage& coverage, std::size_t n) {
  if (coverage.rows.size() != coverage.columns.size())
    throw DimensionError("row coverage: rows and columns differ in length");
  for (const auto& cols : coverage.columns) {
    if (cols.empty()) throw PreconditionError("system unsolvable: a row has no column minimum");
    for (auto c : cols)
      if (c >= n) throw DimensionError("row coverage references column out of range");
  }
}

bool covers(const std::vector<std::size_t>& row_cols, std::size_t c) {
  return std::find(row_cols.begin(), row_cols.end(), c) != row_cols.end();
}

}  // namespace

DofReport degrees_of_freedom(const RowCoverage& coverage, std::size_t n) {
  check_coverage(coverage, n);
  const std::size_t rows = coverage.rows.size();
  std::vector<bool> alive(rows, true);
  std::vector<bool> leading(n, false);
  DofReport report;

  auto take = [&](std::size_t c, DofRule rule) {
    leading[c] = true;
    report.leading_cols.push_back(c);
    DofStep step{rule, c, {}};
    for (std::size_t t = 0; t < rows; ++t) {
      if (alive[t] && covers(coverage.columns[t], c)) {
        alive[t] = false;
        step.removed_rows.push_back(coverage.rows[t]);
      }
    }
    report.trace.push_back(std::move(step));
  };

  // Steps 1-2: singleton rows fix their column.
  std::vector<std::size_t> singletons;
  for (std::size_t t = 0; t < rows; ++t) {
    if (coverage.columns[t].size() != 1) continue;
    std::size_t c = coverage.columns[t].front();
    if (std::find(singletons.begin(), singletons.end(), c) == singletons.end())
      singletons.push_back(c);
  }
  for (auto c : singletons) take(c, DofRule::singleton);

  // Steps 3-4: most frequent minimum among the remaining rows.
  while (std::find(alive.begin(), alive.end(), true) != alive.end()) {
    std::vector<std::size_t> freq(n, 0);
    for (std::size_t t = 0; t < rows; ++t)
      if (alive[t])
        for (auto c : coverage.columns[t]) ++freq[c];
    auto best = std::max_element(freq.begin(), freq.end());  // first max = lowest index
    take(static_cast<std::size_t>(best - freq.begin()), DofRule::greedy);
  }

  for (std::size_t c = 0; c < n; ++c)
    if (!leading[c]) report.free_cols.push_back(c);
  report.d_f = n - report.leading_cols.size();
  return report;
}

MinimalCover minimal_leading_oracle(const RowCoverage& coverage, std::size_t n) {
  if (n > kMaxOracleColumns)
    throw PreconditionError("minimal_leading_oracle: " + std::to_string(n) +
                            " columns exceeds the enumeration bound of " +
                            std::to_string(kMaxOracleColumns));
  check_coverage(coverage, n);

  std::vector<std::uint32_t> row_masks;
  row_masks.reserve(coverage.columns.size());
  for (const auto& cols : coverage.columns) {
    std::uint32_t mask = 0;
    for (auto c : cols) mask |= std::uint32_t{1} << c;
    row_masks.push_back(mask);
  }

  // Subsets of each size in increasing order; the first hit is minimal.
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::uint32_t mask = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (pick[c]) mask |= std::uint32_t{1} << c;
      bool ok = std::all_of(row_masks.begin(), row_masks.end(),
                            [&](std::uint32_t r) { return (r & mask) != 0; });
      if (ok) {
        MinimalCover out{k, {}};
        for (std::size_t c = 0; c < n; ++c)
          if (pick[c]) out.witness.push_back(c);
        return out;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw PreconditionError("minimal_leading_oracle: no cover exists");
}

}  // namespace tropsolve
