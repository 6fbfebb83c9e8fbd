#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "tropsolve/matrix.hpp"
#include "tropsolve/normalize.hpp"

namespace tropsolve {

/// For each equation that takes part in the normalized system, the columns
/// whose column minimum lies in that row. Indices refer to the original A.
struct RowCoverage {
  std::vector<std::size_t> rows;
  std::vector<std::vector<std::size_t>> columns;  // parallel to `rows`

  std::vector<std::size_t> uncovered() const;
  bool all_covered() const { return uncovered().empty(); }
};

/// Result of removing equations with b_i = -inf.
///
/// Such a row forces x_j = -inf for every column with a finite entry in it;
/// those rows and columns leave the system. Columns that are entirely -inf on
/// the surviving rows constrain nothing and are set aside as unbounded.
struct Preprocessed {
  std::vector<std::size_t> kept_rows;
  std::vector<std::size_t> kept_cols;
  std::vector<std::size_t> forced_bottom;
  std::vector<std::size_t> unbounded;
  Matrix sub_a;
  Vector sub_b;
};

struct Solvable {
  /// Maximal solution. Entries listed in `unbounded` have no finite cap; they
  /// are stored as -inf because their column never contributes.
  Vector x_star;
  /// Normalized coordinates, aligned with x_star (-inf outside kept columns).
  Vector y_star;
  RowCoverage coverage;
  std::vector<std::size_t> forced_bottom;
  std::vector<std::size_t> unbounded;

  /// x <= X* on every column that has a cap.
  bool dominates(const Vector& x) const;
};

struct Unsolvable {
  std::vector<std::size_t> witness_rows;
  RowCoverage coverage;
};

struct SolveOutcome {
  std::variant<Solvable, Unsolvable> result;
  Preprocessed pre;
  /// Normalization of the preprocessed sub-system, when it is non-empty.
  std::optional<NormalizationResult> normalization;

  bool solvable() const { return std::holds_alternative<Solvable>(result); }
  const Solvable& solution() const { return std::get<Solvable>(result); }
  const Unsolvable& failure() const { return std::get<Unsolvable>(result); }
  const RowCoverage& coverage() const;
};

Preprocessed preprocess(const Matrix& a, const Vector& b);

/// Decides AX = b and returns the maximal solution when one exists.
SolveOutcome solve(const Matrix& a, const Vector& b);

/// A x == b, exactly.
bool verify(const Matrix& a, const Vector& x, const Vector& b);

/// Finite shifts α with A2_j = A_j + α_j for every column, if they exist.
std::optional<std::vector<Rational>> check_equivalence(const Matrix& a, const Matrix& a2);

/// Solution of the shifted system A'_j = A_j + α_j, b' = b + β:
/// x'_j = x_j + β - α_j.
Vector map_equivalent_solution(const Vector& x, const std::vector<Rational>& alphas,
                               const Rational& beta);

}  // namespace tropsolve
