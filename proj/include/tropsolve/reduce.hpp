#pragma once

// Row-column reduction of AX = b.
//
// Dependent columns are folded into the independent ones (A_j = max_i(A_ci +
// eta_ij)) and dependent rows are dropped (A_ri = max_j(A_rj + xi_ij)),
// leaving ĀY = b̄ over the independent rows and columns. The dropped rows
// impose b_i = max_j(b_rj + xi_ij); the full system is solvable iff those
// checks hold and the reduced system is solvable.

#include <cstddef>
#include <vector>

#include "tropsolve/matrix.hpp"

namespace tropsolve {

struct RowCheck {
  std::size_t row;
  Scalar implied;  // max_j(b_rj + xi_ij)
  bool holds;
};

struct ReducedSystem {
  std::vector<std::size_t> indep_cols;  // k entries, ascending
  std::vector<std::size_t> indep_rows;  // h entries, ascending
  std::vector<std::size_t> dep_cols;
  std::vector<std::size_t> dep_rows;
  Matrix a_bar;  // h x k
  Vector b_bar;
  /// k x |dep_cols|: column t holds the coefficients of dep_cols[t].
  Matrix eta;
  /// |dep_rows| x h: row t holds the coefficients of dep_rows[t].
  Matrix xi;
  std::vector<RowCheck> row_consistency;

  bool consistent() const;
};

/// Requires a regular b.
ReducedSystem reduce_system(const Matrix& a, const Vector& b);

/// Maximal expansion of a reduced solution to the full variable set:
/// x_ci = y_i and x_j = min_i(y_i - eta_ij) for dependent j. Columns whose
/// coefficients are all -inf (all -inf columns) come back as -inf.
/// Throws PreconditionError if y does not solve ĀY = b̄.
Vector expand_solution(const Vector& reduced_y, const ReducedSystem& sys);

struct ReductionDof {
  std::size_t k = 0;           // column rank of A
  std::size_t p = 0;           // leading variables of the reduced system
  std::size_t reduced_dof = 0; // k - p
  std::size_t direct_dof = 0;  // leading-variable method on the full system
};

/// Throws PreconditionError when AX = b has no solution.
ReductionDof dof_via_reduction(const Matrix& a, const Vector& b);

}  // namespace tropsolve
