#pragma once

// Brute-force reference implementations for cross-checking the solver. They
// work from the defining equations directly and share no code with the
// normalization path.

#include <cstddef>
#include <optional>
#include <vector>

#include "tropsolve/matrix.hpp"

namespace tropsolve::oracle {

/// x_j = min over rows with a_ij finite of (b_i - a_ij). nullopt marks an
/// all -inf column (no cap). Makes no claim that the result solves AX = b.
std::vector<std::optional<Scalar>> principal_solution(const Matrix& a, const Vector& b);

/// Per-column candidate values {b_i - a_ij : a_ij finite} ∪ {-inf}. Any
/// solution is dominated by the principal one, whose entries lie in this grid.
std::vector<std::vector<Scalar>> candidate_grid(const Matrix& a, const Vector& b);

inline constexpr std::size_t kMaxExhaustiveDim = 4;

/// True iff some x drawn from `grid` satisfies Ax = b. Refuses systems larger
/// than kMaxExhaustiveDim in either dimension.
bool exhaustive_solvable(const Matrix& a, const Vector& b,
                         const std::vector<std::vector<Scalar>>& grid);
bool exhaustive_solvable(const Matrix& a, const Vector& b);

}  // namespace tropsolve::oracle
