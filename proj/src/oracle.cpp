#include "tropsolve/oracle.hpp"

#include <algorithm>

#include "tropsolve/errors.hpp"

namespace tropsolve::oracle {

namespace {

Scalar residual(const Scalar& bi, const Scalar& aij) {
  if (bi.is_bottom()) return Scalar::bottom();
  return Scalar(Rational(bi.value() - aij.value()));
}

bool satisfies(const Matrix& a, const std::vector<Scalar>& x, const Vector& b) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar lhs;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_bottom() || x[j].is_bottom()) continue;
      Scalar term(Rational(a(i, j).value() + x[j].value()));
      if (lhs < term) lhs = term;
    }
    if (lhs != b[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::optional<Scalar>> principal_solution(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("principal_solution: shape mismatch");
  std::vector<std::optional<Scalar>> x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, j).is_bottom()) continue;
      Scalar r = residual(b[i], a(i, j));
      if (!x[j] || r < *x[j]) x[j] = r;
    }
  return x;
}

std::vector<std::vector<Scalar>> candidate_grid(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("candidate_grid: shape mismatch");
  std::vector<std::vector<Scalar>> grid(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto& g = grid[j];
    g.push_back(Scalar::bottom());
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j).is_finite()) g.push_back(residual(b[i], a(i, j)));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  return grid;
}

bool exhaustive_solvable(const Matrix& a, const Vector& b,
                         const std::vector<std::vector<Scalar>>& grid) {
  if (a.rows() > kMaxExhaustiveDim || a.cols() > kMaxExhaustiveDim)
    throw PreconditionError("exhaustive_solvable: system exceeds 4x4 bound");
  if (b.size() != a.rows() || grid.size() != a.cols())
    throw DimensionError("exhaustive_solvable: shape mismatch");
  for (const auto& g : grid)
    if (g.empty()) return false;

  const std::size_t n = a.cols();
  std::vector<std::size_t> pick(n, 0);
  std::vector<Scalar> x(n);
  while (true) {
    for (std::size_t j = 0; j < n; ++j) x[j] = grid[j][pick[j]];
    if (satisfies(a, x, b)) return true;
    std::size_t j = 0;
    while (j < n && ++pick[j] == grid[j].size()) pick[j++] = 0;
    if (j == n) return false;
  }
}

bool exhaustive_solvable(const Matrix& a, const Vector& b) {
  return exhaustive_solvable(a, b, candidate_grid(a, b));
}

}  // namespace tropsolve::oracle
