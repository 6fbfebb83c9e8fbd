#include "tropsolve/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "tropsolve/errors.hpp"

namespace tropsolve {

std::vector<std::size_t> RowCoverage::uncovered() const {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < rows.size(); ++t)
    if (columns[t].empty()) out.push_back(rows[t]);
  return out;
}

bool Solvable::dominates(const Vector& x) const {
  if (x.size() != x_star.size()) throw DimensionError("dominates: length mismatch");
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (std::binary_search(unbounded.begin(), unbounded.end(), j)) continue;
    if (x[j] > x_star[j]) return false;
  }
  return true;
}

const RowCoverage& SolveOutcome::coverage() const {
  return solvable() ? solution().coverage : failure().coverage;
}

Preprocessed preprocess(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw DimensionError("b has " + std::to_string(b.size()) + " entries, A has " +
                         std::to_string(a.rows()) + " rows");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  std::vector<bool> forced(n, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].is_finite()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j).is_finite()) forced[j] = true;
  }

  Preprocessed p;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i].is_finite()) p.kept_rows.push_back(i);

  // Rows with b_i = -inf are all dropped in one pass, so sub_b is regular and
  // the only remaining closure step is setting aside empty columns.
  for (std::size_t j = 0; j < n; ++j) {
    if (forced[j]) {
      p.forced_bottom.push_back(j);
      continue;
    }
    bool any = std::any_of(p.kept_rows.begin(), p.kept_rows.end(),
                           [&](std::size_t i) { return a(i, j).is_finite(); });
    (any ? p.kept_cols : p.unbounded).push_back(j);
  }

  p.sub_a = select(a, p.kept_rows, p.kept_cols);
  p.sub_b = select(b, p.kept_rows);
  return p;
}

SolveOutcome solve(const Matrix& a, const Vector& b) {
  SolveOutcome out{Unsolvable{}, preprocess(a, b), std::nullopt};
  const Preprocessed& p = out.pre;
  const std::size_t n = a.cols();

  RowCoverage coverage;
  coverage.rows = p.kept_rows;
  coverage.columns.resize(p.kept_rows.size());

  Vector x_star(n);
  Vector y_star(n);

  if (!p.kept_rows.empty() && !p.kept_cols.empty()) {
    out.normalization = normalize(p.sub_a, p.sub_b);
    const NormalizationResult& nr = *out.normalization;
    ColumnMinima minima = column_minima(nr.q);
    for (std::size_t jj = 0; jj < p.kept_cols.size(); ++jj) {
      const std::size_t j = p.kept_cols[jj];
      for (std::size_t ii : minima.argmin[jj]) coverage.columns[ii].push_back(j);
      y_star[j] = Scalar(minima.y_star[jj]);
      x_star[j] = Scalar(Rational(minima.y_star[jj] - nr.col_means[jj] + nr.b_mean));
    }
  }

  auto witnesses = coverage.uncovered();
  if (!witnesses.empty()) {
    out.result = Unsolvable{std::move(witnesses), std::move(coverage)};
    return out;
  }

  if (!verify(a, x_star, b))
    throw std::logic_error("solve: covered system failed verification");

  out.result = Solvable{std::move(x_star), std::move(y_star), std::move(coverage),
                        p.forced_bottom, p.unbounded};
  return out;
}

bool verify(const Matrix& a, const Vector& x, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("verify: b length differs from A rows");
  return mat_vec(a, x) == b;
}

std::optional<std::vector<Rational>> check_equivalence(const Matrix& a, const Matrix& a2) {
  if (a.rows() != a2.rows() || a.cols() != a2.cols())
    throw DimensionError("check_equivalence: shape mismatch");
  std::vector<Rational> alphas;
  alphas.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::optional<Rational> alpha;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const Scalar& u = a(i, j);
      const Scalar& v = a2(i, j);
      if (u.is_bottom() != v.is_bottom()) return std::nullopt;
      if (u.is_bottom()) continue;
      Rational d = v.value() - u.value();
      if (!alpha)
        alpha = d;
      else if (*alpha != d)
        return std::nullopt;
    }
    alphas.push_back(alpha.value_or(Rational(0)));  // all -inf: any shift works
  }
  return alphas;
}

Vector map_equivalent_solution(const Vector& x, const std::vector<Rational>& alphas,
                               const Rational& beta) {
  if (x.size() != alphas.size())
    throw DimensionError("map_equivalent_solution: length mismatch");
  Vector out;
  out.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j].is_bottom())
      out.push_back(Scalar::bottom());
    else
      out.emplace_back(Rational(x[j].value() + beta - alphas[j]));
  }
  return out;
}

}  // namespace tropsolve
