#include "tropsolve/reduce.hpp"

#include <algorithm>
#include <optional>

#include "tropsolve/errors.hpp"
#include "tropsolve/freedom.hpp"
#include "tropsolve/rank.hpp"
#include "tropsolve/solver.hpp"

namespace tropsolve {

namespace {

/// Lays out the dependence coefficients of `report` against `indep`.
std::vector<Vector> coefficient_rows(const RankReport& report,
                                     const std::vector<std::size_t>& indep,
                                     std::vector<std::size_t>& dep_out) {
  std::vector<Vector> out;
  auto sorted = report.dependent;
  std::sort(sorted.begin(), sorted.end(),
            [](const Dependence& x, const Dependence& y) { return x.index < y.index; });
  for (const auto& d : sorted) {
    Vector coeffs(indep.size());  // -inf where the combination omits a column
    for (const auto& [c, eta] : d.combination) {
      auto it = std::lower_bound(indep.begin(), indep.end(), c);
      coeffs[static_cast<std::size_t>(it - indep.begin())] = eta;
    }
    dep_out.push_back(d.index);
    out.push_back(std::move(coeffs));
  }
  return out;
}

}  // namespace

bool ReducedSystem::consistent() const {
  return std::all_of(row_consistency.begin(), row_consistency.end(),
                     [](const RowCheck& r) { return r.holds; });
}

ReducedSystem reduce_system(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw DimensionError("reduce_system: b length differs from A rows");
  if (!is_regular(b)) throw PreconditionError("reduce_system: b must be regular");

  const RankReport cols = colrank(a);
  const RankReport rows = rowrank(a);

  ReducedSystem sys;
  sys.indep_cols = cols.independent;
  sys.indep_rows = rows.independent;

  auto eta_cols = coefficient_rows(cols, sys.indep_cols, sys.dep_cols);
  sys.eta = eta_cols.empty() ? Matrix(sys.indep_cols.size(), 0)
                             : Matrix::from_columns(eta_cols);
  auto xi_rows = coefficient_rows(rows, sys.indep_rows, sys.dep_rows);
  sys.xi = xi_rows.empty() ? Matrix(0, sys.indep_rows.size()) : Matrix::from_rows(xi_rows);

  sys.a_bar = select(a, sys.indep_rows, sys.indep_cols);
  sys.b_bar = select(b, sys.indep_rows);

  for (std::size_t t = 0; t < sys.dep_rows.size(); ++t) {
    Scalar implied;
    for (std::size_t j = 0; j < sys.indep_rows.size(); ++j)
      implied = trop_add(implied, trop_mul(sys.b_bar[j], sys.xi(t, j)));
    const std::size_t r = sys.dep_rows[t];
    sys.row_consistency.push_back({r, implied, implied == b[r]});
  }
  return sys;
}

Vector expand_solution(const Vector& reduced_y, const ReducedSystem& sys) {
  if (reduced_y.size() != sys.indep_cols.size())
    throw DimensionError("expand_solution: reduced solution has wrong length");
  if (!verify(sys.a_bar, reduced_y, sys.b_bar))
    throw PreconditionError("not a reduced solution");

  const std::size_t n = sys.indep_cols.size() + sys.dep_cols.size();
  Vector x(n);
  for (std::size_t i = 0; i < sys.indep_cols.size(); ++i) x[sys.indep_cols[i]] = reduced_y[i];
  for (std::size_t t = 0; t < sys.dep_cols.size(); ++t) {
    std::optional<Scalar> cap;
    for (std::size_t i = 0; i < sys.indep_cols.size(); ++i) {
      const Scalar& eta = sys.eta(i, t);
      if (eta.is_bottom()) continue;
      Scalar bound = reduced_y[i].is_bottom() ? Scalar::bottom()
                                              : classical_sub(reduced_y[i], eta);
      if (!cap || bound < *cap) cap = bound;
    }
    x[sys.dep_cols[t]] = cap.value_or(Scalar::bottom());
  }
  return x;
}

ReductionDof dof_via_reduction(const Matrix& a, const Vector& b) {
  SolveOutcome full = solve(a, b);
  if (!full.solvable()) throw PreconditionError("dof_via_reduction: system unsolvable");
  ReducedSystem sys = reduce_system(a, b);
  SolveOutcome reduced = solve(sys.a_bar, sys.b_bar);
  if (!reduced.solvable())
    throw std::logic_error("dof_via_reduction: reduced system of a solvable system is unsolvable");

  ReductionDof out;
  out.k = sys.indep_cols.size();
  out.p = degrees_of_freedom(reduced.coverage(), sys.a_bar.cols()).leading_cols.size();
  out.reduced_dof = out.k - out.p;
  out.direct_dof = degrees_of_freedom(full.coverage(), a.cols()).d_f;
  return out;
}

}  // namespace tropsolve
