#include "tropsolve/rank.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "tropsolve/errors.hpp"
#include "tropsolve/solver.hpp"

namespace tropsolve {

namespace {

std::vector<std::size_t> resolve_order(std::size_t n, std::span<const std::size_t> scan_order) {
  std::vector<std::size_t> order(n);
  if (scan_order.empty()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
  }
  if (scan_order.size() != n)
    throw DimensionError("scan order must list every column exactly once");
  order.assign(scan_order.begin(), scan_order.end());
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < n; ++j)
    if (sorted[j] != j) throw PreconditionError("scan order is not a permutation");
  return order;
}

std::optional<Vector> solve_against(const Matrix& a, const std::vector<std::size_t>& cols,
                                    std::size_t target) {
  if (cols.empty()) return std::nullopt;
  std::vector<std::size_t> all_rows(a.rows());
  std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
  SolveOutcome out = solve(select(a, all_rows, cols), column(a, target));
  if (!out.solvable()) return std::nullopt;
  return out.solution().x_star;
}

}  // namespace

Vector combine(const Matrix& a, const std::vector<std::pair<std::size_t, Scalar>>& combination) {
  Vector out(a.rows());
  for (const auto& [c, eta] : combination)
    out = vec_add(out, scalar_mul(eta, column(a, c)));
  return out;
}

RankReport colrank(const Matrix& a, std::span<const std::size_t> scan_order) {
  const std::size_t n = a.cols();
  const std::vector<std::size_t> order = resolve_order(n, scan_order);
  RankReport report;

  std::vector<std::size_t> candidates;  // in layout order, non-degenerate
  for (auto j : order) {
    if (has_finite(column(a, j))) {
      candidates.push_back(j);
    } else {
      report.dependent.push_back({j, {}});
      report.trace.push_back({j, Verdict::dependent});
    }
  }

  std::deque<std::size_t> independent;  // most recent first
  std::vector<std::size_t> scan_dependent;
  for (std::size_t pos = candidates.size(); pos-- > 0;) {
    const std::size_t target = candidates[pos];
    std::vector<std::size_t> working(independent.begin(), independent.end());
    working.insert(working.end(), candidates.begin(),
                   candidates.begin() + static_cast<std::ptrdiff_t>(pos));
    if (solve_against(a, working, target)) {
      scan_dependent.push_back(target);
      report.trace.push_back({target, Verdict::dependent});
    } else {
      independent.push_front(target);
      report.trace.push_back({target, Verdict::independent});
    }
  }

  report.independent.assign(independent.begin(), independent.end());
  std::sort(report.independent.begin(), report.independent.end());
  report.rank = report.independent.size();

  for (auto j : scan_dependent) {
    auto coeffs = solve_against(a, report.independent, j);
    if (!coeffs)
      throw std::logic_error("colrank: dependent column outside the final span");
    Dependence dep{j, {}};
    for (std::size_t t = 0; t < report.independent.size(); ++t)
      dep.combination.emplace_back(report.independent[t], (*coeffs)[t]);
    report.dependent.push_back(std::move(dep));
  }
  return report;
}

RankReport rowrank(const Matrix& a, std::span<const std::size_t> scan_order) {
  return colrank(transpose(a), scan_order);
}

std::optional<std::vector<Scalar>> dependence_oracle(std::span<const Vector> cols,
                                                     const Vector& target) {
  const std::size_t m = target.size();
  std::vector<Scalar> lambda;
  lambda.reserve(cols.size());
  for (const auto& col : cols) {
    if (col.size() != m) throw DimensionError("dependence_oracle: length mismatch");
    std::optional<Scalar> best;  // nullopt = +inf so far
    for (std::size_t i = 0; i < m; ++i) {
      if (col[i].is_bottom()) continue;
      Scalar r = target[i].is_bottom() ? Scalar::bottom()
                                       : Scalar(Rational(target[i].value() - col[i].value()));
      if (!best || r < *best) best = r;
    }
    lambda.push_back(best.value_or(Scalar::bottom()));
  }

  Vector acc(m);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t i = 0; i < m; ++i)
      acc[i] = trop_add(acc[i], trop_mul(cols[c][i], lambda[c]));
  if (acc != target) return std::nullopt;
  return lambda;
}

}  // namespace tropsolve
