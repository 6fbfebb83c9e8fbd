#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tropsolve/matrix.hpp"

namespace tropsolve {

/// A dependent column written as max over (A_c + eta_c) of the independent
/// columns. Coefficients may be -inf.
struct Dependence {
  std::size_t index;
  std::vector<std::pair<std::size_t, Scalar>> combination;
};

enum class Verdict { independent, dependent };

struct ScanStep {
  std::size_t target;
  Verdict verdict;
};

struct RankReport {
  std::vector<std::size_t> independent;  // ascending
  std::vector<Dependence> dependent;     // in scan order
  std::size_t rank = 0;
  std::vector<ScanStep> trace;
};

/// Column rank by the dependence scan.
///
/// Columns are visited from last to first (in `scan_order` when given, else
/// natural order). Each target is tested for solvability against the working
/// set: the independent columns found so far, most recent first, followed by
/// the columns not yet visited. A solvable target is dropped as dependent; an
/// unsolvable one joins the independent set. All -inf columns are removed up
/// front as dependent on the empty combination.
///
/// Coefficients of each dependent column are the maximal solution against the
/// final independent set, so the recorded combinations reproduce it exactly.
RankReport colrank(const Matrix& a, std::span<const std::size_t> scan_order = {});

/// colrank(transpose(a)); indices refer to rows.
RankReport rowrank(const Matrix& a, std::span<const std::size_t> scan_order = {});

/// Residuation-only dependence test, sharing no code with the solver:
/// λ_c = min over rows with col_c finite of (target_i - col_ic), then check
/// max_c(col_c + λ_c) == target. Returns λ when the target is in the span.
std::optional<std::vector<Scalar>> dependence_oracle(std::span<const Vector> cols,
                                                     const Vector& target);

/// max over the pairs of (A_c + eta_c).
Vector combine(const Matrix& a, const std::vector<std::pair<std::size_t, Scalar>>& combination);

}  // namespace tropsolve
