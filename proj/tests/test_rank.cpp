#include "doctest.h"
#include "support.hpp"
#include "tropsolve/errors.hpp"
#include "tropsolve/rank.hpp"
#include "tropsolve/solver.hpp"

using namespace tropsolve;
using testing::Gen;

namespace {

using Idx = std::vector<std::size_t>;
const Scalar kBot = Scalar::bottom();

std::vector<std::pair<std::size_t, Verdict>> trace_of(const RankReport& r) {
  std::vector<std::pair<std::size_t, Verdict>> out;
  for (const auto& s : r.trace) out.emplace_back(s.target, s.verdict);
  return out;
}

/// The same last-to-first scan, driven by the residuation oracle instead of
/// the solver. Returns the independent columns, ascending.
Idx oracle_scan(const Matrix& a) {
  std::vector<std::size_t> independent;
  Idx out;
  for (std::size_t pos = a.cols(); pos-- > 0;) {
    if (!has_finite(column(a, pos))) continue;
    std::vector<Vector> working;
    for (auto c : independent) working.push_back(column(a, c));
    for (std::size_t c = 0; c < pos; ++c)
      if (has_finite(column(a, c))) working.push_back(column(a, c));
    if (working.empty() || !dependence_oracle(working, column(a, pos)))
      independent.insert(independent.begin(), pos);
  }
  out.assign(independent.begin(), independent.end());
  std::sort(out.begin(), out.end());
  return out;
}

void check_reconstruction(const Matrix& a, const RankReport& r) {
  for (const auto& d : r.dependent) CHECK(combine(a, d.combination) == column(a, d.index));
  CHECK(r.rank == r.independent.size());
  CHECK(r.independent.size() + r.dependent.size() == a.cols());
}

}  // namespace

TEST_CASE("column rank of the 4x5 scan example") {
  Matrix a = testing::rank_a();
  RankReport r = colrank(a);
  CHECK(r.rank == 2);
  CHECK(r.independent == Idx{1, 3});
  CHECK(trace_of(r) == std::vector<std::pair<std::size_t, Verdict>>{
                           {4, Verdict::dependent},
                           {3, Verdict::independent},
                           {2, Verdict::dependent},
                           {1, Verdict::independent},
                           {0, Verdict::dependent}});
  check_reconstruction(a, r);
}

TEST_CASE("column and row rank differ on the 3x3 example") {
  Matrix a = testing::ex29_a();
  RankReport c = colrank(a);
  CHECK(c.rank == 2);
  CHECK(c.independent == Idx{0, 1});
  REQUIRE(c.dependent.size() == 1);
  CHECK(c.dependent[0].index == 2);
  CHECK(c.dependent[0].combination ==
        std::vector<std::pair<std::size_t, Scalar>>{{0, 2}, {1, -2}});
  // Row 1 = max(row 2 + 6, row 3 - 1), so the rows span a rank-2 space.
  RankReport r = rowrank(a);
  CHECK(r.rank == 2);
  CHECK(r.independent == Idx{1, 2});
  REQUIRE(r.dependent.size() == 1);
  CHECK(r.dependent[0].combination ==
        std::vector<std::pair<std::size_t, Scalar>>{{1, 6}, {2, -1}});
}

TEST_CASE("rank edge cases") {
  Matrix diag{{0, kBot, kBot}, {kBot, 0, kBot}, {kBot, kBot, 0}};
  CHECK(colrank(diag).rank == 3);
  CHECK(rowrank(diag).rank == 3);

  CHECK(colrank(Matrix{{4}, {-1}}).rank == 1);
  CHECK(rowrank(Matrix{{1, 2, 3}}).rank == 1);

  Matrix with_empty{{1, kBot, 2}, {3, kBot, 4}};
  RankReport r = colrank(with_empty);
  CHECK(r.trace.front().target == 1);
  CHECK(r.trace.front().verdict == Verdict::dependent);
  check_reconstruction(with_empty, r);
  CHECK(r.rank == 1);
}

TEST_CASE("scan order") {
  Matrix a = testing::rank_a();
  Idx reversed{4, 3, 2, 1, 0};
  RankReport r = colrank(a, reversed);
  CHECK(r.trace.front().target == 0);
  check_reconstruction(a, r);
  CHECK_THROWS_AS(colrank(a, Idx{0, 1}), DimensionError);
  CHECK_THROWS_AS(colrank(a, Idx{0, 0, 1, 2, 3}), PreconditionError);
}

TEST_CASE("row rank of the 4x5 scan example matches the oracle scan") {
  Matrix a = testing::rank_a();
  RankReport r = rowrank(a);
  CHECK(r.independent == oracle_scan(transpose(a)));
  CHECK(r.rank == 2);
  check_reconstruction(transpose(a), r);
}

TEST_CASE("dependence oracle") {
  Matrix a = testing::ex29_a();
  std::vector<Vector> cols{column(a, 0), column(a, 1)};
  CHECK(dependence_oracle(cols, column(a, 2)) == std::vector<Scalar>{2, -2});

  Vector v{1, kBot, Scalar(3, 2)};
  CHECK(dependence_oracle(std::vector<Vector>{v}, v) == std::vector<Scalar>{0});

  std::vector<Vector> basis{{0, kBot, kBot}, {kBot, 0, kBot}};
  CHECK_FALSE(dependence_oracle(basis, {1, 2, 3}).has_value());
}

TEST_CASE("solver-based and oracle dependence verdicts agree") {
  Gen gen(71);
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = gen.dim(1, 5), k = gen.dim(1, 4);
    Matrix a = gen.matrix_nondegenerate(m, k, 0.25);
    Vector target;
    if (gen.chance(0.5)) {
      Vector coeffs;
      for (std::size_t c = 0; c < k; ++c) coeffs.push_back(gen.scalar(0.2));
      target = mat_vec(a, coeffs);
    } else {
      for (std::size_t i = 0; i < m; ++i) target.push_back(gen.scalar(0.2));
    }
    if (!has_finite(target)) continue;
    std::vector<Vector> cols;
    for (std::size_t c = 0; c < k; ++c) cols.push_back(column(a, c));
    auto by_oracle = dependence_oracle(cols, target);
    SolveOutcome by_solver = solve(a, target);
    CHECK(by_oracle.has_value() == by_solver.solvable());
    if (by_oracle && by_solver.solvable()) CHECK(*by_oracle == by_solver.solution().x_star);
  }
}

TEST_CASE("rank reports on random matrices") {
  Gen gen(72);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix a = gen.matrix(gen.dim(1, 5), gen.dim(1, 5), 0.25);
    RankReport c = colrank(a);
    check_reconstruction(a, c);
    CHECK(c.independent == oracle_scan(a));
    RankReport r = rowrank(a);
    check_reconstruction(transpose(a), r);
    CHECK(r.rank == colrank(transpose(a)).rank);
    CHECK(rowrank(transpose(a)).rank == c.rank);
  }
}
