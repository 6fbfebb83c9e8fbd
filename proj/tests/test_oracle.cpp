#include "doctest.h"
#include "support.hpp"
#include "tropsolve/errors.hpp"
#include "tropsolve/oracle.hpp"
#include "tropsolve/solver.hpp"

using namespace tropsolve;

namespace {

Vector unwrap(const std::vector<std::optional<Scalar>>& v) {
  Vector out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

}  // namespace

TEST_CASE("principal solution") {
  CHECK(unwrap(oracle::principal_solution(testing::ex34_a(), testing::ex34_b())) ==
        Vector{-63, -25, 30, 4, 74});
  Vector x35 = unwrap(oracle::principal_solution(testing::ex35_a(), testing::ex35_b()));
  CHECK(x35 == Vector{-10, -6, -7, -8});
  CHECK_FALSE(verify(testing::ex35_a(), x35, testing::ex35_b()));
  CHECK(unwrap(oracle::principal_solution(Matrix{{0}}, {Scalar(5, 3)})) == Vector{Scalar(5, 3)});

  auto open = oracle::principal_solution(Matrix{{1, Scalar::bottom()}}, {2});
  CHECK(open[0] == Scalar(1));
  CHECK_FALSE(open[1].has_value());
}

TEST_CASE("exhaustive solvability") {
  Matrix a = testing::ex34_a();
  std::vector<std::size_t> three{0, 1, 2};
  Matrix sub = select(a, three, three);
  for (Vector b : {select(testing::ex34_b(), three), mat_vec(sub, {1, 2, 3}), Vector{0, 0, 0}})
    CHECK(oracle::exhaustive_solvable(sub, b) == solve(sub, b).solvable());

  CHECK_FALSE(oracle::exhaustive_solvable(Matrix{{0, 0}, {0, 0}}, {0, 1}));
  Matrix small{{1, 2}, {3, Scalar::bottom()}};
  CHECK(oracle::exhaustive_solvable(small, mat_vec(small, {Scalar(1, 2), -1})));
  CHECK_THROWS_AS(oracle::exhaustive_solvable(Matrix(5, 1), Vector(5)), PreconditionError);
}

TEST_CASE("candidate grid") {
  auto grid = oracle::candidate_grid(Matrix{{1, Scalar::bottom()}, {3, Scalar::bottom()}}, {4, 4});
  CHECK(grid[0] == Vector{Scalar::bottom(), 1, 3});
  CHECK(grid[1] == Vector{Scalar::bottom()});
}
