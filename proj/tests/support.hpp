#pragma once

// Shared fixtures and random instance generators for the test suites.

#include <cstdint>
#include <random>
#include <string>

#include "tropsolve/matrix.hpp"

namespace tropsolve::testing {

inline std::string data_path(const std::string& name) {
  return std::string(TROPSOLVE_TEST_DATA) + "/" + name;
}

inline Matrix ex34_a() {
  return {{165, 57, 72, -7, 0},
          {141, 64, 48, 3, -1},
          {137, 101, 46, 0, 2},
          {-243, 98, -206, 156, -5}};
}
inline Vector ex34_b() { return {102, 78, 76, 160}; }

inline Matrix ex35_a() {
  return {{0, -1, 2, 7}, {1, 5, 4, -2}, {-2, 5, 0, 2}, {4, -3, 1, 2}, {-3, 8, 2, -6}};
}
inline Vector ex35_b() { return {3, 3, 0, -6, 2}; }

inline Matrix ex29_a() { return {{3, 6, 5}, {-5, 0, -2}, {4, 1, 6}}; }

inline Matrix dof_a() {
  return {{-4, 7, 12, -3, 0}, {3, 2, 8, 3, -1}, {-9, 1, 6, 0, 2}, {2, 8, -5, 1, -3}};
}
inline Vector dof_b() { return {5, 10, 4, 9}; }

inline Matrix rank_a() {
  return {{4, -4, 2, 3, 3}, {5, 7, 7, 2, 6}, {10, 12, 12, 8, 11}, {4, -3, 2, 3, 3}};
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(int span = 20) {
    static constexpr int kDens[] = {1, 1, 2, 3, 4, 5};
    Rational q(uniform(-span, span), kDens[uniform(0, 5)]);
    q.canonicalize();
    return q;
  }

  Scalar scalar(double bottom_p = 0.2) {
    return chance(bottom_p) ? Scalar::bottom() : Scalar(rational());
  }

  Matrix matrix(std::size_t m, std::size_t n, double bottom_p = 0.2) {
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = scalar(bottom_p);
    return a;
  }

  /// Like matrix(), but every column keeps at least one finite entry.
  Matrix matrix_nondegenerate(std::size_t m, std::size_t n, double bottom_p = 0.2) {
    Matrix a = matrix(m, n, bottom_p);
    for (std::size_t j = 0; j < n; ++j)
      if (!has_finite(column(a, j))) a(uniform(0, static_cast<int>(m) - 1), j) = Scalar(rational());
    return a;
  }

  Vector finite_vector(std::size_t n) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(rational());
    return v;
  }

  std::size_t dim(int lo, int hi) { return static_cast<std::size_t>(uniform(lo, hi)); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tropsolve::testing
