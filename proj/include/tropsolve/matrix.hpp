#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropsolve/scalar.hpp"

namespace tropsolve {

using Vector = std::vector<Scalar>;

/// Dense row-major max-plus matrix.
///
/// Empty shapes (zero rows or zero columns) are representable so that
/// sub-systems left over after preprocessing need no special casing; the text
/// parsers never produce them.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols filled with bottom.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  /// Throws DimensionError on ragged input.
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns);
  /// 0 on the diagonal, bottom elsewhere.
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  /// Bounds-checked; throws std::out_of_range.
  const Scalar& at(std::size_t i, std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& c);
Vector mat_vec(const Matrix& a, const Vector& x);
Matrix scalar_mul(const Scalar& lambda, const Matrix& a);
Vector scalar_mul(const Scalar& lambda, const Vector& v);
Vector vec_add(const Vector& u, const Vector& v);
Matrix transpose(const Matrix& a);

/// Entrywise order.
bool leq(const Matrix& a, const Matrix& b);
bool leq(const Vector& u, const Vector& v);

Vector column(const Matrix& a, std::size_t j);
Vector row(const Matrix& a, std::size_t i);

/// Sub-matrix built from the listed rows and columns, in the listed order.
Matrix select(const Matrix& a, std::span<const std::size_t> rows,
              std::span<const std::size_t> cols);
Vector select(const Vector& v, std::span<const std::size_t> idx);

/// True iff no entry is bottom.
bool is_regular(const Vector& v);
bool has_finite(const Vector& v);

}  // namespace tropsolve
