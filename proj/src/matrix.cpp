#include "tropsolve/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tropsolve/errors.hpp"

namespace tropsolve {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<Vector> tmp;
  tmp.reserve(rows.size());
  for (const auto& r : rows) tmp.emplace_back(r);
  *this = from_rows(tmp);
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw DimensionError("ragged rows: row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(m.cols_));
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  return transpose(from_rows(columns));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::unit();
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("matrix index (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range");
  return (*this)(i, j);
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = trop_add(a(i, j), b(i, j));
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& c) {
  if (a.cols() != c.rows())
    throw DimensionError("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(c.rows()) + " differ");
  Matrix out(a.rows(), c.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = trop_add(acc, trop_mul(a(i, k), c(k, j)));
      out(i, j) = std::move(acc);
    }
  return out;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size())
    throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) +
                         " columns, vector has " + std::to_string(x.size()) +
                         " entries");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      out[i] = trop_add(out[i], trop_mul(a(i, k), x[k]));
  return out;
}

Matrix scalar_mul(const Scalar& lambda, const Matrix& a) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = trop_mul(lambda, a(i, j));
  return out;
}

Vector scalar_mul(const Scalar& lambda, const Vector& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(trop_mul(lambda, s));
  return out;
}

Vector vec_add(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionError("vec_add: length mismatch");
  Vector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = trop_add(u[i], v[i]);
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

bool leq(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) > b(i, j)) return false;
  return true;
}

bool leq(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw DimensionError("leq: length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] > v[i]) return false;
  return true;
}

Vector column(const Matrix& a, std::size_t j) {
  if (j >= a.cols())
    throw std::out_of_range("column " + std::to_string(j) + " out of range");
  Vector out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a(i, j));
  return out;
}

Vector row(const Matrix& a, std::size_t i) {
  if (i >= a.rows()) throw std::out_of_range("row " + std::to_string(i) + " out of range");
  Vector out;
  out.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a(i, j));
  return out;
}

Matrix select(const Matrix& a, std::span<const std::size_t> rows,
              std::span<const std::size_t> cols) {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = a.at(rows[i], cols[j]);
  return out;
}

Vector select(const Vector& v, std::span<const std::size_t> idx) {
  Vector out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(v.at(i));
  return out;
}

bool is_regular(const Vector& v) {
  return std::none_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_bottom(); });
}

bool has_finite(const Vector& v) {
  return std::any_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_finite(); });
}

}  // namespace tropsolve
