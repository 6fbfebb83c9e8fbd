#pragma once

// Normalization of a max-plus system AX = b.
//
// Every column of A and the vector b are shifted by the classical mean of
// their finite entries, giving Ã and b̃. The associated matrix Q holds
// q_ij = b̃_i - ã_ij; where ã_ij is -inf, q_ij is a top sentinel that sits
// above every rational and so never becomes a column minimum.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropsolve/matrix.hpp"

namespace tropsolve {

class QEntry {
 public:
  /// The top sentinel.
  QEntry() = default;
  explicit QEntry(const Rational& value) : value_(value) {}

  static QEntry top() { return QEntry(); }

  bool is_top() const noexcept { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const QEntry& a, const QEntry& b);
  friend std::strong_ordering operator<=>(const QEntry& a, const QEntry& b);

 private:
  std::optional<Rational> value_;
};

/// `+inf-` for the sentinel, canonical fraction otherwise.
std::string to_string(const QEntry& q);
QEntry parse_qentry(std::string_view token);

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  QEntry& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QEntry& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QEntry> data_;
};

struct NormalizationResult {
  Matrix a_tilde;
  std::vector<Rational> col_means;
  Vector b_tilde;
  Rational b_mean;
  QMatrix q;
};

struct ColumnMinima {
  std::vector<Rational> y_star;
  /// Rows attaining each column's minimum, ascending.
  std::vector<std::vector<std::size_t>> argmin;
};

/// Mean of the finite entries. Throws DegenerateColumnError if there are none.
Rational column_mean(const Vector& col);

/// Requires a regular b (PreconditionError otherwise) and at least one finite
/// entry per column of A (DegenerateColumnError otherwise).
NormalizationResult normalize(const Matrix& a, const Vector& b);

ColumnMinima column_minima(const QMatrix& q);

}  // namespace tropsolve
