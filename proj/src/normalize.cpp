#include "tropsolve/normalize.hpp"

#include "tropsolve/errors.hpp"

namespace tropsolve {

const Rational& QEntry::value() const {
  if (!value_) throw DomainError("value of the top sentinel requested");
  return *value_;
}

bool operator==(const QEntry& a, const QEntry& b) {
  if (a.is_top() || b.is_top()) return a.is_top() == b.is_top();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const QEntry& a, const QEntry& b) {
  if (a.is_top() && b.is_top()) return std::strong_ordering::equal;
  if (a.is_top()) return std::strong_ordering::greater;
  if (b.is_top()) return std::strong_ordering::less;
  const int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string to_string(const QEntry& q) {
  return q.is_top() ? std::string("+inf-") : to_string(q.value());
}

QEntry parse_qentry(std::string_view token) {
  if (token == "+inf-") return QEntry::top();
  Scalar s = parse_scalar(token);
  if (s.is_bottom()) throw ParseError("-inf is not a valid Q entry");
  return QEntry(s.value());
}

Rational column_mean(const Vector& col) {
  Rational sum = 0;
  long count = 0;
  for (const auto& s : col) {
    if (s.is_bottom()) continue;
    sum += s.value();
    ++count;
  }
  if (count == 0) throw DegenerateColumnError(0);
  Rational mean = sum / count;
  mean.canonicalize();
  return mean;
}

NormalizationResult normalize(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows())
    throw DimensionError("normalize: b has " + std::to_string(b.size()) +
                         " entries, A has " + std::to_string(a.rows()) + " rows");
  if (!is_regular(b))
    throw PreconditionError(
        "normalize: b contains -inf; run the solver's preprocessing first");

  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  NormalizationResult r;
  r.b_mean = column_mean(b);
  r.b_tilde.reserve(m);
  for (const auto& s : b) r.b_tilde.emplace_back(Rational(s.value() - r.b_mean));

  r.a_tilde = Matrix(m, n);
  r.col_means.reserve(n);
  r.q = QMatrix(m, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mean;
    try {
      mean = column_mean(column(a, j));
    } catch (const DegenerateColumnError&) {
      throw DegenerateColumnError(j);
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (a(i, j).is_bottom()) continue;  // ã stays -inf, q stays top
      Rational at = a(i, j).value() - mean;
      r.q(i, j) = QEntry(Rational(r.b_tilde[i].value() - at));
      r.a_tilde(i, j) = Scalar(at);
    }
    r.col_means.push_back(std::move(mean));
  }
  return r;
}

ColumnMinima column_minima(const QMatrix& q) {
  ColumnMinima out;
  out.y_star.reserve(q.cols());
  out.argmin.resize(q.cols());
  for (std::size_t j = 0; j < q.cols(); ++j) {
    QEntry best = QEntry::top();
    for (std::size_t i = 0; i < q.rows(); ++i) {
      const QEntry& e = q(i, j);
      if (e.is_top()) continue;
      if (e < best) {
        best = e;
        out.argmin[j].assign(1, i);
      } else if (e == best) {
        out.argmin[j].push_back(i);
      }
    }
    if (best.is_top()) throw DegenerateColumnError(j);
    out.y_star.push_back(best.value());
  }
  return out;
}

}  // namespace tropsolve
