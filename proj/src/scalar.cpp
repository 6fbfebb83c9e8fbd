#include "tropsolve/scalar.hpp"

#include <cctype>
#include <ostream>

#include "tropsolve/errors.hpp"

namespace tropsolve {

Scalar::Scalar(const Rational& value) : value_(value) {
  value_->canonicalize();
}

Scalar::Scalar(long value) : value_(Rational(value)) {}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  value_ = std::move(q);
}

const Rational& Scalar::value() const {
  if (!value_) throw DomainError("value of -inf requested");
  return *value_;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() && b.is_bottom()) return std::strong_ordering::equal;
  if (a.is_bottom()) return std::strong_ordering::less;
  if (b.is_bottom()) return std::strong_ordering::greater;
  const int c = cmp(*a.value_, *b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar trop_add(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar trop_mul(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
  return Scalar(Rational(a.value() + b.value()));
}

Scalar classical_sub(const Scalar& a, const Scalar& b) {
  if (a.is_bottom() || b.is_bottom())
    throw DomainError("subtraction undefined at -inf");
  return Scalar(Rational(a.value() - b.value()));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Scalar& s) {
  return s.is_bottom() ? std::string("-inf") : to_string(s.value());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << to_string(s);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_token(std::string_view token) {
  throw ParseError("malformed scalar '" + std::string(token) + "'");
}

}  // namespace

Scalar parse_scalar(std::string_view token) {
  if (token == "-inf") return Scalar::bottom();

  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den(1);
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view n = body.substr(0, slash);
    std::string_view d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) bad_token(token);
    num = mpz_class(std::string(n), 10);
    den = mpz_class(std::string(d), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_token(token);
    num = mpz_class(std::string(whole) + std::string(frac), 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) bad_token(token);
    num = mpz_class(std::string(body), 10);
  }
  if (negative) num = -num;

  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

}  // namespace tropsolve
