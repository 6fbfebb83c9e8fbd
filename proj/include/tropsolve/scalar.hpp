#pragma once

// Exact max-plus scalars: an extended rational that is either a finite
// canonical fraction or bottom (-inf), the additive identity of the semiring.

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tropsolve {

using Rational = mpq_class;

class Scalar {
 public:
  /// Default-constructed scalars are bottom, the semiring zero.
  Scalar() = default;
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(long value);             // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  Scalar(long num, long den);

  static Scalar bottom() { return Scalar(); }
  /// Multiplicative identity (classical 0).
  static Scalar unit() { return Scalar(0L); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  /// Throws DomainError on bottom.
  const Rational& value() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  std::optional<Rational> value_;
};

/// max(a, b); bottom is the identity.
Scalar trop_add(const Scalar& a, const Scalar& b);

/// Classical sum; bottom absorbs.
Scalar trop_mul(const Scalar& a, const Scalar& b);

/// Classical a - b for finite operands. Callers handle bottom beforehand.
Scalar classical_sub(const Scalar& a, const Scalar& b);

/// Canonical text: `5`, `-13/4`, `-inf`.
std::string to_string(const Scalar& s);
std::string to_string(const Rational& q);

/// Accepts an integer (`-243`), an exact decimal (`2.5`), a fraction
/// (`-13/4`) or `-inf`. Throws ParseError.
Scalar parse_scalar(std::string_view token);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tropsolve
