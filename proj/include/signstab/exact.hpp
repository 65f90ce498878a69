#pragma once

// Exact scalars: GMP-backed rationals and elements a + b*sqrt(d) of a real
// quadratic field, with exact sign determination.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "signstab/error.hpp"

namespace signstab {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Sign : std::int8_t { minus = -1, zero = 0, plus = 1 };

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
inline bool is_strict(Sign s) { return s != Sign::zero; }
inline int to_int(Sign s) { return static_cast<int>(s); }
char to_char(Sign s);
/// Accepts '+', '-', '0' (and the unicode minus is not accepted).
Sign sign_from_char(char c);

Sign sign_of(const Integer& z);
Sign sign_of(const Rational& q);

/// True iff d >= 2 has no repeated prime factor.
bool is_square_free(long d);

/**
 * a + b*sqrt(d) with a, b rational and d a square-free integer >= 2.
 *
 * Binary operations require both operands to share d; a mismatch raises
 * ArithmeticError("RadicandMismatch").
 */
class QuadExt {
 public:
  QuadExt(Rational a, Rational b, long radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  long radicand() const { return d_; }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Unchecked{}); }
  /// a^2 - d b^2, the field norm down to Q.
  Rational norm() const;
  Sign sign() const;
  QuadExt inverse() const;
  double to_double() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Unchecked{}); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);
  QuadExt& operator*=(const Rational& q);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  struct Unchecked {};
  QuadExt(Rational a, Rational b, long d, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  void require_same_field(const QuadExt& o) const;

  Rational a_;
  Rational b_;
  long d_;
};

/**
 * Tagged union of Rational | QuadExt.
 *
 * Mixed operations promote the rational operand into the quadratic field of
 * the other one. Results keep their field even when the irrational part
 * cancels, so an expression never silently changes radicand.
 */
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(long v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational q) : value_(std::move(q)) {}  // NOLINT
  Scalar(const Integer& z) : value_(Rational(z)) {}  // NOLINT
  Scalar(QuadExt x) : value_(std::move(x)) {}  // NOLINT

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational* as_rational() const { return std::get_if<Rational>(&value_); }
  const QuadExt* as_quad() const { return std::get_if<QuadExt>(&value_); }
  std::optional<long> radicand() const;

  Sign sign() const;
  bool is_zero() const { return sign() == Sign::zero; }
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  /// Value equality; 3 and 3 + 0*sqrt(5) compare equal.
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

 private:
  std::variant<Rational, QuadExt> value_;
};

Sign scalar_sign(const Scalar& s);
/// max(s, 0).
Scalar pos_part(const Scalar& s);
Scalar abs(const Scalar& s);

/**
 * Exact text encoding: "7", "-3/4", "p/q+r/s*sqrt(d)", "p/q-r/s*sqrt(d)",
 * "r/s*sqrt(d)" and "sqrt(d)". Whitespace is ignored; floats are rejected.
 */
Scalar parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);
/// Canonical rendering, inverse of parse_scalar.
std::string to_string(const Scalar& s);
std::string to_string(const Rational& q);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace signstab
