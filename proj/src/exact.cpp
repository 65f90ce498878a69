#include "signstab/exact.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace signstab {

char to_char(Sign s) {
  switch (s) {
    case Sign::plus: return '+';
    case Sign::minus: return '-';
    case Sign::zero: return '0';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::plus;
    case '-': return Sign::minus;
    case '0': return Sign::zero;
    default:
      throw ParseError(std::string("invalid sign character '") + c + "'");
  }
}

Sign sign_of(const Integer& z) { return static_cast<Sign>(sgn(z)); }
Sign sign_of(const Rational& q) { return static_cast<Sign>(sgn(q)); }

bool is_square_free(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- QuadExt

QuadExt::QuadExt(Rational a, Rational b, long radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
  a_.canonicalize();
  b_.canonicalize();
  if (!is_square_free(d_)) {
    throw ArithmeticError("InvalidRadicand",
                          "radicand must be a square-free integer >= 2, got " +
                              std::to_string(d_));
  }
}

void QuadExt::require_same_field(const QuadExt& o) const {
  if (d_ != o.d_) {
    throw ArithmeticError("RadicandMismatch",
                          "cannot combine sqrt(" + std::to_string(d_) +
                              ") and sqrt(" + std::to_string(o.d_) + ")");
  }
}

Rational QuadExt::norm() const { return Rational(a_ * a_ - d_ * b_ * b_); }

Sign QuadExt::sign() const {
  const Sign sa = sign_of(a_);
  const Sign sb = sign_of(b_);
  if (sb == Sign::zero) return sa;
  if (sa == Sign::zero || sa == sb) return sb;
  // Opposite signs: |a| vs |b|sqrt(d) decided by a^2 vs d b^2.
  const int cmp = ::cmp(Rational(a_ * a_), Rational(d_ * b_ * b_));
  if (cmp == 0) return Sign::zero;  // unreachable for square-free d, kept total
  return cmp > 0 ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n == 0) throw ArithmeticError("DivisionByZero", "inverse of zero");
  return QuadExt(Rational(a_ / n), Rational(-b_ / n), d_, Unchecked{});
}

double QuadExt::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  require_same_field(o);
  Rational a = a_ * o.a_ + d_ * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

QuadExt& QuadExt::operator*=(const Rational& q) {
  a_ *= q;
  b_ *= q;
  return *this;
}

// ----------------------------------------------------------------- Scalar

namespace {

QuadExt promote(const Rational& q, long d) { return QuadExt(q, Rational(0), d); }

// Apply a QuadExt operation, promoting a rational side when needed.
template <class RatOp, class QuadOp>
void combine(std::variant<Rational, QuadExt>& lhs,
             const std::variant<Rational, QuadExt>& rhs, RatOp rat_op,
             QuadOp quad_op) {
  if (auto* l = std::get_if<Rational>(&lhs)) {
    if (auto* r = std::get_if<Rational>(&rhs)) {
      rat_op(*l, *r);
      return;
    }
    const auto& rq = std::get<QuadExt>(rhs);
    QuadExt promoted = promote(*l, rq.radicand());
    quad_op(promoted, rq);
    lhs = std::move(promoted);
    return;
  }
  auto& lq = std::get<QuadExt>(lhs);
  if (auto* r = std::get_if<Rational>(&rhs)) {
    quad_op(lq, promote(*r, lq.radicand()));
  } else {
    quad_op(lq, std::get<QuadExt>(rhs));
  }
}

}  // namespace

std::optional<long> Scalar::radicand() const {
  if (auto* q = as_quad()) return q->radicand();
  return std::nullopt;
}

Sign Scalar::sign() const {
  if (auto* q = as_rational()) return sign_of(*q);
  return std::get<QuadExt>(value_).sign();
}

double Scalar::to_double() const {
  if (auto* q = as_rational()) return q->get_d();
  return std::get<QuadExt>(value_).to_double();
}

Scalar Scalar::operator-() const {
  if (auto* q = as_rational()) return Scalar(Rational(-*q));
  return Scalar(-std::get<QuadExt>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(value_, o.value_, [](Rational& a, const Rational& b) { a += b; },
          [](QuadExt& a, const QuadExt& b) { a += b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(value_, o.value_, [](Rational& a, const Rational& b) { a -= b; },
          [](QuadExt& a, const QuadExt& b) { a -= b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(value_, o.value_, [](Rational& a, const Rational& b) { a *= b; },
          [](QuadExt& a, const QuadExt& b) { a *= b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ArithmeticError("DivisionByZero", "division by zero");
  combine(value_, o.value_, [](Rational& a, const Rational& b) { a /= b; },
          [](QuadExt& a, const QuadExt& b) { a /= b; });
  return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_rational() && y.is_rational()) return *x.as_rational() == *y.as_rational();
  return (x - y).is_zero();
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  switch ((x - y).sign()) {
    case Sign::minus: return std::strong_ordering::less;
    case Sign::plus: return std::strong_ordering::greater;
    case Sign::zero: break;
  }
  return std::strong_ordering::equal;
}

Sign scalar_sign(const Scalar& s) { return s.sign(); }

Scalar pos_part(const Scalar& s) {
  if (s.sign() == Sign::plus) return s;
  // Keep the field of s so that pos_part(x) - pos_part(-x) stays in it.
  if (auto d = s.radicand()) return Scalar(QuadExt(Rational(0), Rational(0), *d));
  return Scalar(0);
}

Scalar abs(const Scalar& s) { return s.sign() == Sign::minus ? -s : s; }

// ---------------------------------------------------------------- parsing

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw ParseError("invalid integer literal '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(parse_integer(s));
  } else {
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    Integer den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    q = Rational(num, den);
  }
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty scalar literal");
  const auto root = s.find("sqrt(");
  if (root == std::string::npos) return Scalar(parse_rational(s));

  if (s.back() != ')') throw ParseError("malformed radical in '" + s + "'");
  const long d = [&] {
    const std::string inner = s.substr(root + 5, s.size() - root - 6);
    if (!is_integer_literal(inner)) throw ParseError("malformed radicand in '" + s + "'");
    try {
      return std::stol(inner);
    } catch (const std::exception&) {
      throw ParseError("radicand out of range in '" + s + "'");
    }
  }();

  // Everything before "sqrt(" is "[a(+|-)][b*]" where the coefficient may be
  // a bare sign.
  std::string head = s.substr(0, root);
  Rational b(1);
  Rational a(0);
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    // Split the coefficient of the radical off the rational part: the last
    // '+' or '-' that is not the leading sign separates them.
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
      if (head[i] == '+' || head[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      b = parse_rational(head);
    } else {
      a = parse_rational(head.substr(0, split));
      b = parse_rational(head.substr(split));
    }
  } else if (!head.empty()) {
    // "a+sqrt(d)", "a-sqrt(d)", "-sqrt(d)", "+sqrt(d)"
    const char last = head.back();
    if (last != '+' && last != '-') throw ParseError("malformed scalar '" + s + "'");
    b = last == '-' ? Rational(-1) : Rational(1);
    head.pop_back();
    if (!head.empty()) a = parse_rational(head);
  }
  return Scalar(QuadExt(a, b, d));
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Scalar& s) {
  if (auto* q = s.as_rational()) return to_string(*q);
  const auto& x = *s.as_quad();
  const std::string root = "*sqrt(" + std::to_string(x.radicand()) + ")";
  const Rational& a = x.rational_part();
  const Rational& b = x.irrational_part();
  if (a == 0) return to_string(b) + root;
  if (b < 0) return to_string(a) + "-" + to_string(Rational(-b)) + root;
  return to_string(a) + "+" + to_string(b) + root;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace signstab
