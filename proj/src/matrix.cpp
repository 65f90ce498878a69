#include "signstab/matrix.hpp"

#include <utility>

namespace signstab {

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Integer(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) throw ArithmeticError("SingularMatrix", "matrix is singular");
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    }
    const Rational pivot = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::vector<Scalar> apply(const IntMatrix& m, std::span<const Scalar> x) {
  if (m.cols() != x.size()) throw DimensionError("matrix/vector size mismatch");
  std::vector<Scalar> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      acc += Scalar(m(i, j)) * x[j];
    }
    y[i] = std::move(acc);
  }
  return y;
}

std::vector<Rational> apply(const IntMatrix& m, std::span<const Rational> x) {
  if (m.cols() != x.size()) throw DimensionError("matrix/vector size mismatch");
  std::vector<Rational> y(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      acc += m(i, j) * x[j];
    }
    y[i] = std::move(acc);
  }
  return y;
}

}  // namespace signstab
