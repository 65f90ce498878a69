#pragma once

// Integer polynomials, characteristic polynomials and spectral radii.

#include <optional>
#include <string>
#include <vector>

#include "signstab/matrix.hpp"

namespace signstab {

/// Integer coefficients in ascending degree, trailing zeros stripped.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  /// nu^n - 1
  static IntPoly cyclic(std::size_t n);

  const std::vector<Integer>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  Scalar eval(const Scalar& x) const;
  double eval(double x) const;

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Integer> c_;
};

/// Division by a monic divisor: (quotient, remainder).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& divisor);
bool divides(const IntPoly& divisor, const IntPoly& p);

/// Human-readable rendering such as "nu^2 - 3*nu + 1".
std::string to_string(const IntPoly& p);

/// det(nu*I - M) by Faddeev-LeVerrier with exact division.
IntPoly char_poly(const IntMatrix& m);

struct SpectralEstimate {
  double value = 0;
  /// Bound on |value - rho| from the Newton correction at the root.
  double bound = 0;
};

/// Largest modulus among the roots of the square-free part of char_poly(m),
/// found by Aberth iteration in extended precision.
SpectralEstimate spectral_radius(const IntMatrix& m);

/// Tries to express the real root of p nearest `approx` as an integer or an
/// element of a real quadratic field, verifying p(root) = 0 exactly.
std::optional<Scalar> exact_root_near(const IntPoly& p, double approx, double tolerance = 1e-6);

/// True iff prod_c (nu^c - 1) divides p.
bool permutation_factor_check(const IntPoly& p, const std::vector<std::size_t>& cycles);

}  // namespace signstab
