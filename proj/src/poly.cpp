#include "signstab/poly.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace signstab {

IntPoly::IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::cyclic(std::size_t n) {
  std::vector<Integer> c(n + 1, Integer(0));
  c[0] = -1;
  c[n] += 1;
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar IntPoly::eval(const Scalar& x) const {
  Scalar acc = x - x;  // zero in the field of x
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Scalar(c_[i]);
  return acc;
}

double IntPoly::eval(double x) const {
  double acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return IntPoly(std::move(c));
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& p, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw ArithmeticError("NotMonic", "divisor must be monic");
  std::vector<Integer> r = p.coeffs();
  const long dd = divisor.degree();
  if (static_cast<long>(r.size()) - 1 < dd) return {IntPoly(), p};
  std::vector<Integer> q(r.size() - dd, Integer(0));
  for (long i = static_cast<long>(r.size()) - 1; i >= dd; --i) {
    const Integer lead = r[i];
    if (lead == 0) continue;
    q[i - dd] = lead;
    for (long j = 0; j <= dd; ++j) r[i - dd + j] -= lead * divisor.coeffs()[j];
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

bool divides(const IntPoly& divisor, const IntPoly& p) {
  return divmod_monic(p, divisor).second.is_zero();
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const Integer& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool show_coeff = mag != 1 || i == 0;
    if (show_coeff) out += mag.get_str();
    if (i > 0) {
      if (show_coeff) out += "*";
      out += "nu";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

IntPoly char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix mk(n, n, Integer(0));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
    const IntMatrix amk = m * mk;
    Integer trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += amk(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -q;
  }
  return IntPoly(std::move(c));
}

namespace {

// Remainder of a by b up to a positive constant factor (pseudo-division).
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  const long db = b.degree();
  const Integer lead = b[static_cast<std::size_t>(db)];
  while (!a.is_zero() && a.degree() >= db) {
    const long shift = a.degree() - db;
    const Integer la = a[static_cast<std::size_t>(a.degree())];
    std::vector<Integer> c = a.coeffs();
    for (auto& x : c) x *= abs(lead);
    const Integer factor = lead < 0 ? Integer(-la) : la;
    for (long j = 0; j <= db; ++j) c[static_cast<std::size_t>(j + shift)] -= factor * b[static_cast<std::size_t>(j)];
    a = IntPoly(std::move(c));
  }
  return a;
}

IntPoly primitive(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g(0);
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  if (p[static_cast<std::size_t>(p.degree())] < 0) g = -g;
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly derivative(const IntPoly& p) {
  std::vector<Integer> c;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) c.push_back(p[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(c));
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero()) {
    IntPoly r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic polynomial with the same roots as p, each simple.
IntPoly square_free_part(const IntPoly& p) {
  const IntPoly g = poly_gcd(p, derivative(p));
  if (g.degree() <= 0) return p;
  return divmod_monic(p, g).first;
}

using Complex = std::complex<long double>;

std::pair<Complex, Complex> eval_with_derivative(const std::vector<long double>& c, Complex z) {
  Complex v = 0;
  Complex d = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    d = d * z + v;
    v = v * z + c[i];
  }
  return {v, d};
}

}  // namespace

SpectralEstimate spectral_radius(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("spectral radius of a non-square matrix");
  if (m.rows() == 0) return {};
  const IntPoly p = square_free_part(char_poly(m));
  const auto n = static_cast<std::size_t>(p.degree());
  if (n == 0) return {};
  std::vector<long double> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = static_cast<long double>(p[i].get_d());

  // Aberth-Ehrlich iteration from points spread on a circle enclosing all roots.
  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::fabs(c[i]));
  radius += 1;
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i)
    z[i] = std::polar(radius, (2 * std::numbers::pi_v<long double> * i + 0.4L) / n);
  for (int iter = 0; iter < 500; ++iter) {
    long double largest_step = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [v, d] = eval_with_derivative(c, z[i]);
      if (v == Complex(0)) continue;
      const Complex ratio = v / d;
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += Complex(1) / (z[i] - z[j]);
      const Complex step = ratio / (Complex(1) - ratio * repulsion);
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (largest_step < 1e-30L) break;
  }

  long double rho = 0;
  long double bound = 0;
  for (const Complex& root : z) {
    const auto [v, d] = eval_with_derivative(c, root);
    // For a simple root the Newton correction times the degree bounds the
    // distance to the nearest exact root.
    const long double err = d == Complex(0) ? 0 : n * std::abs(v / d);
    if (std::abs(root) > rho) {
      rho = std::abs(root);
      bound = err;
    }
  }
  bound += 64 * std::numeric_limits<double>::epsilon() * rho;
  return {static_cast<double>(rho), static_cast<double>(bound)};
}

namespace {

std::vector<Integer> small_divisors(const Integer& c0) {
  std::vector<Integer> out{Integer(1), Integer(-1)};
  const Integer mag = abs(c0);
  if (mag == 0 || mag > 1000000) return out;
  const long v = mag.get_si();
  for (long d = 2; d <= v; ++d) {
    if (v % d == 0) {
      out.emplace_back(d);
      out.emplace_back(-d);
    }
  }
  return out;
}

// disc = d * k^2 with d square-free.
std::pair<long, Integer> split_square(const Integer& disc) {
  Integer rest = disc;
  Integer k(1);
  for (long p = 2; Integer(p) * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      k *= p;
    }
  }
  return {rest.get_si(), k};
}

}  // namespace

std::optional<Scalar> exact_root_near(const IntPoly& p, double approx, double tolerance) {
  if (p.is_zero()) return std::nullopt;
  const Integer r(static_cast<long>(std::llround(approx)));
  if (std::fabs(approx - r.get_d()) < tolerance && p.eval(Scalar(r)).is_zero()) {
    return Scalar(r);
  }
  if (!p.is_monic() || approx == 0) return std::nullopt;
  for (const Integer& nrm : small_divisors(p[0])) {
    const Integer t(static_cast<long>(std::llround(approx + nrm.get_d() / approx)));
    const IntPoly q({nrm, Integer(-t), Integer(1)});
    if (!divides(q, p)) continue;
    const Integer disc = t * t - 4 * nrm;
    if (disc <= 0) continue;
    const Integer root = sqrt(disc);
    if (root * root == disc) continue;  // rational roots were tried above
    if (disc > Integer(1) << 60) continue;
    const auto [d, k] = split_square(disc);
    for (int s : {1, -1}) {
      const Scalar x(QuadExt(Rational(t, Integer(2)), Rational(Integer(s * k), Integer(2)), d));
      if (std::fabs(x.to_double() - approx) < tolerance && p.eval(x).is_zero()) return x;
    }
  }
  return std::nullopt;
}

bool permutation_factor_check(const IntPoly& p, const std::vector<std::size_t>& cycles) {
  IntPoly prod({Integer(1)});
  for (std::size_t c : cycles) prod = prod * IntPoly::cyclic(c);
  return divides(prod, p);
}

}  // namespace signstab
