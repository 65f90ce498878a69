#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

Scalar q5(long a_num, long a_den, long b_num, long b_den) {
  return Scalar(QuadExt(Rational(Integer(a_num), Integer(a_den)),
                        Rational(Integer(b_num), Integer(b_den)), 5));
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  const Rational q = parse_rational("6/-4");
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(parse_rational(" 10 / 5 ")) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
}

TEST_CASE("scalar_sign examples") {
  CHECK(scalar_sign(q5(0, 1, 0, 1)) == Sign::zero);
  CHECK(scalar_sign(q5(3, 1, 1, 1)) == Sign::plus);
  CHECK(scalar_sign(q5(1, 2, -1, 2)) == Sign::minus);
  CHECK(scalar_sign(q5(-1, 2, 1, 2)) == Sign::plus);
  // 9/4 vs 5*(1/4)*... : 3/2 - 1/2 sqrt(5) > 0 since 9 > 5.
  CHECK(scalar_sign(q5(3, 2, -1, 2)) == Sign::plus);
  CHECK(scalar_sign(Scalar(parse_rational("-7/3"))) == Sign::minus);
}

TEST_CASE("pos_part examples") {
  CHECK(pos_part(Scalar(-3)) == Scalar(0));
  CHECK(pos_part(Scalar(parse_rational("7/2"))) == Scalar(parse_rational("7/2")));
  CHECK(pos_part(q5(1, 2, -1, 2)) == Scalar(0));
  CHECK(pos_part(q5(1, 2, 1, 2)) == q5(1, 2, 1, 2));
}

TEST_CASE("radicands must be square-free and must not mix") {
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 4), ArithmeticError);
  CHECK_THROWS_AS(QuadExt(Rational(1), Rational(1), 1), ArithmeticError);
  const Scalar a(QuadExt(Rational(1), Rational(1), 2));
  const Scalar b(QuadExt(Rational(1), Rational(1), 3));
  try {
    (void)(a + b);
    FAIL("mixing radicands must throw");
  } catch (const ArithmeticError& e) {
    CHECK(e.name() == "RadicandMismatch");
  }
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
}

TEST_CASE("rational promotes into the quadratic field") {
  const Scalar x = Scalar(2) + q5(0, 1, 1, 1);
  REQUIRE(x.radicand() == 5);
  CHECK(x == q5(2, 1, 1, 1));
  // The field survives cancellation.
  const Scalar z = x - q5(0, 1, 1, 1);
  CHECK(z.radicand() == 5);
  CHECK(z == Scalar(2));
}

TEST_CASE("text encoding round-trips") {
  for (const char* text : {"7", "-3/4", "1/2+1/2*sqrt(5)", "1/2-1/2*sqrt(5)", "3*sqrt(2)",
                           "-1/3*sqrt(7)", "2+3*sqrt(5)"}) {
    CHECK(to_string(parse_scalar(text)) == text);
  }
  CHECK(parse_scalar("sqrt(5)") == q5(0, 1, 1, 1));
  CHECK(parse_scalar("1-sqrt(5)") == q5(1, 1, -1, 1));
  CHECK(parse_scalar("-sqrt(5)") == q5(0, 1, -1, 1));
  CHECK(parse_scalar(" 1/2 + 1/2 * sqrt(5) ") == q5(1, 2, 1, 2));
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("sqrt(x)"), ParseError);
  CHECK_THROWS_AS(parse_scalar("sqrt(9)"), ArithmeticError);
}

TEST_CASE("field laws on random inputs") {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const long d = trial % 2 ? 5 : 0;
    const Scalar x = random_scalar(rng, d);
    const Scalar y = random_scalar(rng, d);
    const Scalar z = random_scalar(rng, d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    if (!x.is_zero()) CHECK(x * (Scalar(1) / x) == Scalar(1));
  }
}

TEST_CASE("sign is multiplicative and agrees with floating point") {
  Rng rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const long d = (trial % 3 == 0) ? 0 : (trial % 3 == 1 ? 2 : 7);
    const Scalar x = random_scalar(rng, d);
    const Scalar y = random_scalar(rng, d);
    CHECK(scalar_sign(x * y) == scalar_sign(x) * scalar_sign(y));
    const double v = x.to_double();
    if (std::abs(v) > 1e-9) CHECK(to_int(scalar_sign(x)) == (v > 0 ? 1 : -1));
  }
}

TEST_CASE("positive part identities") {
  Rng rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const Scalar x = random_scalar(rng, trial % 2 ? 5 : 0);
    CHECK(pos_part(x) - pos_part(-x) == x);
    CHECK((pos_part(x) * pos_part(-x)).is_zero());
    CHECK(scalar_sign(pos_part(x)) != Sign::minus);
  }
}

TEST_CASE("matrix helpers") {
  const IntMatrix m = mat({{2, 1}, {7, 4}});
  CHECK(determinant(m) == 1);
  CHECK(inverse(to_rational(m)) == to_rational(mat({{4, -1}, {-7, 2}})));
  CHECK_THROWS_AS(inverse(to_rational(mat({{1, 2}, {2, 4}}))), ArithmeticError);
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-4, 4);
    CHECK(determinant(a) == laplace_det(a));
  }
}
