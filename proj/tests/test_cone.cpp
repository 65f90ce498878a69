#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

SignCone random_cone(Rng& rng, std::size_t dim) {
  SignCone c{dim, {}};
  const long count = rng.uniform(1, 3 * static_cast<long>(dim));
  for (long i = 0; i < count; ++i) {
    std::vector<Rational> f;
    for (std::size_t j = 0; j < dim; ++j) f.emplace_back(rng.uniform(-3, 3));
    const long r = rng.uniform(0, 5);
    c.add(std::move(f), r < 3 ? Relation::greater : r < 5 ? Relation::greater_equal : Relation::equal);
  }
  return c;
}

bool has_strict(const SignCone& c) {
  return std::any_of(c.constraints.begin(), c.constraints.end(),
                     [](const Constraint& k) { return k.relation == Relation::greater; });
}

}  // namespace

TEST_CASE("small cones") {
  SignCone opposite{1, {}};
  opposite.add(rats({1}), Relation::greater);
  opposite.add(rats({-1}), Relation::greater);
  CHECK_FALSE(cone_feasible(opposite));
  CHECK_FALSE(simplex_witness(opposite).has_value());

  SignCone diagonal{2, {}};
  diagonal.add(rats({1, 0}), Relation::greater);
  diagonal.add(rats({0, 1}), Relation::greater_equal);
  diagonal.add(rats({1, -1}), Relation::equal);
  const auto w = cone_witness(diagonal);
  REQUIRE(w.has_value());
  CHECK(contains(diagonal, *w));
  CHECK((*w)[0] == (*w)[1]);
  CHECK((*w)[0] > 0);

  // x > 0, y > 0, x + y = 0 has only the origin, which is not strict.
  SignCone pinched{2, {}};
  pinched.add(rats({1, 0}), Relation::greater);
  pinched.add(rats({0, 1}), Relation::greater_equal);
  pinched.add(rats({1, 1}), Relation::equal);
  CHECK_FALSE(cone_feasible(pinched));

  // Weak constraints alone are always met by the origin.
  SignCone weak{3, {}};
  weak.add(rats({1, 2, 3}), Relation::greater_equal);
  weak.add(rats({-1, -2, -3}), Relation::greater_equal);
  CHECK(cone_feasible(weak));

  SignCone signed_cone{2, {}};
  signed_cone.add_signed(rats({1, 1}), Sign::minus);
  const auto v = cone_witness(signed_cone);
  REQUIRE(v.has_value());
  CHECK((*v)[0] + (*v)[1] < 0);
}

TEST_CASE("a thin cone is found exactly") {
  // 1000 x - 999 y > 0 and -1001 x + 1000 y > 0 meet only in a sliver.
  SignCone c{2, {}};
  c.add(rats({1000, -999}), Relation::greater);
  c.add(rats({-1001, 1000}), Relation::greater);
  c.add(rats({1, 0}), Relation::greater);
  const auto fm = fm_witness(c);
  REQUIRE(fm.has_value());
  REQUIRE(fm->has_value());
  CHECK(contains(c, **fm));
  const auto sx = simplex_witness(c);
  REQUIRE(sx.has_value());
  CHECK(contains(c, *sx));
}

TEST_CASE("Fourier-Motzkin and simplex agree on random cones") {
  Rng rng(41);
  int feasible = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 6));
    const SignCone c = random_cone(rng, dim);
    const auto fm = fm_witness(c);
    const auto sx = simplex_witness(c);
    if (sx) CHECK(contains(c, *sx));
    if (!fm) continue;  // elimination blew up; simplex alone decides
    CHECK(fm->has_value() == sx.has_value());
    if (fm->has_value()) {
      ++feasible;
      CHECK(contains(c, **fm));
    }
    // Scaling a witness keeps it inside.
    if (sx && has_strict(c)) {
      std::vector<Rational> y = *sx;
      for (auto& v : y) v *= 7;
      CHECK(contains(c, y));
    }
  }
  // Both outcomes must actually occur for the comparison to mean anything.
  CHECK(feasible > 50);
  CHECK(feasible < 550);
}

TEST_CASE("simplex handles larger dimensions") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const SignCone c = random_cone(rng, 12);
    const auto w = cone_witness(c);
    if (w) CHECK(contains(c, *w));
    const auto fm = fm_witness(c, 20000);
    if (fm) CHECK(fm->has_value() == w.has_value());
  }
}

TEST_CASE("a known feasible high-dimensional cone") {
  // Strict constraints all satisfied by (1, 2, ..., 12).
  Rng rng(43);
  const std::size_t dim = 12;
  std::vector<Rational> target;
  for (std::size_t i = 0; i < dim; ++i) target.emplace_back(static_cast<long>(i + 1));
  SignCone c{dim, {}};
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> f;
    Rational dot(0);
    for (std::size_t j = 0; j < dim; ++j) {
      f.emplace_back(rng.uniform(-3, 3));
      dot += f.back() * target[j];
    }
    if (dot == 0) continue;
    if (dot < 0)
      for (auto& x : f) x = -x;
    c.add(std::move(f), Relation::greater);
  }
  const auto w = cone_witness(c);
  REQUIRE(w.has_value());
  CHECK(contains(c, *w));
}
