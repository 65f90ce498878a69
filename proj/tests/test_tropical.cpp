#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

MutationPath a2() {
  return MutationPath(seed_of({{0, 1}, {-1, 0}}), {Flip{0}, Flip{1}, Flip{0}});
}

MutationPath kronecker(long l) {
  return MutationPath(seed_of({{0, -l}, {l, 0}}), {Flip{0}, Permute{{1, 0}}});
}

std::vector<long long> to_ll(const TropPoint& w) {
  std::vector<long long> out;
  for (const auto& x : w) out.push_back(x.as_rational()->get_num().get_si());
  return out;
}

TropPoint random_int_point(Rng& rng, std::size_t dim, long bound) {
  TropPoint w;
  for (std::size_t i = 0; i < dim; ++i) w.emplace_back(rng.uniform(-bound, bound));
  return w;
}

}  // namespace

TEST_CASE("sign sequence text forms") {
  const SignSeq s = parse_sign_seq("(+, +, -, 0)");
  CHECK(to_string(s) == "++-0");
  CHECK(to_display_string(s) == "(+,+,-,0)");
  CHECK(parse_sign_seq("[+ - 0]") == parse_sign_seq("+-0"));
  CHECK_THROWS_AS(parse_sign_seq("+x"), ParseError);
  CHECK_FALSE(is_strict(s));
  CHECK(is_strict(parse_sign_seq("+-")));
}

TEST_CASE("the zeroing order") {
  CHECK(sign_leq(parse_sign_seq("+0-"), parse_sign_seq("++-")));
  CHECK(sign_leq(parse_sign_seq("000"), parse_sign_seq("+-+")));
  CHECK_THROWS_AS(sign_leq(parse_sign_seq("+0-"), parse_sign_seq("+--0")), DimensionError);
  CHECK_FALSE(sign_leq(parse_sign_seq("+-"), parse_sign_seq("++")));
  CHECK_FALSE(sign_leq(parse_sign_seq("++"), parse_sign_seq("+0")));
  CHECK(sign_geq(parse_sign_seq("++-"), parse_sign_seq("+0-")));
  const auto comps = strict_completions(parse_sign_seq("+0-0"));
  REQUIRE(comps.size() == 4);
  CHECK(to_string(comps.front()) == "++-+");
  CHECK(to_string(comps.back()) == "+---");
  for (const auto& c : comps) CHECK(sign_leq(parse_sign_seq("+0-0"), c));
}

TEST_CASE("trop_mutate examples") {
  const Seed up = seed_of({{0, 3}, {-3, 0}});
  const Seed down = seed_of({{0, -3}, {3, 0}});
  CHECK(trop_mutate(up, 0, ints({2, 3})) == ints({-2, 3}));
  CHECK(trop_mutate(down, 0, ints({2, 3})) == ints({-2, 9}));
  CHECK(trop_mutate(down, 0, ints({-2, 3})) == ints({2, 3}));
  CHECK(trop_mutate(down, 1, ints({2, -1})) == ints({-1, 1}));
  // Frozen coordinates are not part of the point.
  const Seed framed(mat({{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}}), {0, 1});
  CHECK(trop_mutate(framed, 0, ints({1, 4})) == ints({-1, 4}));
  CHECK(trop_mutate(framed, 1, ints({5, -2})) == ints({5, 2}));
  CHECK(trop_mutate(framed, 1, ints({5, 2})) == ints({7, -2}));
}

TEST_CASE("edge matrices") {
  const Seed s = seed_of({{0, -3}, {3, 0}});
  CHECK(edge_matrix(s, 0, Sign::plus) == mat({{-1, 0}, {3, 1}}));
  CHECK(edge_matrix(s, 0, Sign::minus) == mat({{-1, 0}, {0, 1}}));
  CHECK(edge_matrix(s, 1, Sign::plus) == mat({{1, 0}, {0, -1}}));
  CHECK(edge_matrix(s, 1, Sign::minus) == mat({{1, 3}, {0, -1}}));
  CHECK_THROWS_AS(edge_matrix(s, 0, Sign::zero), NonStrictSign);
}

TEST_CASE("transport along the A2 path") {
  const Transport t = transport(a2(), ints({1, 1}));
  REQUIRE(t.intermediates.size() == 3);
  CHECK(t.intermediates[0] == ints({1, 1}));
  CHECK(t.intermediates[1] == ints({-1, 1}));
  CHECK(t.intermediates[2] == ints({-1, -1}));
  CHECK(t.final == ints({1, -2}));
  CHECK(to_string(sign_of_path(a2(), ints({1, 1}))) == "++-");
  CHECK(to_string(sign_of_path(a2(), ints({0, 1}))) == "0+0");
  CHECK_THROWS_AS(transport(a2(), ints({1, 1, 1})), DimensionError);
}

TEST_CASE("Kronecker presentation matrices") {
  for (long l = 1; l <= 5; ++l) {
    CHECK(presentation_matrix_for_sign(kronecker(l), parse_sign_seq("+")) == mat({{l, 1}, {-1, 0}}));
    CHECK(presentation_matrix_for_sign(kronecker(l), parse_sign_seq("-")) == mat({{0, 1}, {-1, 0}}));
  }
  CHECK(presentation_matrix_at_point(kronecker(3), ints({2, 5})) == mat({{3, 1}, {-1, 0}}));
  try {
    presentation_matrix_at_point(kronecker(3), ints({0, 5}));
    FAIL("wall point accepted");
  } catch (const NonStrictSign& e) {
    CHECK(e.positions() == std::vector<std::size_t>{0});
  }
  CHECK_THROWS_AS(presentation_matrix_for_sign(kronecker(3), parse_sign_seq("0")), NonStrictSign);
  CHECK_THROWS_AS(presentation_matrix_for_sign(kronecker(3), parse_sign_seq("++")), DimensionError);
}

TEST_CASE("sign_of_path agrees with a 64-bit oracle") {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Seed s = random_seed(rng, 5, 3);
    const MutationPath p = random_path(rng, s, 8);
    const TropPoint w = random_int_point(rng, s.rank(), 6);
    CHECK(to_string(sign_of_path(p, w)) == oracle_sign(p, to_ll(w)));
  }
}

TEST_CASE("the presentation matrix is the linear branch at the point") {
  Rng rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const Seed s = random_seed(rng, 5, 3);
    const MutationPath p = random_path(rng, s, 8);
    const TropPoint w = random_point(rng, s.rank(), trial % 2 ? 5 : 0);
    const SignSeq eps = sign_of_path(p, w);
    if (!is_strict(eps)) continue;
    const IntMatrix e = presentation_matrix_for_sign(p, eps);
    CHECK(apply(e, std::span<const Scalar>(w)) == transport(p, w).final);
    const Integer det = determinant(e);
    CHECK((det == 1 || det == -1));
  }
}

TEST_CASE("both branches agree on the wall") {
  Rng rng(33);
  for (int trial = 0; trial < 300; ++trial) {
    const Seed s = random_seed(rng, 5, 3);
    const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(s.rank()) - 1));
    TropPoint w = random_point(rng, s.rank(), 0);
    w[k] = Scalar(0);
    const auto span = std::span<const Scalar>(w);
    CHECK(signstab::apply(edge_matrix(s, k, Sign::plus), span) == signstab::apply(edge_matrix(s, k, Sign::minus), span));
    CHECK(signstab::apply(edge_matrix(s, k, Sign::plus), span) == trop_mutate(s, k, w));
  }
}

TEST_CASE("transport is positively homogeneous and flips are involutive") {
  Rng rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const Seed s = random_seed(rng, 5, 3);
    const MutationPath p = random_path(rng, s, 8);
    const TropPoint w = random_point(rng, s.rank(), trial % 3 ? 0 : 5);
    const Scalar c(ratio(rng.uniform(1, 9), rng.uniform(1, 9)));
    CHECK(transport(p, scaled(w, c)).final == scaled(transport(p, w).final, c));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(s.rank()) - 1));
    CHECK(trop_mutate(mutate_b(s, k), k, trop_mutate(s, k, w)) == w);
  }
}

TEST_CASE("relabeling moves coordinates") {
  const Seed s = seed_of({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  CHECK(trop_permute(s, {1, 2, 0}, ints({7, 8, 9})) == ints({9, 7, 8}));
  CHECK(to_string(ints({1, -2})) == "(1, -2)");
}
