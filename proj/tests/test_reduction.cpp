#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

MutationPath kronecker(long l) {
  return MutationPath(seed_of({{0, -l}, {l, 0}}), {Flip{0}, Permute{{1, 0}}});
}

Cone cone_of(std::initializer_list<TropPoint> g) { return Cone{std::vector<TropPoint>(g)}; }

/// Random seed of rank 2..5 with a nonempty proper subset K of indices.
std::pair<Seed, std::vector<std::size_t>> random_split(Rng& rng) {
  const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
  const Seed s(random_skew(rng, n, 3), iota(n));
  std::vector<std::size_t> k;
  for (std::size_t i = 0; i < n; ++i)
    if (rng.coin()) k.push_back(i);
  if (k.empty()) k.push_back(n - 1);
  if (k.size() == n) k.pop_back();
  return {s, k};
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(k.begin(), k.end(), i) == k.end()) out.push_back(i);
  return out;
}

}  // namespace

TEST_CASE("annulus compatibility") {
  const Cone c = cone_from_json(load_json_file(data_file("annulus_cone.json")));
  const auto first = edge_compatibility(load_path(data_file("annulus_flip1_path.json")), c);
  CHECK(first.compatible == std::vector<bool>{true});
  const auto second = edge_compatibility(load_path(data_file("annulus_flip2_path.json")), c);
  CHECK(second.compatible == std::vector<bool>{false});
  CHECK(reduced_subsequence(load_path(data_file("annulus_flip2_path.json")), c).empty());
  const auto kept = reduced_subsequence(load_path(data_file("annulus_flip1_path.json")), c);
  REQUIRE(kept.size() == 1);
  CHECK(kept[0] == std::pair<std::size_t, std::size_t>{0, 0});
}

TEST_CASE("degenerate cones") {
  const MutationPath p = kronecker(3);
  const auto zero = edge_compatibility(p, cone_of({ints({0, 0})}));
  CHECK(zero.compatible == std::vector<bool>{true});
  CHECK_THROWS_AS(edge_compatibility(p, Cone{}), Error);
  CHECK_THROWS_AS(edge_compatibility(p, cone_of({ints({1, 2, 3})})), DimensionError);
  // Generators on both sides of the wall.
  const auto mixed = edge_compatibility(p, cone_of({ints({1, 0}), ints({-1, 0})}));
  CHECK(mixed.compatible == std::vector<bool>{false});
  CHECK(mixed.mixed_sign_classes);
}

TEST_CASE("compatible flips of the 3-boundary loop") {
  const MutationPath p = load_path(data_file("three_boundary_path.json"));
  const Cone c = cone_from_json(load_json_file(data_file("three_boundary_cone.json")));
  const auto report = edge_compatibility(p, c);
  std::vector<std::size_t> positions;
  for (std::size_t nu = 0; nu < report.compatible.size(); ++nu)
    if (report.compatible[nu]) positions.push_back(nu);
  CHECK(positions == std::vector<std::size_t>{0, 5, 7, 14});
  std::vector<std::size_t> indices;
  for (const auto& [pos, idx] : reduced_subsequence(p, c)) indices.push_back(idx);
  CHECK(indices == std::vector<std::size_t>{6, 7, 5, 10});

  // Coordinates of the generators just before flips 4, 5, 11 and 12.
  CHECK(report.trace[2][3][4] == Scalar(1));
  CHECK(report.trace[1][4][8] == Scalar(1));
  CHECK(report.trace[0][10][2] == Scalar(-1));
  CHECK(report.trace[0][11][1] == Scalar(-1));

  const SignSeq stab = parse_sign_seq("+++00-+--+00-+++");
  const auto h = hereditary_check(p, c, stab);
  CHECK(h.passes);
  CHECK(h.violations.empty());
}

TEST_CASE("hereditary violations") {
  const MutationPath p = kronecker(3);
  const Cone c = cone_of({ints({0, 1})});
  const auto bad = hereditary_check(p, c, parse_sign_seq("0"));
  CHECK_FALSE(bad.passes);
  CHECK(bad.violations == std::vector<std::size_t>{0});
  CHECK(hereditary_check(p, c, parse_sign_seq("+")).passes);
  CHECK_THROWS_AS(hereditary_check(p, c, parse_sign_seq("++")), DimensionError);
}

TEST_CASE("freezing and projection") {
  const Seed s = seed_of({{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}});
  const Seed f = freeze(s, {1});
  CHECK(f.unfrozen() == std::vector<std::size_t>{0, 2});
  CHECK(f.b() == s.b());
  CHECK_THROWS_AS(freeze(f, {1}), SeedError);
  CHECK(project_point(s, ints({7, 8, 9}), {0, 2}) == ints({7, 9}));
  CHECK_THROWS_AS(project_point(f, ints({7, 8}), {1}), SeedError);
}

TEST_CASE("block structure on a rank-4 seed") {
  // J = {0, 1} carries a 3-Kronecker block, K = {2, 3} is coupled to it.
  const Seed s = seed_of({{0, -3, 1, -2}, {3, 0, 2, 1}, {-1, -2, 0, 1}, {2, -1, -1, 0}});
  const MutationPath p(s, {Flip{0}, Flip{1}, Flip{0}});
  const BlockReport r = block_structure_check(p, {2, 3});
  CHECK(r.j == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(r.rows.empty());
  CHECK(r.zero_block);
  CHECK(r.matches_frozen);
  CHECK(r.max_radius_gap < 1e-9);
  CHECK_THROWS_AS(block_structure_check(MutationPath(s, {Flip{2}}), {2, 3}), SeedError);
}

TEST_CASE("J-coordinates evolve on their own") {
  Rng rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [s, k] = random_split(rng);
    const auto j = complement(s.size(), k);
    const MutationPath p = random_path(rng, s, 8, j);
    const MutationPath reduced(freeze(s, k), p.steps());
    const TropPoint w = random_point(rng, s.rank());
    CHECK(project_point(s, transport(p, w).final, j) ==
          transport(reduced, project_point(s, w, j)).final);
    CHECK(sign_of_path(p, w) == sign_of_path(reduced, project_point(s, w, j)));
  }
}

TEST_CASE("freezing keeps the realizable signs") {
  Rng rng(62);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [s, k] = random_split(rng);
    const auto j = complement(s.size(), k);
    const MutationPath p = random_path(rng, s, 6, j);
    const MutationPath reduced(freeze(s, k), p.steps());
    CHECK(sign_strings(enumerate_realizable_signs(p)) ==
          sign_strings(enumerate_realizable_signs(reduced)));
  }
}

TEST_CASE("block structure on random splits") {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [s, k] = random_split(rng);
    const MutationPath p = random_path(rng, s, 6, complement(s.size(), k));
    const BlockReport r = block_structure_check(p, k);
    CHECK(r.zero_block);
    CHECK(r.matches_frozen);
    CHECK(r.max_radius_gap < 1e-9);
  }
}

TEST_CASE("the trace follows transport") {
  Rng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const Seed s = random_seed(rng, 5, 3);
    const MutationPath p = random_path(rng, s, 8);
    const Cone c = cone_of({random_point(rng, s.rank()), random_point(rng, s.rank())});
    const auto report = edge_compatibility(p, c);
    for (std::size_t g = 0; g < c.generators.size(); ++g) {
      const Transport t = transport(p, c.generators[g]);
      std::size_t nu = 0;
      for (std::size_t step = 0; step < p.steps().size(); ++step) {
        if (!std::holds_alternative<Flip>(p.steps()[step])) continue;
        CHECK(report.trace[g][nu] == t.intermediates[step]);
        ++nu;
      }
    }
  }
}
