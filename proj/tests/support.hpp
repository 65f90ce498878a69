#pragma once

// Shared fixtures for the test binaries: random generators, small
// independent oracles and the bundled example data.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "signstab/io.hpp"

namespace testing {

using namespace signstab;

inline std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(SIGNSTAB_DATA_DIR) / name;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  bool coin(int one_in = 2) { return uniform(0, one_in - 1) == 0; }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

/// n/d in lowest terms; mpq_class does not reduce on construction.
inline Rational ratio(long n, long d = 1) {
  Rational q{Integer(n), Integer(d)};
  q.canonicalize();
  return q;
}

inline Rational random_rational(Rng& rng, long num = 20, long den = 6) {
  return ratio(rng.uniform(-num, num), rng.uniform(1, den));
}

inline Scalar random_scalar(Rng& rng, long radicand) {
  if (radicand == 0) return Scalar(random_rational(rng));
  return Scalar(QuadExt(random_rational(rng), random_rational(rng), radicand));
}

inline IntMatrix random_skew(Rng& rng, std::size_t n, long bound) {
  IntMatrix b(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      b(i, j) = rng.uniform(-bound, bound);
      b(j, i) = -b(i, j);
    }
  return b;
}

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

/// All-unfrozen seed of rank in [1, max_rank].
inline Seed random_seed(Rng& rng, std::size_t max_rank, long bound) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_rank)));
  return Seed(random_skew(rng, n, bound), iota(n));
}

/// Random permutation of `indices` extended by the identity elsewhere.
inline Permutation random_perm_on(Rng& rng, std::size_t n, const std::vector<std::size_t>& indices) {
  Permutation sigma = iota(n);
  std::vector<std::size_t> images = indices;
  std::shuffle(images.begin(), images.end(), rng.engine());
  for (std::size_t i = 0; i < indices.size(); ++i) sigma[indices[i]] = images[i];
  return sigma;
}

/// Random path of length <= max_len flipping in `directions`, with occasional
/// split-preserving relabelings.
inline MutationPath random_path(Rng& rng, const Seed& seed, std::size_t max_len,
                                const std::vector<std::size_t>& directions, bool perms = true) {
  const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_len)));
  std::vector<PathStep> steps;
  for (std::size_t s = 0; s < len; ++s) {
    if (perms && rng.coin(5)) {
      steps.push_back(Permute{random_perm_on(rng, seed.size(), directions)});
    } else {
      steps.push_back(Flip{directions[rng.uniform(0, static_cast<long>(directions.size()) - 1)]});
    }
  }
  return MutationPath(seed, steps);
}

inline MutationPath random_path(Rng& rng, const Seed& seed, std::size_t max_len) {
  return random_path(rng, seed, max_len, seed.unfrozen());
}

inline TropPoint random_point(Rng& rng, std::size_t dim, long radicand = 0) {
  TropPoint w;
  for (std::size_t i = 0; i < dim; ++i) w.push_back(random_scalar(rng, radicand));
  return w;
}

inline TropPoint ints(std::initializer_list<long> v) {
  TropPoint w;
  for (long x : v) w.emplace_back(x);
  return w;
}

inline IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Seed seed_of(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix b = mat(rows);
  const std::size_t n = b.rows();
  return Seed(std::move(b), iota(n));
}

inline std::set<std::string> sign_strings(const std::vector<RealizableSign>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(to_string(s.sign));
  return out;
}

// ----------------------------------------------------------------- oracles

/// Tropical transport of an integer point with plain 64-bit arithmetic,
/// written directly from the coordinate formulas (no library code).
/// Returns the sign string of the path at w.
inline std::string oracle_sign(const MutationPath& path, std::vector<long long> x) {
  const Seed& s0 = path.initial();
  const std::size_t n = s0.size();
  std::vector<std::vector<long long>> b(n, std::vector<long long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = s0.b(i, j).get_si();
  // x is indexed by full index; frozen entries are ignored.
  std::vector<long long> full(n, 0);
  for (std::size_t p = 0; p < s0.rank(); ++p) full[s0.unfrozen()[p]] = x[p];
  std::string out;
  for (const auto& step : path.steps()) {
    if (const auto* f = std::get_if<Flip>(&step)) {
      const std::size_t k = f->k;
      const long long xk = full[k];
      const int sg = (xk > 0) - (xk < 0);
      out.push_back(sg > 0 ? '+' : sg < 0 ? '-' : '0');
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k || !s0.is_unfrozen(i)) continue;
        full[i] += std::max(0LL, sg * b[i][k]) * xk;
      }
      full[k] = -xk;
      std::vector<std::vector<long long>> nb = b;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (i == k || j == k) {
            nb[i][j] = -b[i][j];
          } else {
            nb[i][j] = b[i][j] + std::max(0LL, b[i][k]) * std::max(0LL, b[k][j]) -
                       std::max(0LL, -b[i][k]) * std::max(0LL, -b[k][j]);
          }
        }
      b = std::move(nb);
    } else {
      const auto& sigma = std::get<Permute>(step).sigma;
      std::vector<long long> nx(n);
      std::vector<std::vector<long long>> nb(n, std::vector<long long>(n));
      for (std::size_t i = 0; i < n; ++i) {
        nx[sigma[i]] = full[i];
        for (std::size_t j = 0; j < n; ++j) nb[sigma[i]][sigma[j]] = b[i][j];
      }
      full = std::move(nx);
      b = std::move(nb);
    }
  }
  return out;
}

/// Strict signs found by evaluating the path on a dense integer grid and on
/// scaled grid points nudged in every direction.
inline std::set<std::string> brute_force_signs(const MutationPath& path, long radius = 8) {
  const std::size_t r = path.initial().rank();
  // Thin cones hug irrational rays; in low rank a much finer grid is cheap.
  if (r == 1) radius = std::min(radius, 2L);
  if (r == 2) radius = std::max(radius, 120L);
  std::set<std::string> out;
  std::vector<long long> x(r);
  std::vector<long long> nudge(r);
  std::function<void(std::size_t)> grid = [&](std::size_t d) {
    if (d == r) {
      std::function<void(std::size_t)> around = [&](std::size_t e) {
        if (e == r) {
          std::vector<long long> y(r);
          for (std::size_t i = 0; i < r; ++i) y[i] = 1000 * x[i] + nudge[i];
          const std::string s = oracle_sign(path, y);
          if (s.find('0') == std::string::npos) out.insert(s);
          return;
        }
        for (long v = -1; v <= 1; ++v) {
          nudge[e] = v;
          around(e + 1);
        }
      };
      around(0);
      return;
    }
    for (long v = -radius; v <= radius; ++v) {
      x[d] = v;
      grid(d + 1);
    }
  };
  grid(0);
  return out;
}

/// Integer multiple of a rational witness, for the 64-bit oracle.
inline std::vector<long long> clear_denominators(const std::vector<Rational>& w) {
  Integer l(1);
  for (const auto& x : w) l = lcm(l, Integer(x.get_den()));
  std::vector<long long> out;
  for (const auto& x : w) out.push_back(Integer(x.get_num() * (l / x.get_den())).get_si());
  return out;
}

/// det(M) by cofactor expansion; only for small matrices.
inline Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Integer(1);
  if (n == 1) return m(0, 0);
  Integer total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Integer term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

}  // namespace testing
