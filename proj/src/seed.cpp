#include "signstab/seed.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace signstab {

namespace {

Integer pos_part(const Integer& z) { return z > 0 ? z : Integer(0); }

}  // namespace

// ----------------------------------------------------------- permutations

bool is_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t v : sigma) {
    if (v >= sigma.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation inverse(const Permutation& sigma) {
  Permutation inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
  return inv;
}

Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const std::size_t from = cycle[i];
      const std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from >= n || to >= n || used[from]) {
        throw SeedError("InvalidPermutation", "cycles are not disjoint or out of range");
      }
      used[from] = true;
      sigma[from] = to;
    }
  }
  return sigma;
}

std::vector<std::size_t> cycle_lengths(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !seen[i]; i = sigma[i]) {
      seen[i] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

// ------------------------------------------------------------------- Seed

Seed::Seed(IntMatrix b, std::vector<std::size_t> unfrozen)
    : b_(std::move(b)), unfrozen_(std::move(unfrozen)) {
  if (!b_.is_square()) throw SeedError("InvalidSeed", "exchange matrix must be square");
  const std::size_t n = b_.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (b_(i, j) != -b_(j, i)) {
        throw SeedError("NotSkewSymmetric",
                        "exchange matrix is not skew-symmetric at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
      }
    }
  }
  std::sort(unfrozen_.begin(), unfrozen_.end());
  if (unfrozen_.empty()) throw SeedError("InvalidSeed", "seed has no unfrozen index");
  if (std::adjacent_find(unfrozen_.begin(), unfrozen_.end()) != unfrozen_.end()) {
    throw SeedError("InvalidSeed", "duplicate unfrozen index");
  }
  if (unfrozen_.back() >= n) throw SeedError("InvalidSeed", "unfrozen index out of range");
  position_.assign(n, std::nullopt);
  for (std::size_t p = 0; p < unfrozen_.size(); ++p) position_[unfrozen_[p]] = p;
}

std::vector<std::size_t> Seed::frozen() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (!position_[i]) out.push_back(i);
  return out;
}

bool Seed::is_unfrozen(std::size_t k) const { return k < size() && position_[k].has_value(); }

std::optional<std::size_t> Seed::position(std::size_t k) const {
  if (k >= size()) return std::nullopt;
  return position_[k];
}

std::size_t Seed::require_position(std::size_t k) const {
  auto p = position(k);
  if (!p) {
    throw SeedError("FrozenIndex",
                    "index " + std::to_string(k) + " is frozen or out of range");
  }
  return *p;
}

IntMatrix Seed::unfrozen_block() const {
  const std::size_t r = rank();
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = b_(unfrozen_[i], unfrozen_[j]);
  return m;
}

// ---------------------------------------------------------- MutationPath

namespace {

void check_split_preserving(const Seed& seed, const Permutation& sigma) {
  if (sigma.size() != seed.size() || !is_permutation(sigma)) {
    throw SeedError("InvalidPermutation",
                    "permutation must be a bijection of {0.." + std::to_string(seed.size()) +
                        "-1}");
  }
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seed.is_unfrozen(i) != seed.is_unfrozen(sigma[i])) {
      throw SeedError("SplitViolation",
                      "permutation maps " + std::to_string(i) + " to " +
                          std::to_string(sigma[i]) + " across the frozen/unfrozen split");
    }
  }
}

}  // namespace

MutationPath::MutationPath(Seed initial, std::vector<PathStep> steps)
    : initial_(std::move(initial)), steps_(std::move(steps)) {
  // Flips and split-preserving relabelings never change the unfrozen set, so
  // every step can be validated against the initial seed.
  for (const auto& step : steps_) {
    if (const auto* f = std::get_if<Flip>(&step)) {
      initial_.require_position(f->k);
      ++flip_count_;
    } else {
      check_split_preserving(initial_, std::get<Permute>(step).sigma);
    }
  }
}

std::vector<std::size_t> MutationPath::flip_indices() const {
  std::vector<std::size_t> out;
  for (const auto& step : steps_)
    if (const auto* f = std::get_if<Flip>(&step)) out.push_back(f->k);
  return out;
}

// -------------------------------------------------------------- mutation

Seed mutate_b(const Seed& seed, std::size_t k) {
  seed.require_position(k);
  const std::size_t n = seed.size();
  const IntMatrix& b = seed.b();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        out(i, j) = b(i, j) + pos_part(b(i, k)) * pos_part(b(k, j)) -
                    pos_part(-b(i, k)) * pos_part(-b(k, j));
      }
    }
  }
  return Seed(std::move(out), seed.unfrozen());
}

Seed apply_perm(const Seed& seed, const Permutation& sigma) {
  check_split_preserving(seed, sigma);
  const std::size_t n = seed.size();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(sigma[i], sigma[j]) = seed.b(i, j);
  return Seed(std::move(out), seed.unfrozen());
}

std::vector<Seed> seeds_along(const MutationPath& path) {
  std::vector<Seed> seeds;
  seeds.reserve(path.steps().size() + 1);
  seeds.push_back(path.initial());
  for (const auto& step : path.steps()) {
    const Seed& cur = seeds.back();
    if (const auto* f = std::get_if<Flip>(&step)) {
      seeds.push_back(mutate_b(cur, f->k));
    } else {
      seeds.push_back(apply_perm(cur, std::get<Permute>(step).sigma));
    }
  }
  return seeds;
}

bool is_loop(const MutationPath& path) {
  return seeds_along(path).back().b() == path.initial().b();
}

IntMatrix permutation_matrix(const Seed& seed, const Permutation& sigma) {
  check_split_preserving(seed, sigma);
  const std::size_t r = seed.rank();
  IntMatrix p(r, r, Integer(0));
  for (std::size_t col = 0; col < r; ++col) {
    const std::size_t u = seed.unfrozen()[col];
    p(*seed.position(sigma[u]), col) = 1;
  }
  return p;
}

// ----------------------------------------------------- C- and G-matrices

namespace {

// Common strict sign of column p, or SeedError("SignCoherenceViolation").
Sign column_sign(const IntMatrix& c, std::size_t p, std::size_t step) {
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    pos = pos || c(i, p) > 0;
    neg = neg || c(i, p) < 0;
  }
  if (pos == neg) {
    throw SeedError("SignCoherenceViolation",
                    "c-vector " + std::to_string(p) + " is not sign-coherent at step " +
                        std::to_string(step));
  }
  return pos ? Sign::plus : Sign::minus;
}

// Column relabeling M' = M P^{-1}: column pos(sigma(u)) of M' is column pos(u) of M.
IntMatrix relabel_columns(const IntMatrix& m, const Seed& seed, const Permutation& sigma) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t col = 0; col < m.cols(); ++col) {
    const std::size_t target = *seed.position(sigma[seed.unfrozen()[col]]);
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, target) = m(i, col);
  }
  return out;
}

// Runs the C and G recurrences together; G needs the tropical sign of C.
std::pair<IntMatrix, IntMatrix> c_and_g(const MutationPath& path) {
  const auto seeds = seeds_along(path);
  const std::size_t r = path.initial().rank();
  IntMatrix c = IntMatrix::identity(r);
  IntMatrix g = IntMatrix::identity(r);
  const auto& steps = path.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const Seed& seed = seeds[s];
    if (const auto* f = std::get_if<Flip>(&steps[s])) {
      const std::size_t k = f->k;
      const std::size_t p = seed.require_position(k);
      const Sign eps = column_sign(c, p, s);
      const int e = to_int(eps);
      IntMatrix c_next = c;
      IntMatrix g_next = g;
      for (std::size_t i = 0; i < r; ++i) {
        c_next(i, p) = -c(i, p);
        Integer gk = -g(i, p);
        for (std::size_t q = 0; q < r; ++q) {
          if (q == p) continue;
          const std::size_t u = seed.unfrozen()[q];
          gk += pos_part(Integer(-e * seed.b(u, k))) * g(i, q);
        }
        g_next(i, p) = std::move(gk);
      }
      for (std::size_t q = 0; q < r; ++q) {
        if (q == p) continue;
        const Integer coeff = pos_part(Integer(e * seed.b(k, seed.unfrozen()[q])));
        if (coeff == 0) continue;
        for (std::size_t i = 0; i < r; ++i) c_next(i, q) += coeff * c(i, p);
      }
      c = std::move(c_next);
      g = std::move(g_next);
    } else {
      const auto& sigma = std::get<Permute>(steps[s]).sigma;
      c = relabel_columns(c, seed, sigma);
      g = relabel_columns(g, seed, sigma);
    }
  }
  // The last column touched may never have been checked.
  for (std::size_t p = 0; p < r; ++p) column_sign(c, p, steps.size());
  return {std::move(c), std::move(g)};
}

}  // namespace

IntMatrix c_matrix(const MutationPath& path) { return c_and_g(path).first; }
IntMatrix g_matrix(const MutationPath& path) { return c_and_g(path).second; }

// --------------------------------------------------------- triangulations

IntMatrix exchange_matrix(const Triangulation& t) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < t.arcs.size(); ++i) {
    if (!index.emplace(t.arcs[i], i).second) {
      throw SeedError("InvalidTriangulation", "duplicate arc label '" + t.arcs[i] + "'");
    }
  }
  std::vector<bool> is_frozen(t.arcs.size(), false);
  for (const auto& f : t.frozen) {
    auto it = index.find(f);
    if (it == index.end()) {
      throw SeedError("InvalidTriangulation", "frozen label '" + f + "' is not an arc");
    }
    is_frozen[it->second] = true;
  }

  const std::size_t n = t.arcs.size();
  IntMatrix b(n, n, Integer(0));
  std::vector<int> slots(n, 0);
  for (const auto& tri : t.triangles) {
    std::array<std::size_t, 3> idx{};
    for (std::size_t s = 0; s < 3; ++s) {
      auto it = index.find(tri[s]);
      if (it == index.end()) {
        throw SeedError("InvalidTriangulation", "unknown arc '" + tri[s] + "' in triangle");
      }
      idx[s] = it->second;
      ++slots[idx[s]];
    }
    if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2]) {
      throw SeedError("SelfFoldedTriangle",
                      "triangle (" + tri[0] + "," + tri[1] + "," + tri[2] +
                          ") repeats an arc; self-folded triangles are not supported");
    }
    for (std::size_t s = 0; s < 3; ++s) {
      const std::size_t a = idx[s];
      const std::size_t c = idx[(s + 1) % 3];
      b(a, c) += 1;
      b(c, a) -= 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const int expected = is_frozen[i] ? 1 : 2;
    if (slots[i] != expected) {
      throw SeedError("InvalidTriangulation",
                      "arc '" + t.arcs[i] + "' occurs in " + std::to_string(slots[i]) +
                          " triangle slots, expected " + std::to_string(expected));
    }
  }
  return b;
}

Seed b_from_triangulation(const Triangulation& t) {
  IntMatrix b = exchange_matrix(t);
  std::vector<std::size_t> unfrozen;
  for (std::size_t i = 0; i < t.arcs.size(); ++i) {
    if (std::find(t.frozen.begin(), t.frozen.end(), t.arcs[i]) == t.frozen.end()) {
      unfrozen.push_back(i);
    }
  }
  return Seed(std::move(b), std::move(unfrozen));
}

}  // namespace signstab
