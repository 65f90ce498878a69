#pragma once

// Seeds, matrix mutation, relabelings, edge paths in the labeled exchange
// graph, C-/G-matrices and exchange matrices of ideal triangulations.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "signstab/matrix.hpp"

namespace signstab {

/// Images of 0..n-1; images[i] = sigma(i).
using Permutation = std::vector<std::size_t>;

bool is_permutation(const Permutation& sigma);
Permutation inverse(const Permutation& sigma);
/// Builds a permutation of {0..n-1} from disjoint cycles.
Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);
/// Lengths of the cycles of sigma, fixed points included.
std::vector<std::size_t> cycle_lengths(const Permutation& sigma);

/**
 * A skew-symmetric integer exchange matrix on indices {0..n-1} together with
 * the (nonempty) set of unfrozen indices.
 *
 * Tropical points only see the unfrozen indices; coordinate position p of a
 * point corresponds to unfrozen()[p] (sorted ascending).
 */
class Seed {
 public:
  Seed(IntMatrix b, std::vector<std::size_t> unfrozen);

  std::size_t size() const { return b_.rows(); }
  const IntMatrix& b() const { return b_; }
  const Integer& b(std::size_t i, std::size_t j) const { return b_(i, j); }
  const std::vector<std::size_t>& unfrozen() const { return unfrozen_; }
  std::vector<std::size_t> frozen() const;
  std::size_t rank() const { return unfrozen_.size(); }

  bool is_unfrozen(std::size_t k) const;
  /// Coordinate position of an unfrozen index.
  std::optional<std::size_t> position(std::size_t k) const;
  /// Position of k, or SeedError("FrozenIndex") when k is frozen/out of range.
  std::size_t require_position(std::size_t k) const;
  /// B restricted to unfrozen rows and columns, in position order.
  IntMatrix unfrozen_block() const;

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.unfrozen_ == b.unfrozen_ && a.b_ == b.b_;
  }

 private:
  IntMatrix b_;
  std::vector<std::size_t> unfrozen_;
  std::vector<std::optional<std::size_t>> position_;
};

struct Flip {
  std::size_t k;
};
struct Permute {
  Permutation sigma;
};
using PathStep = std::variant<Flip, Permute>;

/// An initial seed and a list of flips (horizontal edges) and relabelings
/// (vertical edges). Every step is validated on construction.
class MutationPath {
 public:
  MutationPath(Seed initial, std::vector<PathStep> steps);

  const Seed& initial() const { return initial_; }
  const std::vector<PathStep>& steps() const { return steps_; }
  /// h(gamma): the number of flips.
  std::size_t flip_count() const { return flip_count_; }
  /// Flip indices in path order.
  std::vector<std::size_t> flip_indices() const;

 private:
  Seed initial_;
  std::vector<PathStep> steps_;
  std::size_t flip_count_ = 0;
};

/// Fomin-Zelevinsky matrix mutation in direction k (must be unfrozen).
Seed mutate_b(const Seed& seed, std::size_t k);
/// Relabeling b'_{sigma(i) sigma(j)} = b_{ij}; sigma must preserve the unfrozen set.
Seed apply_perm(const Seed& seed, const Permutation& sigma);
/// Seeds before each step plus the final one (size steps + 1).
std::vector<Seed> seeds_along(const MutationPath& path);
bool is_loop(const MutationPath& path);

/// Permutation matrix on unfrozen positions: entry (pos(sigma(u)), pos(u)) = 1.
IntMatrix permutation_matrix(const Seed& seed, const Permutation& sigma);

/// C-matrix at the end of the path (columns are c-vectors).
IntMatrix c_matrix(const MutationPath& path);
/// G-matrix at the end of the path (columns are g-vectors).
IntMatrix g_matrix(const MutationPath& path);

/**
 * An ideal triangulation without self-folded triangles. Each triangle lists
 * its three sides so that consecutive entries (a, b) contribute b_{ab} = +1
 * (and b_{ba} = -1); the last side is followed by the first.
 */
struct Triangulation {
  std::vector<std::string> arcs;
  std::vector<std::string> frozen;
  std::vector<std::array<std::string, 3>> triangles;
};

/// Validates the triangulation and returns B = sum over triangles, indexed by
/// the order of `arcs`.
IntMatrix exchange_matrix(const Triangulation& t);
/// Seed with unfrozen = arcs not listed as frozen.
Seed b_from_triangulation(const Triangulation& t);

}  // namespace signstab
