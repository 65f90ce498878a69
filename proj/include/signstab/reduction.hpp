#pragma once

// Cone compatibility of flips, hereditariness, reduced skeletons and cluster
// reduction by freezing.

#include <utility>
#include <vector>

#include "signstab/stability.hpp"

namespace signstab {

/// Rational polyhedral cone given by generators in the initial chart.
struct Cone {
  std::vector<TropPoint> generators;
};

struct CompatibilityReport {
  /// compatible[nu]: coordinate k_nu vanishes at the nu-th flip for every generator.
  std::vector<bool> compatible;
  /// trace[g][nu]: generator g just before the nu-th flip.
  std::vector<std::vector<TropPoint>> trace;
  /// Set when generators have differing sign sequences along the path.
  bool mixed_sign_classes = false;
};

CompatibilityReport edge_compatibility(const MutationPath& path, const Cone& cone);

struct HereditaryReport {
  bool passes = true;
  /// Compatible flip positions where the stable sign is 0.
  std::vector<std::size_t> violations;
  std::vector<bool> compatible;
};

HereditaryReport hereditary_check(const MutationPath& path, const Cone& cone,
                                  const SignSeq& eps_stab);

/// (flip position, flip index) of every compatible flip.
std::vector<std::pair<std::size_t, std::size_t>> reduced_subsequence(const MutationPath& path,
                                                                     const Cone& cone);

/// Declares the indices in k frozen.
Seed freeze(const Seed& seed, const std::vector<std::size_t>& k);
/// Restriction of a point of `seed` to the unfrozen indices j.
TropPoint project_point(const Seed& seed, const TropPoint& w, const std::vector<std::size_t>& j);

struct BlockRow {
  SignSeq sign;
  bool zero_block = true;
  bool matches_frozen = true;
  SpectralEstimate rho_full;
  SpectralEstimate rho_j;
};

struct BlockReport {
  std::vector<std::size_t> j;
  std::vector<std::size_t> k;
  std::vector<BlockRow> rows;
  bool zero_block = true;
  bool matches_frozen = true;
  /// Largest |rho(E) - rho(E|_J)| over all realizable signs.
  double max_radius_gap = 0;
};

/// For a path flipping only inside J = unfrozen \ K: checks, for every
/// realizable strict sign, that the (J, K) block of E is zero, that E|_J is
/// the presentation matrix of the same path on the frozen seed, and compares
/// spectral radii.
BlockReport block_structure_check(const MutationPath& path, const std::vector<std::size_t>& k,
                                  const EnumerateOptions& opts = {});

}  // namespace signstab
