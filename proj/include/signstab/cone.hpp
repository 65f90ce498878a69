#pragma once

// Exact feasibility of homogeneous systems of strict / weak linear
// inequalities and equations, with a rational witness point.

#include <optional>
#include <vector>

#include "signstab/exact.hpp"

namespace signstab {

enum class Relation { greater, greater_equal, equal };

struct Constraint {
  std::vector<Rational> functional;
  Relation relation;
};

/// {x : f.x rel 0 for every constraint} in dimension `dim`.
struct SignCone {
  std::size_t dim = 0;
  std::vector<Constraint> constraints;

  void add(std::vector<Rational> f, Relation rel);
  /// Adds s*f > 0 for a strict sign s.
  void add_signed(std::vector<Rational> f, Sign s);
};

/// True iff x satisfies every constraint of the cone.
bool contains(const SignCone& cone, const std::vector<Rational>& x);

/// Fourier-Motzkin elimination. Returns nullopt when the constraint count
/// would exceed `limit` at some stage (the caller then falls back to simplex).
std::optional<std::optional<std::vector<Rational>>> fm_witness(const SignCone& cone,
                                                               std::size_t limit = 4000);
/// Two-phase rational simplex with Bland's rule.
std::optional<std::vector<Rational>> simplex_witness(const SignCone& cone);

/// Fourier-Motzkin for dim <= 8 (falling back on blow-up), simplex above.
std::optional<std::vector<Rational>> cone_witness(const SignCone& cone);
inline bool cone_feasible(const SignCone& cone) { return cone_witness(cone).has_value(); }

}  // namespace signstab
