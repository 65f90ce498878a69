#pragma once

// Orbits of mutation loops, empirical sign stability, realizable sign
// sequences and stretch factors.

#include <optional>
#include <vector>

#include "signstab/cone.hpp"
#include "signstab/poly.hpp"
#include "signstab/tropical.hpp"

namespace signstab {

struct OrbitEntry {
  SignSeq sign;
  /// phi^i(w) divided by its largest absolute coordinate.
  TropPoint point;
};

struct OrbitReport {
  TropPoint start;
  std::size_t window = 0;
  /// iterations[i] describes phi^i(w); iterations[0] is w itself.
  std::vector<OrbitEntry> iterations;
  std::optional<SignSeq> stable;
  SignSeq weak_stable;
  /// Set when no entry of the weak sign survives the window.
  bool weak_all_zero = false;
  /// First iteration from which the sign stays equal to `stable`.
  std::optional<std::size_t> stabilization_index;
};

/// Requires a loop. window defaults to n_max / 2 (at least 2).
OrbitReport iterate_orbit(const MutationPath& path, const TropPoint& w, std::size_t n_max,
                          std::size_t window = 0);

std::optional<SignSeq> detect_stable_sign(const OrbitReport& report, std::size_t window);

struct WeakSign {
  SignSeq sign;
  bool all_zero = false;
};
WeakSign detect_weak_stable_sign(const OrbitReport& report, std::size_t window);

/// Points of the initial chart whose sign is eps (zero entries become
/// equations); functional nu is row k_nu of the running linear map.
SignCone sign_cone(const MutationPath& path, const SignSeq& eps);
/// Witness point with sign exactly eps, if any.
std::optional<std::vector<Rational>> realize_sign(const MutationPath& path, const SignSeq& eps);

struct RealizableSign {
  SignSeq sign;
  std::vector<Rational> witness;
};

struct EnumerateOptions {
  /// Abort with Error("BranchLimitExceeded") after this many tree nodes; 0 = unlimited.
  std::size_t max_branches = 0;
  /// 0 = SIGNSTAB_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

/// All strict sign sequences attained by some point, sorted by their string form.
std::vector<RealizableSign> enumerate_realizable_signs(const MutationPath& path,
                                                       const EnumerateOptions& opts = {});

struct CompletionRow {
  SignSeq sign;
  bool realizable = false;
  IntPoly charpoly;
  SpectralEstimate rho;
};

struct StretchReport {
  SignSeq stable;
  std::vector<CompletionRow> table;
  /// Max of rho over realizable completions.
  double lambda = 0;
  double bound = 0;
  /// lambda as an exact root of the maximizing characteristic polynomial.
  std::optional<Scalar> exact_lambda;
  /// Whether all realizable completions share the same radius within tolerance.
  bool radii_all_equal = true;
};

StretchReport stretch_factor(const MutationPath& path, const SignSeq& eps_stab,
                             double tolerance = 1e-9);

/// Exact check of M x = lambda x.
bool verify_eigenpair(const IntMatrix& m, const Scalar& lambda, const TropPoint& x);

enum class ConeMembership { plus_interior, minus_interior, outside };
ConeMembership canonical_cone_membership(const Seed& seed, const TropPoint& w);
const char* to_string(ConeMembership c);

/// Thread cap from SIGNSTAB_THREADS, else the hardware concurrency.
unsigned default_thread_count();

}  // namespace signstab
