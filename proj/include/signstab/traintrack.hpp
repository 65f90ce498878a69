#pragma once

// Local train-track pieces: switch conditions, pair-of-pants measures and
// annulus coordinates.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "signstab/exact.hpp"

namespace signstab {

/// incoming = outgoing.first + outgoing.second in any measure.
struct Switch {
  std::string incoming;
  std::pair<std::string, std::string> outgoing;
};

struct TrainTrack {
  std::vector<std::string> edges;
  std::vector<Switch> switches;
  std::vector<std::string> boundary_edges;
};

using Measure = std::map<std::string, Rational>;

struct MeasureCheck {
  bool valid = true;
  /// Indices into track.switches whose condition fails.
  std::vector<std::size_t> violating_switches;
  /// Edges carrying a negative weight.
  std::vector<std::string> negative_edges;
};

/// Throws ParseError for unknown edge labels or edges missing from the measure.
MeasureCheck validate_measure(const TrainTrack& track, const Measure& m);

/// Edge weights e11, e12, e13, e22, e23, e33.
struct PantsMeasures {
  std::array<Rational, 6> e;
  const Rational& e11() const { return e[0]; }
  const Rational& e12() const { return e[1]; }
  const Rational& e13() const { return e[2]; }
  const Rational& e22() const { return e[3]; }
  const Rational& e23() const { return e[4]; }
  const Rational& e33() const { return e[5]; }
};

PantsMeasures pants_measures(const Rational& m1, const Rational& m2, const Rational& m3);

struct BoundarySums {
  std::array<Rational, 3> s;
  /// False when a loop edge (e11, e22 or e33) carries weight, i.e. the
  /// inputs violate a triangle inequality.
  bool triangle_regime = true;
};

/// s1 = e12+e13, s2 = e12+e23, s3 = e13+e23.
BoundarySums pants_boundary_sums(const PantsMeasures& p);

struct AnnulusCoords {
  Sign family;
  Rational e1;
  Rational e2;
};

/// Representative of (m, t) ~ (-m, -t) with t >= 0 (m >= 0 on ties).
AnnulusCoords annulus_solve(const Rational& m, const Rational& t);

}  // namespace signstab
