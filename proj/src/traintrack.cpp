#include "signstab/traintrack.hpp"

#include <algorithm>

namespace signstab {

MeasureCheck validate_measure(const TrainTrack& track, const Measure& m) {
  auto weight = [&](const std::string& e) -> const Rational& {
    if (std::find(track.edges.begin(), track.edges.end(), e) == track.edges.end()) {
      throw ParseError("switch refers to unknown edge '" + e + "'");
    }
    auto it = m.find(e);
    if (it == m.end()) throw ParseError("measure has no weight for edge '" + e + "'");
    return it->second;
  };
  for (const auto& [e, v] : m) {
    if (std::find(track.edges.begin(), track.edges.end(), e) == track.edges.end()) {
      throw ParseError("measure refers to unknown edge '" + e + "'");
    }
  }
  MeasureCheck out;
  for (const auto& e : track.edges) {
    if (weight(e) < 0) out.negative_edges.push_back(e);
  }
  for (std::size_t i = 0; i < track.switches.size(); ++i) {
    const Switch& s = track.switches[i];
    if (weight(s.incoming) != weight(s.outgoing.first) + weight(s.outgoing.second)) {
      out.violating_switches.push_back(i);
    }
  }
  out.valid = out.violating_switches.empty() && out.negative_edges.empty();
  return out;
}

namespace {

Rational half_pos(const Rational& x) { return x > 0 ? Rational(x / 2) : Rational(0); }

}  // namespace

PantsMeasures pants_measures(const Rational& m1, const Rational& m2, const Rational& m3) {
  return {{half_pos(m1 - m2 - m3), half_pos(m1 + m2 - m3), half_pos(m1 - m2 + m3),
           half_pos(-m1 + m2 - m3), half_pos(-m1 + m2 + m3), half_pos(-m1 - m2 + m3)}};
}

BoundarySums pants_boundary_sums(const PantsMeasures& p) {
  BoundarySums out;
  out.s = {p.e12() + p.e13(), p.e12() + p.e23(), p.e13() + p.e23()};
  out.triangle_regime = p.e11() == 0 && p.e22() == 0 && p.e33() == 0;
  return out;
}

AnnulusCoords annulus_solve(const Rational& m, const Rational& t) {
  Rational mm = m;
  Rational tt = t;
  if (tt < 0 || (tt == 0 && mm < 0)) {
    mm = -mm;
    tt = -tt;
  }
  return {mm < 0 ? Sign::minus : Sign::plus, abs(mm), tt};
}

}  // namespace signstab
