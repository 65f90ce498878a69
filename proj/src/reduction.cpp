#include "signstab/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace signstab {

CompatibilityReport edge_compatibility(const MutationPath& path, const Cone& cone) {
  if (cone.generators.empty()) throw Error("EmptyCone", "cone has no generators");
  const std::size_t h = path.flip_count();
  CompatibilityReport report;
  report.compatible.assign(h, true);
  std::vector<SignSeq> signs;
  for (const auto& g : cone.generators) {
    const Transport t = transport(path, g);
    std::vector<TropPoint> before;
    SignSeq sign;
    const auto& steps = path.steps();
    std::size_t nu = 0;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      const auto* f = std::get_if<Flip>(&steps[s]);
      if (!f) continue;
      const Scalar& x = t.intermediates[s][*path.initial().position(f->k)];
      if (!x.is_zero()) report.compatible[nu] = false;
      sign.push_back(x.sign());
      before.push_back(t.intermediates[s]);
      ++nu;
    }
    report.trace.push_back(std::move(before));
    signs.push_back(std::move(sign));
  }
  report.mixed_sign_classes =
      std::any_of(signs.begin(), signs.end(), [&](const SignSeq& s) { return s != signs[0]; });
  return report;
}

HereditaryReport hereditary_check(const MutationPath& path, const Cone& cone,
                                  const SignSeq& eps_stab) {
  if (eps_stab.size() != path.flip_count()) {
    throw DimensionError("stable sign has length " + std::to_string(eps_stab.size()) +
                         ", path has " + std::to_string(path.flip_count()) + " flips");
  }
  HereditaryReport report;
  report.compatible = edge_compatibility(path, cone).compatible;
  for (std::size_t nu = 0; nu < eps_stab.size(); ++nu) {
    if (report.compatible[nu] && eps_stab[nu] == Sign::zero) report.violations.push_back(nu);
  }
  report.passes = report.violations.empty();
  return report;
}

std::vector<std::pair<std::size_t, std::size_t>> reduced_subsequence(const MutationPath& path,
                                                                     const Cone& cone) {
  const auto compat = edge_compatibility(path, cone).compatible;
  const auto flips = path.flip_indices();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t nu = 0; nu < flips.size(); ++nu)
    if (compat[nu]) out.emplace_back(nu, flips[nu]);
  return out;
}

Seed freeze(const Seed& seed, const std::vector<std::size_t>& k) {
  for (std::size_t i : k) {
    if (!seed.is_unfrozen(i)) {
      throw SeedError("FrozenIndex", "cannot freeze " + std::to_string(i) +
                                         ": not an unfrozen index");
    }
  }
  std::vector<std::size_t> j;
  for (std::size_t u : seed.unfrozen())
    if (std::find(k.begin(), k.end(), u) == k.end()) j.push_back(u);
  return Seed(seed.b(), std::move(j));
}

TropPoint project_point(const Seed& seed, const TropPoint& w, const std::vector<std::size_t>& j) {
  if (w.size() != seed.rank()) throw DimensionError("point dimension differs from seed rank");
  std::vector<std::size_t> sorted = j;
  std::sort(sorted.begin(), sorted.end());
  TropPoint out;
  for (std::size_t idx : sorted) out.push_back(w[seed.require_position(idx)]);
  return out;
}

BlockReport block_structure_check(const MutationPath& path, const std::vector<std::size_t>& k,
                                  const EnumerateOptions& opts) {
  const Seed& seed = path.initial();
  const Seed frozen = freeze(seed, k);
  BlockReport report;
  report.j = frozen.unfrozen();
  report.k = k;
  std::sort(report.k.begin(), report.k.end());
  for (const auto& step : path.steps()) {
    if (const auto* f = std::get_if<Flip>(&step)) {
      if (!frozen.is_unfrozen(f->k)) {
        throw SeedError("PathLeavesJ", "flip at " + std::to_string(f->k) + " lies in K");
      }
    } else {
      const auto& sigma = std::get<Permute>(step).sigma;
      for (std::size_t u : report.j) {
        if (!frozen.is_unfrozen(sigma[u])) {
          throw SeedError("PathLeavesJ", "permutation mixes J and K");
        }
      }
    }
  }
  const MutationPath reduced(frozen, path.steps());

  std::vector<std::size_t> jpos, kpos;
  for (std::size_t u : report.j) jpos.push_back(*seed.position(u));
  for (std::size_t u : report.k) kpos.push_back(*seed.position(u));

  for (const auto& rs : enumerate_realizable_signs(path, opts)) {
    BlockRow row;
    row.sign = rs.sign;
    const IntMatrix e = presentation_matrix_for_sign(path, rs.sign);
    for (std::size_t a : jpos)
      for (std::size_t b : kpos)
        if (e(a, b) != 0) row.zero_block = false;
    IntMatrix ej(jpos.size(), jpos.size());
    for (std::size_t a = 0; a < jpos.size(); ++a)
      for (std::size_t b = 0; b < jpos.size(); ++b) ej(a, b) = e(jpos[a], jpos[b]);
    row.matches_frozen = ej == presentation_matrix_for_sign(reduced, rs.sign);
    row.rho_full = spectral_radius(e);
    row.rho_j = spectral_radius(ej);
    report.zero_block = report.zero_block && row.zero_block;
    report.matches_frozen = report.matches_frozen && row.matches_frozen;
    report.max_radius_gap =
        std::max(report.max_radius_gap, std::fabs(row.rho_full.value - row.rho_j.value));
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace signstab
