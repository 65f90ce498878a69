#include "signstab/tropical.hpp"

#include <cctype>

namespace signstab {

std::string to_string(const SignSeq& s) {
  std::string out;
  out.reserve(s.size());
  for (Sign e : s) out.push_back(to_char(e));
  return out;
}

std::string to_display_string(const SignSeq& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += to_char(s[i]);
  }
  return out + ")";
}

SignSeq parse_sign_seq(std::string_view text) {
  SignSeq out;
  for (char c : text) {
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']' ||
        std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    out.push_back(sign_from_char(c));
  }
  return out;
}

bool is_strict(const SignSeq& s) {
  for (Sign e : s)
    if (e == Sign::zero) return false;
  return true;
}

bool sign_leq(const SignSeq& a, const SignSeq& b) {
  if (a.size() != b.size()) throw DimensionError("sign sequences differ in length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != Sign::zero && a[i] != b[i]) return false;
  }
  return true;
}

std::vector<SignSeq> strict_completions(const SignSeq& s) {
  std::vector<SignSeq> out{SignSeq{}};
  for (Sign e : s) {
    std::vector<SignSeq> next;
    for (const auto& prefix : out) {
      for (Sign choice : {Sign::plus, Sign::minus}) {
        if (e != Sign::zero && e != choice) continue;
        next.push_back(prefix);
        next.back().push_back(choice);
      }
    }
    out = std::move(next);
  }
  return out;
}

NonStrictSign::NonStrictSign(std::vector<std::size_t> positions)
    : Error("NonStrictSign",
            [&] {
              std::string msg = "sign has zero entries at flip positions";
              for (std::size_t p : positions) msg += " " + std::to_string(p);
              return msg;
            }()),
      positions_(std::move(positions)) {}

namespace {

void require_dim(const Seed& seed, const TropPoint& w) {
  if (w.size() != seed.rank()) {
    throw DimensionError("point has " + std::to_string(w.size()) +
                         " coordinates, seed has " + std::to_string(seed.rank()) +
                         " unfrozen indices");
  }
}

}  // namespace

TropPoint trop_mutate(const Seed& seed, std::size_t k, const TropPoint& w) {
  require_dim(seed, w);
  const std::size_t p = seed.require_position(k);
  const Sign s = w[p].sign();
  TropPoint out = w;
  out[p] = -w[p];
  if (s == Sign::zero) return out;
  const auto& uf = seed.unfrozen();
  for (std::size_t q = 0; q < uf.size(); ++q) {
    if (q == p) continue;
    const Integer coeff = to_int(s) * seed.b(uf[q], k);
    if (coeff > 0) out[q] += Scalar(coeff) * w[p];
  }
  return out;
}

TropPoint trop_permute(const Seed& seed, const Permutation& sigma, const TropPoint& w) {
  require_dim(seed, w);
  const IntMatrix p = permutation_matrix(seed, sigma);
  TropPoint out(w.size());
  for (std::size_t col = 0; col < w.size(); ++col)
    for (std::size_t row = 0; row < w.size(); ++row)
      if (p(row, col) != 0) out[row] = w[col];
  return out;
}

Transport transport(const MutationPath& path, const TropPoint& w) {
  require_dim(path.initial(), w);
  Transport t;
  t.intermediates.reserve(path.steps().size());
  Seed seed = path.initial();
  TropPoint x = w;
  for (const auto& step : path.steps()) {
    t.intermediates.push_back(x);
    if (const auto* f = std::get_if<Flip>(&step)) {
      x = trop_mutate(seed, f->k, x);
      seed = mutate_b(seed, f->k);
    } else {
      const auto& sigma = std::get<Permute>(step).sigma;
      x = trop_permute(seed, sigma, x);
      seed = apply_perm(seed, sigma);
    }
  }
  t.final = std::move(x);
  return t;
}

SignSeq sign_of_path(const MutationPath& path, const TropPoint& w) {
  const Transport t = transport(path, w);
  SignSeq out;
  const auto& steps = path.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    if (const auto* f = std::get_if<Flip>(&steps[s])) {
      out.push_back(t.intermediates[s][*path.initial().position(f->k)].sign());
    }
  }
  return out;
}

IntMatrix edge_matrix(const Seed& seed, std::size_t k, Sign eps) {
  if (eps == Sign::zero) {
    throw NonStrictSign({});
  }
  const std::size_t p = seed.require_position(k);
  const std::size_t r = seed.rank();
  IntMatrix e = IntMatrix::identity(r);
  e(p, p) = -1;
  for (std::size_t q = 0; q < r; ++q) {
    if (q == p) continue;
    const Integer v = to_int(eps) * seed.b(seed.unfrozen()[q], k);
    if (v > 0) e(q, p) = v;
  }
  return e;
}

IntMatrix presentation_matrix_for_sign(const MutationPath& path, const SignSeq& eps) {
  if (eps.size() != path.flip_count()) {
    throw DimensionError("sign has length " + std::to_string(eps.size()) + ", path has " +
                         std::to_string(path.flip_count()) + " flips");
  }
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < eps.size(); ++i)
    if (eps[i] == Sign::zero) zeros.push_back(i);
  if (!zeros.empty()) throw NonStrictSign(std::move(zeros));

  Seed seed = path.initial();
  IntMatrix m = IntMatrix::identity(seed.rank());
  std::size_t nu = 0;
  for (const auto& step : path.steps()) {
    if (const auto* f = std::get_if<Flip>(&step)) {
      m = edge_matrix(seed, f->k, eps[nu++]) * m;
      seed = mutate_b(seed, f->k);
    } else {
      const auto& sigma = std::get<Permute>(step).sigma;
      m = permutation_matrix(seed, sigma) * m;
      seed = apply_perm(seed, sigma);
    }
  }
  return m;
}

IntMatrix presentation_matrix_at_point(const MutationPath& path, const TropPoint& w) {
  return presentation_matrix_for_sign(path, sign_of_path(path, w));
}

TropPoint scaled(const TropPoint& w, const Scalar& s) {
  TropPoint out = w;
  for (auto& x : out) x *= s;
  return out;
}

std::string to_string(const TropPoint& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += to_string(w[i]);
  }
  return out + ")";
}

}  // namespace signstab
