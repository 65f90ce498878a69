#include "signstab/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <thread>

namespace signstab {

unsigned default_thread_count() {
  if (const char* env = std::getenv("SIGNSTAB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ------------------------------------------------------------------ orbits

namespace {

TropPoint normalized(const TropPoint& w) {
  Scalar top(0);
  for (const auto& x : w) {
    const Scalar a = abs(x);
    if (a > top) top = a;
  }
  if (top.is_zero()) return w;
  TropPoint out = w;
  for (auto& x : out) x /= top;
  return out;
}

}  // namespace

OrbitReport iterate_orbit(const MutationPath& path, const TropPoint& w, std::size_t n_max,
                          std::size_t window) {
  if (!is_loop(path)) throw SeedError("NotALoop", "path does not return to its initial B");
  if (n_max < 1) throw Error("InvalidArgument", "orbit needs at least one iteration");
  if (window == 0) window = std::max<std::size_t>(2, n_max / 2);
  OrbitReport report;
  report.start = w;
  report.window = window;
  TropPoint x = normalized(w);
  for (std::size_t i = 0; i < n_max; ++i) {
    const Transport t = transport(path, x);
    SignSeq sign;
    const auto& steps = path.steps();
    for (std::size_t s = 0; s < steps.size(); ++s) {
      if (const auto* f = std::get_if<Flip>(&steps[s])) {
        sign.push_back(t.intermediates[s][*path.initial().position(f->k)].sign());
      }
    }
    report.iterations.push_back({std::move(sign), x});
    x = normalized(t.final);
  }
  report.stable = detect_stable_sign(report, window);
  const WeakSign weak = detect_weak_stable_sign(report, window);
  report.weak_stable = weak.sign;
  report.weak_all_zero = weak.all_zero;
  if (report.stable) {
    std::size_t i = report.iterations.size();
    while (i > 0 && report.iterations[i - 1].sign == *report.stable) --i;
    report.stabilization_index = i;
  }
  return report;
}

std::optional<SignSeq> detect_stable_sign(const OrbitReport& report, std::size_t window) {
  if (window < 2) throw Error("InvalidArgument", "window must be at least 2");
  const auto& it = report.iterations;
  if (it.size() < window) return std::nullopt;
  const SignSeq& last = it.back().sign;
  if (!is_strict(last)) return std::nullopt;
  for (std::size_t i = it.size() - window; i < it.size(); ++i)
    if (it[i].sign != last) return std::nullopt;
  return last;
}

WeakSign detect_weak_stable_sign(const OrbitReport& report, std::size_t window) {
  if (window < 2) throw Error("InvalidArgument", "window must be at least 2");
  const auto& it = report.iterations;
  WeakSign out;
  if (it.empty()) {
    out.all_zero = true;
    return out;
  }
  const std::size_t from = it.size() > window ? it.size() - window : 0;
  out.sign = it.back().sign;
  for (std::size_t i = from; i < it.size(); ++i)
    for (std::size_t j = 0; j < out.sign.size(); ++j)
      if (it[i].sign[j] != out.sign[j]) out.sign[j] = Sign::zero;
  out.all_zero = std::all_of(out.sign.begin(), out.sign.end(),
                             [](Sign s) { return s == Sign::zero; });
  return out;
}

// ------------------------------------------------------------ sign cones

namespace {

std::vector<Rational> row_of(const IntMatrix& m, std::size_t r) {
  std::vector<Rational> f(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) f[j] = Rational(m(r, j));
  return f;
}

}  // namespace

SignCone sign_cone(const MutationPath& path, const SignSeq& eps) {
  if (eps.size() != path.flip_count()) throw DimensionError("sign length differs from flip count");
  const auto seeds = seeds_along(path);
  SignCone cone;
  cone.dim = path.initial().rank();
  IntMatrix m = IntMatrix::identity(cone.dim);
  std::size_t nu = 0;
  const auto& steps = path.steps();
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const Seed& seed = seeds[s];
    if (const auto* f = std::get_if<Flip>(&steps[s])) {
      const Sign e = eps[nu++];
      auto fn = row_of(m, seed.require_position(f->k));
      if (e == Sign::zero) {
        cone.add(std::move(fn), Relation::equal);
      } else {
        cone.add_signed(std::move(fn), e);
      }
      // On the wall both branches agree, so either edge matrix continues the map.
      m = edge_matrix(seed, f->k, e == Sign::zero ? Sign::plus : e) * m;
    } else {
      m = permutation_matrix(seed, std::get<Permute>(steps[s]).sigma) * m;
    }
  }
  return cone;
}

std::optional<std::vector<Rational>> realize_sign(const MutationPath& path, const SignSeq& eps) {
  return cone_witness(sign_cone(path, eps));
}

// ------------------------------------------------------ branch and prune

namespace {

struct Node {
  std::size_t step = 0;
  IntMatrix map;
  SignCone cone;
  std::vector<Rational> witness;
  SignSeq prefix;
};

class Enumerator {
 public:
  Enumerator(const MutationPath& path, std::size_t max_branches)
      : path_(path), seeds_(seeds_along(path)), max_branches_(max_branches) {}

  Node root() const {
    Node n;
    n.map = IntMatrix::identity(path_.initial().rank());
    n.cone.dim = path_.initial().rank();
    // Any point works before the first constraint; 1 avoids zero functionals.
    n.witness.assign(n.cone.dim, Rational(1));
    return n;
  }

  // Advances a node through permutation steps up to the next flip or the end.
  void skip_vertical(Node& n) const {
    const auto& steps = path_.steps();
    while (n.step < steps.size()) {
      const auto* p = std::get_if<Permute>(&steps[n.step]);
      if (!p) break;
      n.map = permutation_matrix(seeds_[n.step], p->sigma) * n.map;
      ++n.step;
    }
  }

  // Children of a node sitting at a flip.
  std::vector<Node> expand(const Node& n) {
    count();
    const Seed& seed = seeds_[n.step];
    const std::size_t k = std::get<Flip>(path_.steps()[n.step]).k;
    const std::vector<Rational> f = row_of(n.map, seed.require_position(k));
    Rational value(0);
    for (std::size_t j = 0; j < f.size(); ++j) value += f[j] * n.witness[j];
    const Sign current = sign_of(value);

    std::vector<Node> out;
    for (Sign s : {Sign::plus, Sign::minus}) {
      SignCone cone = n.cone;
      cone.add_signed(f, s);
      std::vector<Rational> witness;
      if (s == current) {
        witness = n.witness;
      } else {
        auto w = cone_witness(cone);
        if (!w) continue;
        witness = std::move(*w);
      }
      Node child;
      child.step = n.step + 1;
      child.map = edge_matrix(seed, k, s) * n.map;
      child.cone = std::move(cone);
      child.witness = std::move(witness);
      child.prefix = n.prefix;
      child.prefix.push_back(s);
      skip_vertical(child);
      out.push_back(std::move(child));
    }
    return out;
  }

  bool is_leaf(const Node& n) const { return n.step >= path_.steps().size(); }

  void run(Node n, std::vector<RealizableSign>& out) {
    if (is_leaf(n)) {
      out.push_back({std::move(n.prefix), std::move(n.witness)});
      return;
    }
    for (auto& child : expand(n)) run(std::move(child), out);
  }

 private:
  void count() {
    const std::size_t c = ++nodes_;
    if (max_branches_ != 0 && c > max_branches_) {
      throw Error("BranchLimitExceeded",
                  "sign enumeration exceeded " + std::to_string(max_branches_) + " branches");
    }
  }

  const MutationPath& path_;
  std::vector<Seed> seeds_;
  std::size_t max_branches_;
  std::atomic<std::size_t> nodes_{0};
};

}  // namespace

std::vector<RealizableSign> enumerate_realizable_signs(const MutationPath& path,
                                                       const EnumerateOptions& opts) {
  Enumerator en(path, opts.max_branches);
  Node root = en.root();
  en.skip_vertical(root);
  const unsigned threads = opts.threads ? opts.threads : default_thread_count();

  std::vector<RealizableSign> out;
  if (threads <= 1) {
    en.run(std::move(root), out);
  } else {
    // Breadth-first until there is enough independent work, then fan out.
    std::vector<Node> frontier{std::move(root)};
    while (frontier.size() < 4 * threads) {
      std::vector<Node> next;
      bool grew = false;
      for (auto& n : frontier) {
        if (en.is_leaf(n)) {
          next.push_back(std::move(n));
        } else {
          for (auto& c : en.expand(n)) next.push_back(std::move(c));
          grew = true;
        }
      }
      frontier = std::move(next);
      if (!grew) break;
    }
    std::vector<std::vector<RealizableSign>> parts(threads);
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) {
      jobs.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < frontier.size(); i += threads)
          en.run(std::move(frontier[i]), parts[t]);
      }));
    }
    for (auto& j : jobs) j.get();
    for (auto& p : parts)
      for (auto& r : p) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RealizableSign& a, const RealizableSign& b) {
    return to_string(a.sign) < to_string(b.sign);
  });
  return out;
}

// --------------------------------------------------------- stretch factor

StretchReport stretch_factor(const MutationPath& path, const SignSeq& eps_stab,
                             double tolerance) {
  if (!is_loop(path)) throw SeedError("NotALoop", "path does not return to its initial B");
  if (eps_stab.size() != path.flip_count()) {
    throw DimensionError("stable sign has length " + std::to_string(eps_stab.size()) +
                         ", path has " + std::to_string(path.flip_count()) + " flips");
  }
  const auto zeros = std::count(eps_stab.begin(), eps_stab.end(), Sign::zero);
  if (zeros > 20) throw Error("TooManyCompletions", "more than 2^20 strict completions");

  StretchReport report;
  report.stable = eps_stab;
  std::optional<std::size_t> best;
  std::optional<double> lo, hi;
  for (auto& eps : strict_completions(eps_stab)) {
    CompletionRow row;
    row.sign = std::move(eps);
    row.realizable = realize_sign(path, row.sign).has_value();
    const IntMatrix m = presentation_matrix_for_sign(path, row.sign);
    row.charpoly = char_poly(m);
    row.rho = spectral_radius(m);
    if (row.realizable) {
      const double v = row.rho.value;
      if (!best || v > report.table[*best].rho.value) best = report.table.size();
      lo = lo ? std::min(*lo, v) : v;
      hi = hi ? std::max(*hi, v) : v;
    }
    report.table.push_back(std::move(row));
  }
  if (!best) {
    throw Error("NoRealizableCompletion",
                "no strict completion of " + to_string(eps_stab) + " is realizable");
  }
  const CompletionRow& top = report.table[*best];
  report.lambda = top.rho.value;
  report.bound = top.rho.bound;
  report.radii_all_equal = (*hi - *lo) <= tolerance * std::max(1.0, *hi);
  report.exact_lambda = exact_root_near(top.charpoly, top.rho.value);
  return report;
}

bool verify_eigenpair(const IntMatrix& m, const Scalar& lambda, const TropPoint& x) {
  if (!m.is_square() || m.cols() != x.size()) throw DimensionError("eigenpair shape mismatch");
  const auto y = apply(m, std::span<const Scalar>(x));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(y[i] == lambda * x[i])) return false;
  return true;
}

ConeMembership canonical_cone_membership(const Seed& seed, const TropPoint& w) {
  if (w.size() != seed.rank()) throw DimensionError("point dimension differs from seed rank");
  const bool pos = std::all_of(w.begin(), w.end(), [](const Scalar& x) { return x.sign() == Sign::plus; });
  const bool neg = std::all_of(w.begin(), w.end(), [](const Scalar& x) { return x.sign() == Sign::minus; });
  if (!w.empty() && pos) return ConeMembership::plus_interior;
  if (!w.empty() && neg) return ConeMembership::minus_interior;
  return ConeMembership::outside;
}

const char* to_string(ConeMembership c) {
  switch (c) {
    case ConeMembership::plus_interior: return "plus_interior";
    case ConeMembership::minus_interior: return "minus_interior";
    case ConeMembership::outside: return "outside";
  }
  return "outside";
}

}  // namespace signstab
