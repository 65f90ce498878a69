#include "signstab/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "signstab/io.hpp"

namespace signstab {

namespace {

constexpr int kSchemaVersion = 1;

/// Usage problems detected after CLI11 parsing (exit code 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string path_file;
  std::string seed_file;
  std::string point;
  std::string cone_file;
  std::string track_file;
  std::string measure;
  std::string sign;
  std::string stable;
  std::string matrix;
  std::string lambda;
  std::string output;
  std::vector<std::size_t> k;
  std::vector<std::string> m_values;
  std::string t_value;
  std::size_t iters = 30;
  std::size_t window = 0;
  std::size_t max_branch = 0;
  std::size_t random_cases = 0;
  std::size_t max_rank = 6;
  std::size_t max_length = 12;
  long radicand = 0;
  double tolerance = 1e-9;
  std::uint64_t rng_seed = 1;
  bool trace = false;
  bool json_only = false;
};

struct Outcome {
  Json inputs = Json::object();
  Json result = Json::object();
  std::ostringstream summary;
};

std::string sign_json(const SignSeq& s) { return to_string(s); }

void check_radicand(const RunConfig& cfg, const TropPoint& w) {
  if (cfg.radicand == 0) return;
  for (const auto& x : w) {
    if (auto d = x.radicand(); d && *d != cfg.radicand) {
      throw ArithmeticError("RadicandMismatch",
                            "point uses sqrt(" + std::to_string(*d) + "), expected sqrt(" +
                                std::to_string(cfg.radicand) + ")");
    }
  }
}

MutationPath need_path(const RunConfig& cfg, Outcome& o) {
  if (cfg.path_file.empty()) throw UsageError("--path is required");
  MutationPath p = load_path(cfg.path_file);
  o.inputs["path"] = to_json(p);
  return p;
}

TropPoint need_point(const RunConfig& cfg, Outcome& o, const char* key = "point") {
  if (cfg.point.empty()) throw UsageError("--point is required");
  TropPoint w = point_from_json(json_arg(cfg.point));
  check_radicand(cfg, w);
  o.inputs[key] = to_json(w);
  return w;
}

Seed need_seed(const RunConfig& cfg, Outcome& o) {
  if (cfg.seed_file.empty()) throw UsageError("--seed-file is required");
  Seed s = seed_like_from_json(json_arg(cfg.seed_file));
  o.inputs["seed"] = to_json(s);
  return s;
}

Cone need_cone(const RunConfig& cfg, Outcome& o) {
  if (cfg.cone_file.empty()) throw UsageError("--cone is required");
  Cone c = cone_from_json(json_arg(cfg.cone_file));
  o.inputs["cone"] = to_json(c);
  return c;
}

SignSeq need_sign(const std::string& text, const char* flag, Outcome& o, const char* key) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  SignSeq s;
  try {
    s = parse_sign_seq(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  o.inputs[key] = to_string(s);
  return s;
}

Json rational_vector(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::string join_positions(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

// ------------------------------------------------------------- handlers

void cmd_mutate(const RunConfig& cfg, Outcome& o) {
  Seed s = need_seed(cfg, o);
  if (cfg.k.empty()) throw UsageError("--k is required");
  o.inputs["k"] = cfg.k;
  for (std::size_t k : cfg.k) s = mutate_b(s, k);
  o.result["seed"] = to_json(s);
  o.summary << "mutated seed B = " << to_json(s.b()).dump() << "\n";
}

void cmd_transport(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const TropPoint w = need_point(cfg, o);
  o.inputs["trace"] = cfg.trace;
  const Transport t = transport(p, w);
  o.result["final"] = to_json(t.final);
  if (cfg.trace) {
    Json inter = Json::array();
    for (const auto& x : t.intermediates) inter.push_back(to_json(x));
    o.result["intermediates"] = inter;
  }
  o.summary << "transported point: " << to_string(t.final) << "\n";
}

void cmd_sign(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const TropPoint w = need_point(cfg, o);
  const SignSeq s = sign_of_path(p, w);
  o.result["sign"] = sign_json(s);
  o.result["sign_display"] = to_display_string(s);
  o.result["strict"] = is_strict(s);
  o.summary << "sign: " << to_display_string(s) << "\n";
}

OrbitReport orbit_for(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const TropPoint w = need_point(cfg, o);
  const std::size_t window = cfg.window ? cfg.window : std::max<std::size_t>(2, cfg.iters / 2);
  if (window > cfg.iters) throw UsageError("--window must not exceed --iters");
  o.inputs["iters"] = cfg.iters;
  o.inputs["window"] = window;
  OrbitReport r = iterate_orbit(p, w, cfg.iters, window);
  o.result["evidence"] = "empirical";
  o.result["window"] = window;
  o.result["stable"] = r.stable ? Json(sign_json(*r.stable)) : Json(nullptr);
  o.result["weak_stable"] = sign_json(r.weak_stable);
  o.result["weak_all_zero"] = r.weak_all_zero;
  o.result["stabilization_index"] =
      r.stabilization_index ? Json(*r.stabilization_index) : Json(nullptr);
  o.summary << "stable sign (last " << window << " of " << cfg.iters << " iterations): "
            << (r.stable ? to_display_string(*r.stable) : std::string("none")) << "\n"
            << "weak stable sign: " << to_display_string(r.weak_stable) << "\n";
  if (r.weak_all_zero) o.summary << "warning: weak stable sign is all zero\n";
  return r;
}

void cmd_orbit(const RunConfig& cfg, Outcome& o) {
  const OrbitReport r = orbit_for(cfg, o);
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.iterations.size(); ++i) {
    rows.push_back({{"n", i + 1},
                    {"sign", sign_json(r.iterations[i].sign)},
                    {"point", to_json(r.iterations[i].point)}});
  }
  o.result["iterations"] = rows;
}

void cmd_stable_sign(const RunConfig& cfg, Outcome& o) { orbit_for(cfg, o); }

void cmd_signs_enumerate(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  o.inputs["max_branch"] = cfg.max_branch;
  EnumerateOptions opts;
  opts.max_branches = cfg.max_branch;
  const auto signs = enumerate_realizable_signs(p, opts);
  Json list = Json::array();
  for (const auto& s : signs) {
    list.push_back({{"sign", sign_json(s.sign)}, {"witness", rational_vector(s.witness)}});
  }
  o.result["signs"] = list;
  o.result["count"] = signs.size();
  o.summary << signs.size() << " realizable strict signs\n";
  for (const auto& s : signs) o.summary << "  " << to_display_string(s.sign) << "\n";
}

void cmd_presentation(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  SignSeq s;
  if (!cfg.sign.empty()) {
    s = need_sign(cfg.sign, "--sign", o, "sign");
  } else {
    s = sign_of_path(p, need_point(cfg, o));
  }
  const IntMatrix m = presentation_matrix_for_sign(p, s);
  o.result["sign"] = sign_json(s);
  o.result["matrix"] = to_json(m);
  o.result["determinant"] = determinant(m).get_str();
  o.summary << "presentation matrix at " << to_display_string(s) << ": "
            << to_json(m).dump() << "\n";
}

void cmd_charpoly(const RunConfig& cfg, Outcome& o) {
  IntMatrix m;
  if (!cfg.matrix.empty()) {
    const Json j = json_arg(cfg.matrix);
    if (!j.is_array()) throw ParseError("--matrix must be a JSON array of rows");
    m = IntMatrix(j.size(), j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("--matrix must be square");
      for (std::size_t c = 0; c < j.size(); ++c) m(i, c) = integer_from_json(j[i][c]);
    }
    o.inputs["matrix"] = to_json(m);
  } else {
    const MutationPath p = need_path(cfg, o);
    const SignSeq s = need_sign(cfg.sign, "--sign", o, "sign");
    m = presentation_matrix_for_sign(p, s);
  }
  const IntPoly cp = char_poly(m);
  const SpectralEstimate rho = spectral_radius(m);
  o.result["charpoly"] = to_json(cp);
  o.result["spectral_radius"] = to_json(rho);
  const auto root = exact_root_near(cp, rho.value);
  o.result["spectral_radius_exact"] = root ? Json(to_string(*root)) : Json(nullptr);
  o.summary << "characteristic polynomial: " << to_string(cp) << "\n"
            << "spectral radius: " << rho.value << " (+/- " << rho.bound << ")\n";
}

void cmd_stretch(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const SignSeq s = need_sign(cfg.stable, "--stable", o, "stable");
  o.inputs["tolerance"] = cfg.tolerance;
  const StretchReport r = stretch_factor(p, s, cfg.tolerance);
  Json table = Json::array();
  for (const auto& row : r.table) {
    table.push_back({{"sign", sign_json(row.sign)},
                     {"realizable", row.realizable},
                     {"charpoly", to_json(row.charpoly)},
                     {"rho", to_json(row.rho)}});
  }
  o.result["table"] = table;
  o.result["lambda"] = r.lambda;
  o.result["bound"] = r.bound;
  o.result["radii_all_equal"] = r.radii_all_equal;
  o.result["lambda_exact"] = r.exact_lambda ? Json(to_string(*r.exact_lambda)) : Json(nullptr);
  if (cfg.radicand != 0) {
    o.inputs["radicand"] = cfg.radicand;
    const bool in_field = r.exact_lambda && (r.exact_lambda->is_rational() ||
                                             r.exact_lambda->radicand() == cfg.radicand);
    o.result["lambda_in_field"] = in_field;
  }
  o.summary << "stretch factor: " << std::setprecision(12) << r.lambda;
  if (r.exact_lambda) o.summary << " = " << to_string(*r.exact_lambda);
  o.summary << "\n" << r.table.size() << " completions, radii "
            << (r.radii_all_equal ? "all equal" : "differ") << "\n";
}

void cmd_eigencheck(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const TropPoint x = need_point(cfg, o, "vector");
  if (cfg.lambda.empty()) throw UsageError("--lambda is required");
  const Scalar lambda = parse_scalar(cfg.lambda);
  o.inputs["lambda"] = to_string(lambda);
  std::vector<SignSeq> signs;
  if (!cfg.sign.empty()) {
    signs.push_back(need_sign(cfg.sign, "--sign", o, "sign"));
  } else {
    signs = strict_completions(need_sign(cfg.stable, "--stable or --sign", o, "stable"));
  }
  Json rows = Json::array();
  bool all = true;
  for (const auto& s : signs) {
    const bool holds = verify_eigenpair(presentation_matrix_for_sign(p, s), lambda, x);
    all = all && holds;
    rows.push_back({{"sign", sign_json(s)}, {"holds", holds}});
  }
  o.result["results"] = rows;
  o.result["all_hold"] = all;
  o.summary << "eigenpair " << (all ? "holds" : "fails") << " for " << signs.size()
            << " sign(s)\n";
}

void cmd_compat(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const Cone c = need_cone(cfg, o);
  o.inputs["trace"] = cfg.trace;
  const CompatibilityReport r = edge_compatibility(p, c);
  std::string mask;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < r.compatible.size(); ++i) {
    mask += r.compatible[i] ? '1' : '0';
    if (r.compatible[i]) positions.push_back(i);
  }
  o.result["mask"] = mask;
  o.result["positions"] = positions;
  o.result["mixed_sign_classes"] = r.mixed_sign_classes;
  if (cfg.trace) {
    Json gens = Json::array();
    for (const auto& g : r.trace) {
      Json pts = Json::array();
      for (const auto& x : g) pts.push_back(to_json(x));
      gens.push_back(pts);
    }
    o.result["trace"] = gens;
  }
  o.summary << "compatible flips: " << mask << "\n";
  if (r.mixed_sign_classes) {
    o.summary << "caveat: generators have differing sign sequences; the cone is split per "
                 "sign class\n";
  }
}

void cmd_hereditary(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const Cone c = need_cone(cfg, o);
  const SignSeq s = need_sign(cfg.stable, "--stable", o, "stable");
  const HereditaryReport r = hereditary_check(p, c, s);
  o.result["passes"] = r.passes;
  o.result["violations"] = r.violations;
  std::string mask;
  for (bool b : r.compatible) mask += b ? '1' : '0';
  o.result["mask"] = mask;
  o.summary << "hereditary: " << (r.passes ? "passes" : "fails");
  if (!r.passes) o.summary << " at positions " << join_positions(r.violations);
  o.summary << "\n";
}

void cmd_skeleton(const RunConfig& cfg, Outcome& o) {
  const MutationPath p = need_path(cfg, o);
  const Cone c = need_cone(cfg, o);
  Json list = Json::array();
  std::vector<std::size_t> flips;
  for (const auto& [pos, k] : reduced_subsequence(p, c)) {
    list.push_back({{"position", pos}, {"flip", k}});
    flips.push_back(k);
  }
  o.result["skeleton"] = list;
  o.summary << "reduced skeleton flips: " << join_positions(flips) << "\n";
}

void cmd_freeze(const RunConfig& cfg, Outcome& o) {
  const Seed s = need_seed(cfg, o);
  o.inputs["k"] = cfg.k;
  const Seed f = freeze(s, cfg.k);
  o.result["seed"] = to_json(f);
  o.summary << "unfrozen after freezing: " << join_positions(f.unfrozen()) << "\n";
}

// Random skew-symmetric seed (all unfrozen) and random flip/relabel path.
MutationPath random_path(std::mt19937_64& rng, std::size_t max_rank, std::size_t max_length) {
  const std::size_t r = std::uniform_int_distribution<std::size_t>(1, max_rank)(rng);
  std::uniform_int_distribution<int> entry(-3, 3);
  IntMatrix b(r, r, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      b(i, j) = entry(rng);
      b(j, i) = -b(i, j);
    }
  std::vector<std::size_t> all(r);
  for (std::size_t i = 0; i < r; ++i) all[i] = i;
  Seed seed(b, all);
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_length)(rng);
  std::vector<PathStep> steps;
  for (std::size_t s = 0; s < len; ++s) {
    if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
      Permutation sigma = all;
      std::shuffle(sigma.begin(), sigma.end(), rng);
      steps.push_back(Permute{sigma});
    } else {
      steps.push_back(Flip{std::uniform_int_distribution<std::size_t>(0, r - 1)(rng)});
    }
  }
  return MutationPath(seed, steps);
}

struct DualityResult {
  bool holds;
  IntMatrix c;
  IntMatrix g;
};

DualityResult duality(const MutationPath& p) {
  const IntMatrix c = c_matrix(p);
  const IntMatrix g = g_matrix(p);
  const RatMatrix expected = inverse(to_rational(c)).transposed();
  return {to_rational(g) == expected, c, g};
}

void cmd_duality_check(const RunConfig& cfg, Outcome& o) {
  if (cfg.random_cases > 0) {
    o.inputs["random"] = cfg.random_cases;
    o.inputs["rng_seed"] = cfg.rng_seed;
    o.inputs["max_rank"] = cfg.max_rank;
    o.inputs["max_length"] = cfg.max_length;
    std::mt19937_64 rng(cfg.rng_seed);
    std::size_t ok = 0;
    Json failures = Json::array();
    for (std::size_t i = 0; i < cfg.random_cases; ++i) {
      const MutationPath p = random_path(rng, cfg.max_rank, cfg.max_length);
      try {
        if (duality(p).holds) {
          ++ok;
        } else {
          failures.push_back({{"path", to_json(p)}, {"error", "G != (C^-1)^T"}});
        }
      } catch (const Error& e) {
        failures.push_back({{"path", to_json(p)}, {"error", e.name()}});
      }
    }
    o.result["checked"] = cfg.random_cases;
    o.result["passed"] = ok;
    o.result["failures"] = failures;
    o.result["all_hold"] = ok == cfg.random_cases;
    o.summary << "rng seed " << cfg.rng_seed << ": duality holds in " << ok << "/"
              << cfg.random_cases << " random cases\n";
    return;
  }
  const MutationPath p = need_path(cfg, o);
  const DualityResult d = duality(p);
  o.result["C"] = to_json(d.c);
  o.result["G"] = to_json(d.g);
  o.result["det_C"] = determinant(d.c).get_str();
  o.result["all_hold"] = d.holds;
  o.summary << "G = (C^-1)^T: " << (d.holds ? "yes" : "no") << "\n";
}

Rational rational_arg(const std::string& s, const char* flag) {
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void cmd_pants(const RunConfig& cfg, Outcome& o) {
  std::vector<Rational> m;
  for (const auto& piece : cfg.m_values) {
    std::stringstream ss(piece);
    std::string item;
    while (std::getline(ss, item, ',')) m.push_back(rational_arg(item, "--m"));
  }
  if (m.size() != 3) throw UsageError("--m expects three values m1,m2,m3");
  o.inputs["m"] = rational_vector(m);
  const PantsMeasures pm = pants_measures(m[0], m[1], m[2]);
  const BoundarySums bs = pants_boundary_sums(pm);
  static const char* names[] = {"e11", "e12", "e13", "e22", "e23", "e33"};
  Json measures = Json::object();
  for (std::size_t i = 0; i < 6; ++i) measures[names[i]] = to_string(pm.e[i]);
  o.result["measures"] = measures;
  o.result["boundary_sums"] = rational_vector({bs.s.begin(), bs.s.end()});
  o.result["triangle_regime"] = bs.triangle_regime;
  o.summary << "pants measures:";
  for (std::size_t i = 0; i < 6; ++i) o.summary << " " << names[i] << "=" << to_string(pm.e[i]);
  o.summary << "\n";
  if (!bs.triangle_regime) o.summary << "note: outside the triangle regime\n";
}

void cmd_annulus(const RunConfig& cfg, Outcome& o) {
  if (cfg.m_values.size() != 1 || cfg.t_value.empty()) {
    throw UsageError("annulus expects --m and --t");
  }
  const Rational m = rational_arg(cfg.m_values[0], "--m");
  const Rational t = rational_arg(cfg.t_value, "--t");
  o.inputs["m"] = to_string(m);
  o.inputs["t"] = to_string(t);
  const AnnulusCoords a = annulus_solve(m, t);
  o.result["family"] = std::string(1, to_char(a.family));
  o.result["e1"] = to_string(a.e1);
  o.result["e2"] = to_string(a.e2);
  o.summary << "family " << to_char(a.family) << ", e1=" << to_string(a.e1)
            << ", e2=" << to_string(a.e2) << "\n";
}

void cmd_track_validate(const RunConfig& cfg, Outcome& o) {
  if (cfg.track_file.empty() || cfg.measure.empty()) {
    throw UsageError("--track and --measure are required");
  }
  const TrainTrack t = track_from_json(json_arg(cfg.track_file));
  const Measure m = measure_from_json(json_arg(cfg.measure));
  o.inputs["track"] = to_json(t);
  Json mj = Json::object();
  for (const auto& [e, v] : m) mj[e] = to_string(v);
  o.inputs["measure"] = mj;
  const MeasureCheck r = validate_measure(t, m);
  o.result["valid"] = r.valid;
  o.result["violating_switches"] = r.violating_switches;
  o.result["negative_edges"] = r.negative_edges;
  o.summary << "measure " << (r.valid ? "satisfies" : "violates") << " the switch conditions\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical cluster X-dynamics and sign stability", "signstab"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("--output", cfg.output, "Write the JSON report to this file");
  app.add_flag("--json-only", cfg.json_only, "Suppress the human-readable summary");

  using Handler = void (*)(const RunConfig&, Outcome&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    commands.emplace_back(s, h);
    return s;
  };
  auto path_opt = [&](CLI::App* s) {
    s->add_option("--path", cfg.path_file, "Path file (JSON)");
  };
  auto point_opt = [&](CLI::App* s) {
    s->add_option("--point", cfg.point, "Point as inline JSON or a file");
    s->add_option("--radicand", cfg.radicand, "Require scalars to lie in Q(sqrt(d))");
  };
  auto orbit_opts = [&](CLI::App* s) {
    s->add_option("--iters", cfg.iters, "Number of iterations")->check(CLI::PositiveNumber);
    s->add_option("--window", cfg.window, "Stabilization window (default iters/2)")
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  };
  auto cone_opt = [&](CLI::App* s) {
    s->add_option("--cone", cfg.cone_file, "Cone as inline JSON or a file");
  };

  auto* mutate = sub("mutate", "Mutate a seed in the given directions", cmd_mutate);
  mutate->add_option("--seed-file", cfg.seed_file, "Seed or triangulation (JSON)");
  mutate->add_option("--k", cfg.k, "Mutation directions, applied in order");

  auto* transport_cmd = sub("transport", "Transport a point along a path", cmd_transport);
  path_opt(transport_cmd);
  point_opt(transport_cmd);
  transport_cmd->add_flag("--trace", cfg.trace, "Include the intermediate points");

  auto* sign = sub("sign", "Sign of a path at a point", cmd_sign);
  path_opt(sign);
  point_opt(sign);

  auto* orbit = sub("orbit", "Iterate a loop and tabulate signs", cmd_orbit);
  path_opt(orbit);
  point_opt(orbit);
  orbit_opts(orbit);

  auto* stable = sub("stable-sign", "Empirical strict and weak stable signs", cmd_stable_sign);
  path_opt(stable);
  point_opt(stable);
  orbit_opts(stable);

  auto* en = sub("signs-enumerate", "Realizable strict sign sequences", cmd_signs_enumerate);
  path_opt(en);
  en->add_option("--max-branch", cfg.max_branch, "Abort after this many branches (0 = no limit)");

  auto* pres = sub("presentation", "Presentation matrix for a sign or point", cmd_presentation);
  path_opt(pres);
  point_opt(pres);
  pres->add_option("--sign", cfg.sign, "Strict sign sequence");

  auto* cp = sub("charpoly", "Characteristic polynomial and spectral radius", cmd_charpoly);
  path_opt(cp);
  cp->add_option("--sign", cfg.sign, "Strict sign sequence");
  cp->add_option("--matrix", cfg.matrix, "Integer matrix as inline JSON or a file");

  auto* st = sub("stretch", "Stretch factor over the completions of a stable sign", cmd_stretch);
  path_opt(st);
  st->add_option("--stable", cfg.stable, "Stable sign (zeros allowed)");
  st->add_option("--tolerance", cfg.tolerance, "Tolerance for comparing radii")
      ->check(CLI::PositiveNumber);
  st->add_option("--radicand", cfg.radicand, "Report whether lambda lies in Q(sqrt(d))");

  auto* eig = sub("eigencheck", "Exact eigenpair check of presentation matrices", cmd_eigencheck);
  path_opt(eig);
  point_opt(eig);
  eig->add_option("--lambda", cfg.lambda, "Eigenvalue (exact scalar)");
  eig->add_option("--sign", cfg.sign, "A single strict sign");
  eig->add_option("--stable", cfg.stable, "Check every strict completion of this sign");

  auto* compat = sub("compat", "Cone compatibility of each flip", cmd_compat);
  path_opt(compat);
  cone_opt(compat);
  compat->add_flag("--trace", cfg.trace, "Include per-generator coordinates");

  auto* her = sub("hereditary", "Hereditary condition for a stable sign", cmd_hereditary);
  path_opt(her);
  cone_opt(her);
  her->add_option("--stable", cfg.stable, "Stable sign");

  auto* sk = sub("skeleton", "Compatible-flip skeleton of a path", cmd_skeleton);
  path_opt(sk);
  cone_opt(sk);

  auto* fr = sub("freeze", "Freeze unfrozen directions", cmd_freeze);
  fr->add_option("--seed-file", cfg.seed_file, "Seed or triangulation (JSON)");
  fr->add_option("--k", cfg.k, "Directions to freeze");

  auto* dual = sub("duality-check", "Check G = (C^-1)^T on a path or random paths",
                   cmd_duality_check);
  path_opt(dual);
  dual->add_option("--random", cfg.random_cases, "Number of random cases");
  dual->add_option("--seed", cfg.rng_seed, "Pseudo-random generator seed");
  dual->add_option("--max-rank", cfg.max_rank, "Largest random rank")->check(CLI::PositiveNumber);
  dual->add_option("--max-length", cfg.max_length, "Longest random path");

  auto* pants = sub("pants", "Pair-of-pants edge measures", cmd_pants);
  pants->add_option("--m", cfg.m_values, "m1,m2,m3")->delimiter(',');

  auto* ann = sub("annulus", "Annulus coordinates", cmd_annulus);
  ann->add_option("--m", cfg.m_values, "m");
  ann->add_option("--t", cfg.t_value, "t");

  auto* tv = sub("track-validate", "Check switch conditions of a measure", cmd_track_validate);
  tv->add_option("--track", cfg.track_file, "Train track (JSON)");
  tv->add_option("--measure", cfg.measure, "Measure as inline JSON or a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Outcome o;
  std::string name;
  try {
    for (const auto& [s, handler] : commands) {
      if (s->parsed()) {
        name = s->get_name();
        handler(cfg, o);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }

  Json report{{"schema_version", kSchemaVersion},
              {"command", name},
              {"inputs", std::move(o.inputs)},
              {"result", std::move(o.result)}};
  const std::string text = report.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "usage error: cannot write '" << cfg.output << "'\n";
      return 2;
    }
    file << text;
  }
  if (!cfg.json_only) err << o.summary.str();
  return 0;
}

}  // namespace signstab
