#include "signstab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace signstab {

namespace fs = std::filesystem;

Json load_json_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open '" + file.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON in '" + file.string() + "': " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON: " + std::string(e.what()));
  }
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ParseError(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::size_t index_from_json(const Json& j) {
  const Integer z = integer_from_json(j);
  if (z < 0 || !z.fits_ulong_p()) throw ParseError("index must be a nonnegative integer");
  return z.get_ui();
}

std::string label_from_json(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("labels must be strings or integers");
}

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) throw ParseError("expected an integer, got " + j.get<std::string>());
    return q.get_num();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an exact rational, got " + j.dump());
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(integer_from_json(j));
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  throw ParseError("expected an exact scalar (integer or string), got " + j.dump());
}

// ------------------------------------------------------------------- seeds

Seed seed_from_json(const Json& j) {
  const Json& rows = array_field(j, "B");
  const std::size_t n = rows.size();
  if (j.contains("n") && index_from_json(j.at("n")) != n) {
    throw ParseError("\"n\" does not match the size of \"B\"");
  }
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("\"B\" must be square");
    for (std::size_t c = 0; c < n; ++c) b(i, c) = integer_from_json(rows[i][c]);
  }
  std::vector<std::size_t> unfrozen;
  if (j.contains("unfrozen")) {
    for (const auto& v : array_field(j, "unfrozen")) unfrozen.push_back(index_from_json(v));
  } else {
    for (std::size_t i = 0; i < n; ++i) unfrozen.push_back(i);
  }
  return Seed(std::move(b), std::move(unfrozen));
}

Json to_json(const Seed& s) {
  return Json{{"n", s.size()}, {"unfrozen", s.unfrozen()}, {"B", to_json(s.b())}};
}

Triangulation triangulation_from_json(const Json& j) {
  Triangulation t;
  for (const auto& a : array_field(j, "arcs")) t.arcs.push_back(label_from_json(a));
  if (j.contains("frozen"))
    for (const auto& a : array_field(j, "frozen")) t.frozen.push_back(label_from_json(a));
  for (const auto& tri : array_field(j, "triangles")) {
    if (!tri.is_array() || tri.size() != 3) throw ParseError("triangles must have three sides");
    t.triangles.push_back({label_from_json(tri[0]), label_from_json(tri[1]),
                           label_from_json(tri[2])});
  }
  return t;
}

Json to_json(const Triangulation& t) {
  Json tris = Json::array();
  for (const auto& tri : t.triangles) tris.push_back({tri[0], tri[1], tri[2]});
  return Json{{"arcs", t.arcs}, {"frozen", t.frozen}, {"triangles", tris}};
}

Seed seed_like_from_json(const Json& j) {
  if (j.is_object() && j.contains("triangles")) {
    return b_from_triangulation(triangulation_from_json(j));
  }
  return seed_from_json(j);
}

// ------------------------------------------------------------------- paths

MutationPath path_from_json(const Json& j, const fs::path& base_dir) {
  const Json& seed_spec = field(j, "seed");
  Seed seed = seed_spec.is_string()
                  ? seed_like_from_json(load_json_file(base_dir / seed_spec.get<std::string>()))
                  : seed_like_from_json(seed_spec);
  std::vector<PathStep> steps;
  const std::size_t n = seed.size();
  for (const auto& s : array_field(j, "steps")) {
    if (s.contains("flip")) {
      steps.push_back(Flip{index_from_json(s.at("flip"))});
    } else if (s.contains("perm")) {
      Permutation sigma;
      for (const auto& v : s.at("perm")) sigma.push_back(index_from_json(v));
      steps.push_back(Permute{std::move(sigma)});
    } else if (s.contains("cycles")) {
      std::vector<std::vector<std::size_t>> cycles;
      for (const auto& c : s.at("cycles")) {
        cycles.emplace_back();
        for (const auto& v : c) cycles.back().push_back(index_from_json(v));
      }
      steps.push_back(Permute{from_cycles(n, cycles)});
    } else {
      throw ParseError("path step must have \"flip\", \"perm\" or \"cycles\": " + s.dump());
    }
  }
  return MutationPath(std::move(seed), std::move(steps));
}

MutationPath load_path(const fs::path& file) {
  return path_from_json(load_json_file(file), file.parent_path());
}

Json to_json(const MutationPath& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps()) {
    if (const auto* f = std::get_if<Flip>(&s)) {
      steps.push_back({{"flip", f->k}});
    } else {
      steps.push_back({{"perm", std::get<Permute>(s).sigma}});
    }
  }
  return Json{{"seed", to_json(p.initial())}, {"steps", steps}};
}

// ------------------------------------------------------- points and cones

TropPoint point_from_json(const Json& j) {
  const Json& coords = j.is_object() ? array_field(j, "coords") : j;
  if (!coords.is_array()) throw ParseError("a point must be an array of scalars");
  TropPoint w;
  for (const auto& v : coords) w.push_back(scalar_from_json(v));
  return w;
}

Json to_json(const TropPoint& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

Cone cone_from_json(const Json& j) {
  Cone c;
  for (const auto& g : array_field(j, "generators")) c.generators.push_back(point_from_json(g));
  return c;
}

Json to_json(const Cone& c) {
  Json gens = Json::array();
  for (const auto& g : c.generators) gens.push_back(to_json(g));
  return Json{{"generators", gens}};
}

// ------------------------------------------------------------------ tracks

TrainTrack track_from_json(const Json& j) {
  TrainTrack t;
  for (const auto& e : array_field(j, "edges")) t.edges.push_back(label_from_json(e));
  for (const auto& s : array_field(j, "switches")) {
    const Json& out = array_field(s, "out");
    if (out.size() != 2) throw ParseError("a switch has exactly two outgoing edges");
    t.switches.push_back(
        {label_from_json(field(s, "in")), {label_from_json(out[0]), label_from_json(out[1])}});
  }
  if (j.contains("boundary"))
    for (const auto& e : array_field(j, "boundary")) t.boundary_edges.push_back(label_from_json(e));
  const std::set<std::string> known(t.edges.begin(), t.edges.end());
  auto check = [&](const std::string& e) {
    if (!known.count(e)) throw ParseError("unknown edge '" + e + "' in train track");
  };
  for (const auto& s : t.switches) {
    check(s.incoming);
    check(s.outgoing.first);
    check(s.outgoing.second);
  }
  for (const auto& e : t.boundary_edges) check(e);
  return t;
}

Json to_json(const TrainTrack& t) {
  Json sw = Json::array();
  for (const auto& s : t.switches)
    sw.push_back({{"in", s.incoming}, {"out", {s.outgoing.first, s.outgoing.second}}});
  return Json{{"edges", t.edges}, {"switches", sw}, {"boundary", t.boundary_edges}};
}

Measure measure_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("a measure must be an object edge -> weight");
  Measure m;
  for (const auto& [k, v] : j.items()) m[k] = rational_from_json(v);
  return m;
}

// ----------------------------------------------------------------- outputs

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& v = m(i, c);
      if (v.fits_slong_p()) {
        row.push_back(v.get_si());
      } else {
        row.push_back(v.get_str());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const IntPoly& p) {
  Json c = Json::array();
  for (const auto& v : p.coeffs()) c.push_back(v.get_str());
  return Json{{"coefficients", c}, {"text", to_string(p)}};
}

Json to_json(const SpectralEstimate& e) { return Json{{"value", e.value}, {"bound", e.bound}}; }

Json json_arg(const std::string& spec) {
  std::error_code ec;
  if (!spec.empty() && spec[0] != '[' && spec[0] != '{' && fs::is_regular_file(spec, ec)) {
    return load_json_file(spec);
  }
  return parse_json_text(spec);
}

}  // namespace signstab
