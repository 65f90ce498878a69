#pragma once

// JSON encodings of seeds, paths, triangulations, points, cones and tracks.
//
// Integers may be written as JSON numbers or as decimal strings; scalars use
// the exact text encoding of parse_scalar. Indices are 0-based.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "signstab/reduction.hpp"
#include "signstab/traintrack.hpp"

namespace signstab {

using Json = nlohmann::json;

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json load_json_file(const std::filesystem::path& file);
/// Parses inline JSON text; ParseError on syntax problems.
Json parse_json_text(const std::string& text);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
Scalar scalar_from_json(const Json& j);

/// { "n": int, "unfrozen": [...], "B": [[...]] }
Seed seed_from_json(const Json& j);
Json to_json(const Seed& s);

/// { "arcs": [...], "frozen": [...], "triangles": [[a,b,c], ...] }
Triangulation triangulation_from_json(const Json& j);
Json to_json(const Triangulation& t);

/// A seed document or a triangulation document (recognized by "triangles").
Seed seed_like_from_json(const Json& j);

/// { "seed": <inline seed/triangulation or file name relative to base_dir>,
///   "steps": [ {"flip": k} | {"perm": [images]} | {"cycles": [[...], ...]} ] }
MutationPath path_from_json(const Json& j, const std::filesystem::path& base_dir);
MutationPath load_path(const std::filesystem::path& file);
/// The path with its seed inlined.
Json to_json(const MutationPath& p);

/// { "coords": [...] } or a bare array.
TropPoint point_from_json(const Json& j);
Json to_json(const TropPoint& w);

/// { "generators": [[...], ...] }
Cone cone_from_json(const Json& j);
Json to_json(const Cone& c);

/// { "edges": [...], "switches": [{"in": e0, "out": [e1, e2]}], "boundary": [...] }
TrainTrack track_from_json(const Json& j);
Json to_json(const TrainTrack& t);
/// { "edge": scalar, ... }
Measure measure_from_json(const Json& j);

Json to_json(const IntMatrix& m);
Json to_json(const Rational& q);
Json to_json(const IntPoly& p);
Json to_json(const SpectralEstimate& e);

/// Loads `spec` as a file if it exists, else parses it as inline JSON.
Json json_arg(const std::string& spec);

}  // namespace signstab
