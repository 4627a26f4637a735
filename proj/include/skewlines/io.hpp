#pragma once

#include "json.hpp"

#include <string>

#include "skewlines/configuration.hpp"
#include "skewlines/signed_graph.hpp"
#include "skewlines/solver.hpp"
#include "skewlines/spectral.hpp"

namespace skewlines {

using Json = nlohmann::json;

// Line configuration:
//   {"pair_distance": 1.0, "label": "...",
//    "lines": [{"point": [x, y, z], "direction": [x, y, z]}, ...]}
// Lines are canonicalized on load and written with their moment point.
Json to_json(const LineConfiguration& config);
LineConfiguration configuration_from_json(const Json& j);

// Signed graph: {"n": 7, "edges": [[1, 2, 1], [1, 3, -1], ...]}, every pair
// exactly once with i < j.
Json to_json(const SignedCompleteGraph& g);
SignedCompleteGraph graph_from_json(const Json& j);

// {"n": .., "entries": [[..]], "eigenvalues": [..], "signature": [p, q, z], "zero_tol": ..}
Json to_json(const SymmetricMatrixReport& report);
Json to_json(const Signature& s);
Json to_json(const CliqueWitness& w);
Json to_json(const SwitchingMap& m);
Json to_json(const VerificationReport& report);
Json to_json(const SolverOptions& opts);
SolverOptions solver_options_from_json(const Json& j);

/// Wavefront OBJ with one closed cylinder per line: `segments` vertices per
/// rim, centered on the moment point, `length` long.
std::string export_obj(const LineConfiguration& config, double radius, double length,
                       int segments = 32);

/// index,point_x,point_y,point_z,direction_x,direction_y,direction_z
std::string export_csv(const LineConfiguration& config);

/// Parses JSON text; malformed input and schema violations throw InvalidInput.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace skewlines
