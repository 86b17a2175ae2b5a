#pragma once

#include <string>
#include <vector>

#include "tetratwist/aggregate.hpp"
#include "tetratwist/analysis.hpp"

namespace tetra::io {

/// Aggregate JSON, schema:
///   { "kind": string, "edge_length": number, "parameters": object,
///     "tetrahedra": [ { "id": int, "vertices": [[x,y,z] x4] } ] }
/// Numbers carry 17 significant digits so doubles round-trip losslessly;
/// output is byte deterministic.
std::string aggregate_to_json(const Aggregate& agg);

/// Parses aggregate JSON; malformed input raises std::runtime_error naming
/// the offending field (or the parser's byte position).
Aggregate aggregate_from_json(const std::string& text);

Aggregate load_aggregate(const std::string& path);
void save_text(const std::string& path, const std::string& text);

/// Wavefront OBJ with one `o tet_<id>` group per tetrahedron; vertices are
/// emitted per tetrahedron (no sharing), 4 vertices + 4 faces each.
std::string aggregate_to_obj(const Aggregate& agg);

struct ObjData {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based
    std::vector<std::string> groups;
};

/// Minimal OBJ reader for v/f/o records (round-trip checks).
ObjData parse_obj(const std::string& text);

/// SVG drawing of a junction projection: both triangles as closed polygons,
/// centroid markers, and a label with (angle_min in degrees,
/// offset_in_delta). Scale: 100 units per edge length, y axis up.
std::string junction_to_svg(const FaceJunction& j);

/// 17-significant-digit formatting used by every JSON emitter.
std::string format_double(double v);

}  // namespace tetra::io
