#pragma once

#include <string>

#include "hingeforge/glue.hpp"

#include "json.hpp"

namespace hingeforge {

using Json = nlohmann::ordered_json;

// --- deterministic serialization: fixed field order, 12 significant digits ---

std::string json_to_string(const Json& j);
double round12(double x);

// --- mesh (OFF text) ---

Polyhedron parse_off(const std::string& text, Tolerance base_tol = {});
std::string write_off(const Polyhedron& P);

// --- surface drawings (trees) ---

Json anchor_to_json(const Polyhedron& P, const SurfacePoint& sp);
SurfacePoint anchor_from_json(const Polyhedron& P, const Json& j);
SurfaceTree tree_from_json(const Polyhedron& P, const Json& j);
Json tree_to_json(const Polyhedron& P, const SurfaceTree& T);

// --- dissection interchange ---

Json dissection_to_json(const HingedDissection& d, const std::string& source,
                        double tolerance);
HingedDissection dissection_from_json(const Json& j);

// --- reports ---

Json validation_to_json(const ValidationReport& a, const ValidationReport& b,
                        const NonCrossReport& nc);
Json cycle_to_json(const Polyhedron& P, const SeparatingCycle& c,
                   const std::vector<int>& forced);
Json classification_to_json(const Classification& c, const HingeAngles& ha);
Json metric_to_json(const GluedMetric& m, const AlexandrovReport& ar,
                    double residual);

// --- rendering ---

struct RenderOptions {
  bool overlay_cycle = false;
};

// Deterministic SVG of a net: outer boundary, per-piece fills (when the
// dissection is given), cut-tree image, hinge markers, optional cycle.
std::string render_net_svg(const Net& net,
                           const std::vector<PlanarPolygon>& placed_pieces,
                           const std::vector<Vec2>& hinge_points,
                           const std::vector<std::vector<Vec2>>& overlay);

// Axonometric projection of the surface drawing and cycle, for cmd_cycle.
std::string render_cycle_svg(const Polyhedron& P, const SurfaceTree& T1,
                             const SurfaceTree& T2, const SeparatingCycle& c);

// Maps a surface polyline into a net development (used for cycle overlays).
std::vector<std::vector<Vec2>> map_polyline_into_net(const Polyhedron& P,
                                                     const SurfaceTree& cut,
                                                     const SurfacePolyline& pl);

}  // namespace hingeforge
