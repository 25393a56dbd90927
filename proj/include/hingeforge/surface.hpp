#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hingeforge/geom.hpp"

namespace hingeforge {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(Vec3 o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const;
};

inline Vec3 operator*(double s, Vec3 v) { return v * s; }

// A point on the surface in canonical anchored form: points on an edge or
// vertex are never stored as face-interior.
struct SurfacePoint {
  enum class Kind { vertex, edge, face };

  Kind kind = Kind::vertex;
  int ref = -1;     // vertex id / edge id / face id
  double t = 0.0;   // edge parameter in (0,1), measured from edge.a to edge.b
  Vec2 uv;          // face chart coordinates for face anchors

  static SurfacePoint at_vertex(int v) { return {Kind::vertex, v, 0.0, {}}; }
  static SurfacePoint on_edge(int e, double t) { return {Kind::edge, e, t, {}}; }
  static SurfacePoint in_face(int f, Vec2 uv) { return {Kind::face, f, 0.0, uv}; }
};

bool same_surface_point(const SurfacePoint& a, const SurfacePoint& b,
                        double eps);

struct Polyhedron;
// Geometric coincidence via 3D positions; robust across anchor kinds.
bool surface_points_close(const Polyhedron& P, const SurfacePoint& a,
                          const SurfacePoint& b, double eps);

struct Polyhedron {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;  // CCW viewed from outside

  struct Edge {
    int a = -1, b = -1;            // a < b
    int face_left = -1;            // face whose cycle traverses a -> b
    int face_right = -1;           // face whose cycle traverses b -> a
  };
  std::vector<Edge> edges;

  struct FaceFrame {
    Vec3 origin, ex, ey, normal;
  };
  std::vector<FaceFrame> frames;
  std::vector<std::vector<Vec2>> charts;      // per face, chart coords of cycle
  std::vector<std::vector<int>> vertex_faces; // incident faces per vertex
  std::vector<double> cone_angles;

  Tolerance tol;          // absolute_eps scaled by bbox diagonal
  double bbox_diag = 0.0;
  double total_area = 0.0;

  int edge_between(int u, int v) const;  // -1 if none
  int face_vertex_pos(int f, int v) const;
  const Edge& edge(int e) const { return edges[e]; }
  int other_face(int e, int f) const;
  bool face_contains_edge(int f, int e) const;

  Vec3 face_point3d(int f, Vec2 uv) const;
  PlanarPolygon face_polygon(int f) const { return {charts[f]}; }
};

// Builds and fully validates a polyhedron. base_tol.absolute_eps is scaled by
// the bounding-box diagonal.
Polyhedron build_polyhedron(std::vector<Vec3> vertices,
                            std::vector<std::vector<int>> faces,
                            Tolerance base_tol = {});

// --- surface point helpers ---

std::vector<int> point_faces(const Polyhedron& P, const SurfacePoint& sp);
bool point_on_face(const Polyhedron& P, const SurfacePoint& sp, int f);
Vec2 chart_position(const Polyhedron& P, const SurfacePoint& sp, int f);
Vec3 surface_position3d(const Polyhedron& P, const SurfacePoint& sp);
// Snaps a chart-coordinate point of face f to its canonical anchor.
SurfacePoint canonical_point(const Polyhedron& P, int f, Vec2 uv);

// --- intrinsic angular structure around a surface point ---

struct PointStar {
  SurfacePoint at;
  double total_angle = 0.0;  // cone angle at a vertex, otherwise 2*pi

  struct Sector {
    int face = -1;
    double start = 0.0;         // star angle of the sector's opening ray
    double angle = 0.0;         // angular extent
    double chart_offset = 0.0;  // star angle = chart direction angle + offset
    Vec2 apex;                  // chart coords of the star point in `face`
  };
  std::vector<Sector> sectors;

  double normalize(double phi) const;
  // Star angle in [0, total_angle) of a chart direction anchored at the point.
  double direction_angle(int face, Vec2 chart_dir, const Tolerance& tol) const;
  const Sector& sector_at(double phi, const Tolerance& tol) const;
  // Chart realization (face + unit chart direction) of a star angle.
  std::pair<int, Vec2> direction_at(double phi, const Tolerance& tol) const;
  // Chart position of the point at polar coords (phi, radius) around the star.
  std::pair<int, Vec2> position_at(double phi, double radius,
                                   const Tolerance& tol) const;
};

PointStar build_point_star(const Polyhedron& P, const SurfacePoint& sp);

double cone_angle(const Polyhedron& P, int v);

// Isometry mapping chart coords of `from_face` into the chart plane of
// `to_face`, unfolded flat across edge e (shared by both faces).
Isometry2 edge_transfer(const Polyhedron& P, int e, int from_face, int to_face);

// Develops a walk of faces into the plane; consecutive faces must be adjacent.
// The seed face is placed by its own chart (identity).
std::map<int, Isometry2> develop(const Polyhedron& P, int seed_face,
                                 const std::vector<int>& face_walk);

// Tangent direction at a vertex: a carrier face and a unit chart direction.
struct SurfaceDirection {
  int face = -1;
  Vec2 dir;
};

enum class WedgeSide { left, right };  // left = counterclockwise sweep

double wedge_angle(const Polyhedron& P, int v, const SurfaceDirection& dir_in,
                   const SurfaceDirection& dir_out, WedgeSide side);

// Straight segment inside one face, with cached chart coordinates.
struct SurfaceSegment {
  SurfacePoint a, b;
  int face = -1;
  Vec2 a_uv, b_uv;
};

double surface_distance_point_segment(const Polyhedron& P,
                                      const SurfacePoint& p,
                                      const SurfaceSegment& s);

struct SurfacePolyline {
  std::vector<SurfacePoint> points;
  std::vector<int> carrier_faces;  // one per consecutive pair

  std::vector<SurfaceSegment> segments(const Polyhedron& P) const;
  double length(const Polyhedron& P) const;
};

// Validates points, carriers and pairwise distinctness; throws on failure.
SurfacePolyline make_polyline(const Polyhedron& P,
                              std::vector<SurfacePoint> points,
                              std::vector<int> carrier_faces,
                              const std::string& stage);

// --- straight-line tracing through a lazily built development ---

struct TraceResult {
  std::vector<SurfaceSegment> segments;
  SurfacePoint end;
  int end_face = -1;
  Vec2 end_uv;
  Isometry2 end_placement;  // chart of end_face -> trace plane
};

// Traces the straight planar segment from the start point (placed by
// start_placement applied to its chart position in start_face) to
// target_plane, crossing mesh edges as needed.
TraceResult trace_to(const Polyhedron& P, const SurfacePoint& start,
                     int start_face, const Isometry2& start_placement,
                     Vec2 target_plane, const std::string& stage);

}  // namespace hingeforge
