#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "hingeforge/errors.hpp"

namespace hingeforge {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// Single tolerance policy used for every equality/incidence decision in the
// pipeline. absolute_eps is in input length units; loaders rescale it by the
// mesh bounding-box diagonal.
struct Tolerance {
  double absolute_eps = 1e-9;
  double angle_eps = 1e-9;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
  double dot(Vec2 o) const { return x * o.x + y * o.y; }
  double cross(Vec2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const;
  // counterclockwise quarter turn
  Vec2 perp() const { return {-y, x}; }
  Vec2 rotated(double angle) const {
    double c = std::cos(angle), s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
  double angle() const { return std::atan2(y, x); }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Rotation part of a planar rigid motion.
struct Rot2 {
  double c = 1.0;
  double s = 0.0;

  static Rot2 from_angle(double a) { return {std::cos(a), std::sin(a)}; }
  static Rot2 from_to(Vec2 from, Vec2 to);  // unit vectors
  Vec2 operator()(Vec2 v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
  Rot2 then(Rot2 o) const { return {o.c * c - o.s * s, o.s * c + o.c * s}; }
  Rot2 inverse() const { return {c, -s}; }
  double angle() const { return std::atan2(s, c); }
};

// Orientation-preserving planar isometry p -> r(p) + t.
struct Isometry2 {
  Rot2 r;
  Vec2 t;

  Vec2 operator()(Vec2 p) const { return r(p) + t; }
  Vec2 apply_dir(Vec2 d) const { return r(d); }
  // this after inner: (*this)(inner(p))
  Isometry2 compose(const Isometry2& inner) const {
    return {inner.r.then(r), (*this)(inner.t)};
  }
  Isometry2 inverse() const {
    Rot2 ri = r.inverse();
    return {ri, -ri(t)};
  }
  // Unique orientation-preserving isometry with a0 -> a1 and b0 -> b1
  // (segment lengths assumed equal).
  static Isometry2 map_segment(Vec2 a0, Vec2 b0, Vec2 a1, Vec2 b1);
  static Isometry2 identity() { return {}; }
};

enum class Orientation { negative = -1, collinear = 0, positive = 1 };

double signed_area2(Vec2 p, Vec2 q, Vec2 r);
Orientation orient2d(Vec2 p, Vec2 q, Vec2 r, const Tolerance& tol);

enum class SegmentRelation {
  disjoint,
  shared_endpoint,
  proper_cross,
  touch_interior,
  overlap,
};

const char* segment_relation_name(SegmentRelation r);

// Exact configuration of two positive-length segments; degenerate input throws.
SegmentRelation segment_classify(Vec2 a, Vec2 b, Vec2 c, Vec2 d,
                                 const Tolerance& tol);

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// Counterclockwise angle in [0, 2pi) swept from ray(at->from_dir) to
// ray(at->to_dir). Coincident rays give 0.
double ccw_angle(Vec2 at, Vec2 from_dir, Vec2 to_dir, const Tolerance& tol);

// Counterclockwise sweep between two direction angles, in [0, 2pi).
double ccw_angle_between(double from_angle, double to_angle,
                         const Tolerance& tol);

// Simple polygon with counterclockwise vertex order.
struct PlanarPolygon {
  std::vector<Vec2> vertices;
};

double polygon_signed_area(const PlanarPolygon& p);
double polygon_perimeter(const PlanarPolygon& p);
bool polygon_is_simple(const PlanarPolygon& p, const Tolerance& tol);
// Shoelace area; throws on non-simple input.
double polygon_area(const PlanarPolygon& p, const Tolerance& tol);

bool point_on_polygon_boundary(Vec2 pt, const PlanarPolygon& p,
                               const Tolerance& tol);
// Strict interior test (boundary points are outside).
bool point_in_polygon(Vec2 pt, const PlanarPolygon& p, const Tolerance& tol);
// A point strictly inside a simple polygon (ear centroid).
Vec2 polygon_interior_point(const PlanarPolygon& p, const Tolerance& tol);

// True iff the interiors intersect; shared boundary alone is not overlap.
bool polygons_overlap(const PlanarPolygon& p, const PlanarPolygon& q,
                      const Tolerance& tol);

}  // namespace hingeforge
