#include "hingeforge/geom.hpp"

#include <algorithm>
#include <limits>

namespace hingeforge {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::format_error: return "format-error";
    case ErrorCode::non_manifold: return "non-manifold";
    case ErrorCode::open_boundary: return "open-boundary";
    case ErrorCode::nonplanar_face: return "nonplanar-face";
    case ErrorCode::nonconvex_face: return "nonconvex-face";
    case ErrorCode::euler_violation: return "euler-violation";
    case ErrorCode::invalid_anchor: return "invalid-anchor";
    case ErrorCode::invalid_tree: return "invalid-tree";
    case ErrorCode::crossing_trees: return "crossing-trees";
    case ErrorCode::clearance_failure: return "clearance-failure";
    case ErrorCode::not_a_net: return "not-a-net";
    case ErrorCode::forced_order_failure: return "forced-order-failure";
    case ErrorCode::glue_mismatch: return "glue-mismatch";
    case ErrorCode::internal_error: return "internal-error";
  }
  return "unknown";
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::format_error: return 2;
    case ErrorCode::internal_error: return 3;
    default: return 1;
  }
}

Vec2 Vec2::normalized() const {
  double n = norm();
  if (n == 0.0) fail(ErrorCode::internal_error, "geom", "normalizing zero vector");
  return {x / n, y / n};
}

Rot2 Rot2::from_to(Vec2 from, Vec2 to) {
  // rotation taking unit vector `from` onto unit vector `to`
  return {from.dot(to), from.cross(to)};
}

Isometry2 Isometry2::map_segment(Vec2 a0, Vec2 b0, Vec2 a1, Vec2 b1) {
  Vec2 d0 = (b0 - a0).normalized();
  Vec2 d1 = (b1 - a1).normalized();
  Rot2 r = Rot2::from_to(d0, d1);
  return {r, a1 - r(a0)};
}

double signed_area2(Vec2 p, Vec2 q, Vec2 r) {
  return (q - p).cross(r - p);
}

Orientation orient2d(Vec2 p, Vec2 q, Vec2 r, const Tolerance& tol) {
  double a = signed_area2(p, q, r);
  // Scale the collinearity band by the segment extents so the decision is
  // stable under translation of the whole configuration.
  double scale = std::max({1.0, (q - p).norm(), (r - p).norm()});
  if (std::abs(a) <= tol.absolute_eps * scale) return Orientation::collinear;
  return a > 0 ? Orientation::positive : Orientation::negative;
}

const char* segment_relation_name(SegmentRelation r) {
  switch (r) {
    case SegmentRelation::disjoint: return "disjoint";
    case SegmentRelation::shared_endpoint: return "shared-endpoint";
    case SegmentRelation::proper_cross: return "proper-cross";
    case SegmentRelation::touch_interior: return "touch-interior";
    case SegmentRelation::overlap: return "overlap";
  }
  return "unknown";
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = ab.dot(ab);
  if (len2 == 0.0) return dist(p, a);
  double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return dist(p, a + t * ab);
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  return std::min(std::min(point_segment_distance(a, c, d),
                           point_segment_distance(b, c, d)),
                  std::min(point_segment_distance(c, a, b),
                           point_segment_distance(d, a, b)));
}

SegmentRelation segment_classify(Vec2 a, Vec2 b, Vec2 c, Vec2 d,
                                 const Tolerance& tol) {
  double eps = tol.absolute_eps;
  if (dist(a, b) <= eps || dist(c, d) <= eps)
    fail(ErrorCode::invalid_tree, "geom", "degenerate segment in classification");

  bool ac = dist(a, c) <= eps, ad = dist(a, d) <= eps;
  bool bc = dist(b, c) <= eps, bd = dist(b, d) <= eps;
  int shared = int(ac) + int(ad) + int(bc) + int(bd);
  if (shared >= 2) return SegmentRelation::overlap;  // identical segments

  Orientation o1 = orient2d(a, b, c, tol);
  Orientation o2 = orient2d(a, b, d, tol);
  Orientation o3 = orient2d(c, d, a, tol);
  Orientation o4 = orient2d(c, d, b, tol);

  if (o1 == Orientation::collinear && o2 == Orientation::collinear) {
    // collinear: compare intervals along the common line
    Vec2 dir = (b - a).normalized();
    double ta = 0.0, tb = (b - a).dot(dir);
    double tc = (c - a).dot(dir), td = (d - a).dot(dir);
    if (ta > tb) std::swap(ta, tb);
    if (tc > td) std::swap(tc, td);
    double lo = std::max(ta, tc), hi = std::min(tb, td);
    if (hi - lo > eps) return SegmentRelation::overlap;
    if (hi - lo >= -eps) {
      // touch at a single point, necessarily an endpoint of both
      return shared == 1 ? SegmentRelation::shared_endpoint
                         : SegmentRelation::touch_interior;
    }
    return SegmentRelation::disjoint;
  }

  if (shared == 1) {
    // one coincident endpoint pair; any further contact means overlap/touch
    Vec2 pa = ac || ad ? b : a;          // far endpoint of segment ab
    Vec2 pc = ac || bc ? d : c;          // far endpoint of segment cd
    Vec2 at = ac || ad ? a : b;          // the shared point
    if (point_segment_distance(pa, c, d) <= eps &&
        dist(pa, c) > eps && dist(pa, d) > eps)
      return SegmentRelation::touch_interior;
    if (point_segment_distance(pc, a, b) <= eps &&
        dist(pc, a) > eps && dist(pc, b) > eps)
      return SegmentRelation::touch_interior;
    (void)at;
    return SegmentRelation::shared_endpoint;
  }

  // endpoint of one segment interior to the other
  if (point_segment_distance(c, a, b) <= eps ||
      point_segment_distance(d, a, b) <= eps ||
      point_segment_distance(a, c, d) <= eps ||
      point_segment_distance(b, c, d) <= eps)
    return SegmentRelation::touch_interior;

  if (o1 != Orientation::collinear && o2 != Orientation::collinear &&
      o3 != Orientation::collinear && o4 != Orientation::collinear &&
      o1 != o2 && o3 != o4)
    return SegmentRelation::proper_cross;

  return SegmentRelation::disjoint;
}

double ccw_angle_between(double from_angle, double to_angle,
                         const Tolerance& tol) {
  double d = std::fmod(to_angle - from_angle, kTwoPi);
  if (d < 0) d += kTwoPi;
  if (d < tol.angle_eps || kTwoPi - d < tol.angle_eps) return 0.0;
  return d;
}

double ccw_angle(Vec2 at, Vec2 from_dir, Vec2 to_dir, const Tolerance& tol) {
  Vec2 u = from_dir - at;
  Vec2 v = to_dir - at;
  if (u.norm() == 0.0 || v.norm() == 0.0)
    fail(ErrorCode::internal_error, "geom", "ccw_angle with zero direction");
  return ccw_angle_between(u.angle(), v.angle(), tol);
}

double polygon_signed_area(const PlanarPolygon& p) {
  double s = 0.0;
  size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = p.vertices[i];
    Vec2 b = p.vertices[(i + 1) % n];
    s += a.cross(b);
  }
  return 0.5 * s;
}

double polygon_perimeter(const PlanarPolygon& p) {
  double s = 0.0;
  size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i)
    s += dist(p.vertices[i], p.vertices[(i + 1) % n]);
  return s;
}

bool polygon_is_simple(const PlanarPolygon& p, const Tolerance& tol) {
  size_t n = p.vertices.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i)
    if (dist(p.vertices[i], p.vertices[(i + 1) % n]) <= tol.absolute_eps)
      return false;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Vec2 a = p.vertices[i], b = p.vertices[(i + 1) % n];
      Vec2 c = p.vertices[j], d = p.vertices[(j + 1) % n];
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      SegmentRelation rel = segment_classify(a, b, c, d, tol);
      if (adjacent) {
        if (rel != SegmentRelation::shared_endpoint) return false;
      } else {
        if (rel != SegmentRelation::disjoint) return false;
      }
    }
  }
  return true;
}

double polygon_area(const PlanarPolygon& p, const Tolerance& tol) {
  if (!polygon_is_simple(p, tol))
    fail(ErrorCode::invalid_tree, "geom", "polygon_area on non-simple polygon");
  return std::abs(polygon_signed_area(p));
}

bool point_on_polygon_boundary(Vec2 pt, const PlanarPolygon& p,
                               const Tolerance& tol) {
  size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i)
    if (point_segment_distance(pt, p.vertices[i], p.vertices[(i + 1) % n]) <=
        tol.absolute_eps)
      return true;
  return false;
}

bool point_in_polygon(Vec2 pt, const PlanarPolygon& p, const Tolerance& tol) {
  if (point_on_polygon_boundary(pt, p, tol)) return false;
  // even-odd ray cast toward +x with half-open vertex rule
  bool inside = false;
  size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 a = p.vertices[i], b = p.vertices[(i + 1) % n];
    if ((a.y <= pt.y) != (b.y <= pt.y)) {
      double xint = a.x + (pt.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (xint > pt.x) inside = !inside;
    }
  }
  return inside;
}

Vec2 polygon_interior_point(const PlanarPolygon& p, const Tolerance& tol) {
  size_t n = p.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 prev = p.vertices[(i + n - 1) % n];
    Vec2 cur = p.vertices[i];
    Vec2 next = p.vertices[(i + 1) % n];
    Vec2 c = (prev + cur + next) * (1.0 / 3.0);
    if (point_in_polygon(c, p, tol)) return c;
    // shrink toward the corner in case the ear is thin
    Vec2 c2 = cur + (c - cur) * 0.1;
    if (point_in_polygon(c2, p, tol)) return c2;
  }
  fail(ErrorCode::internal_error, "geom", "no interior point found");
}

bool polygons_overlap(const PlanarPolygon& p, const PlanarPolygon& q,
                      const Tolerance& tol) {
  size_t np = p.vertices.size(), nq = q.vertices.size();
  for (size_t i = 0; i < np; ++i) {
    Vec2 a = p.vertices[i], b = p.vertices[(i + 1) % np];
    for (size_t j = 0; j < nq; ++j) {
      Vec2 c = q.vertices[j], d = q.vertices[(j + 1) % nq];
      if (segment_classify(a, b, c, d, tol) == SegmentRelation::proper_cross)
        return true;
    }
  }
  // Aligned boundaries can overlap without proper crossings; probe edge
  // points and containment.
  auto edge_probe = [&](const PlanarPolygon& s, const PlanarPolygon& t) {
    size_t n = s.vertices.size();
    for (size_t i = 0; i < n; ++i) {
      Vec2 a = s.vertices[i], b = s.vertices[(i + 1) % n];
      for (double f : {0.25, 0.5, 0.75})
        if (point_in_polygon(a + f * (b - a), t, tol)) return true;
    }
    return false;
  };
  if (edge_probe(p, q) || edge_probe(q, p)) return true;
  if (point_in_polygon(polygon_interior_point(p, tol), q, tol)) return true;
  if (point_in_polygon(polygon_interior_point(q, tol), p, tol)) return true;
  return false;
}

}  // namespace hingeforge
