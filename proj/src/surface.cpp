#include "hingeforge/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace hingeforge {

namespace {
const std::string kStage = "mesh";
}

Vec3 Vec3::normalized() const {
  double n = norm();
  if (n == 0.0) fail(ErrorCode::internal_error, kStage, "normalizing zero vector");
  return {x / n, y / n, z / n};
}

bool same_surface_point(const SurfacePoint& a, const SurfacePoint& b,
                        double eps) {
  if (a.kind != b.kind || a.ref != b.ref) return false;
  switch (a.kind) {
    case SurfacePoint::Kind::vertex: return true;
    case SurfacePoint::Kind::edge: return std::abs(a.t - b.t) <= eps;
    case SurfacePoint::Kind::face: return dist(a.uv, b.uv) <= eps;
  }
  return false;
}

bool surface_points_close(const Polyhedron& P, const SurfacePoint& a,
                          const SurfacePoint& b, double eps) {
  return (surface_position3d(P, a) - surface_position3d(P, b)).norm() <= eps;
}

int Polyhedron::edge_between(int u, int v) const {
  int a = std::min(u, v), b = std::max(u, v);
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].a == a && edges[e].b == b) return int(e);
  return -1;
}

int Polyhedron::face_vertex_pos(int f, int v) const {
  const auto& cyc = faces[f];
  for (size_t i = 0; i < cyc.size(); ++i)
    if (cyc[i] == v) return int(i);
  return -1;
}

int Polyhedron::other_face(int e, int f) const {
  const Edge& ed = edges[e];
  if (ed.face_left == f) return ed.face_right;
  if (ed.face_right == f) return ed.face_left;
  fail(ErrorCode::internal_error, kStage, "face not incident to edge");
}

bool Polyhedron::face_contains_edge(int f, int e) const {
  return edges[e].face_left == f || edges[e].face_right == f;
}

Vec3 Polyhedron::face_point3d(int f, Vec2 uv) const {
  const FaceFrame& fr = frames[f];
  return fr.origin + uv.x * fr.ex + uv.y * fr.ey;
}

Polyhedron build_polyhedron(std::vector<Vec3> vertices,
                            std::vector<std::vector<int>> faces,
                            Tolerance base_tol) {
  Polyhedron P;
  P.vertices = std::move(vertices);
  P.faces = std::move(faces);

  if (P.vertices.size() < 3 || P.faces.size() < 2)
    fail(ErrorCode::format_error, kStage, "too few vertices or faces");

  Vec3 lo = P.vertices[0], hi = P.vertices[0];
  for (const Vec3& v : P.vertices) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
  }
  P.bbox_diag = (hi - lo).norm();
  if (P.bbox_diag <= 0.0)
    fail(ErrorCode::format_error, kStage, "degenerate bounding box");
  P.tol = base_tol;
  P.tol.absolute_eps = base_tol.absolute_eps * P.bbox_diag;

  int nv = int(P.vertices.size());
  P.vertex_faces.assign(nv, {});

  // face frames, charts, convexity
  P.frames.resize(P.faces.size());
  P.charts.resize(P.faces.size());
  for (size_t f = 0; f < P.faces.size(); ++f) {
    const auto& cyc = P.faces[f];
    if (cyc.size() < 3)
      fail(ErrorCode::format_error, kStage, "face with fewer than 3 vertices");
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size())
      fail(ErrorCode::format_error, kStage, "face repeats a vertex");
    for (int v : cyc) {
      if (v < 0 || v >= nv)
        fail(ErrorCode::format_error, kStage, "face vertex index out of range");
      P.vertex_faces[v].push_back(int(f));
    }

    // Newell normal matches the cycle orientation.
    Vec3 n{0, 0, 0};
    for (size_t i = 0; i < cyc.size(); ++i) {
      Vec3 p = P.vertices[cyc[i]];
      Vec3 q = P.vertices[cyc[(i + 1) % cyc.size()]];
      n = n + p.cross(q);
    }
    if (n.norm() <= P.tol.absolute_eps)
      fail(ErrorCode::nonplanar_face, kStage, "face has degenerate normal");
    Vec3 normal = n.normalized();
    Vec3 origin = P.vertices[cyc[0]];
    for (int v : cyc)
      if (std::abs((P.vertices[v] - origin).dot(normal)) > P.tol.absolute_eps)
        fail(ErrorCode::nonplanar_face, kStage,
             "face " + std::to_string(f) + " is not planar");

    Vec3 ex = (P.vertices[cyc[1]] - origin).normalized();
    Vec3 ey = normal.cross(ex);
    P.frames[f] = {origin, ex, ey, normal};
    auto& chart = P.charts[f];
    chart.resize(cyc.size());
    for (size_t i = 0; i < cyc.size(); ++i) {
      Vec3 d = P.vertices[cyc[i]] - origin;
      chart[i] = {d.dot(ex), d.dot(ey)};
    }

    PlanarPolygon poly{chart};
    if (!polygon_is_simple(poly, P.tol) || polygon_signed_area(poly) <= 0)
      fail(ErrorCode::nonplanar_face, kStage,
           "face " + std::to_string(f) + " is not a simple CCW polygon");
    size_t m = chart.size();
    for (size_t i = 0; i < m; ++i) {
      Vec2 a = chart[(i + m - 1) % m], b = chart[i], c = chart[(i + 1) % m];
      if (signed_area2(a, b, c) < -P.tol.absolute_eps)
        fail(ErrorCode::nonconvex_face, kStage,
             "face " + std::to_string(f) + " is not convex");
    }
  }

  // directed edge pairing
  std::map<std::pair<int, int>, int> directed;  // (u,v) -> face
  for (size_t f = 0; f < P.faces.size(); ++f) {
    const auto& cyc = P.faces[f];
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      auto key = std::make_pair(u, v);
      if (directed.count(key))
        fail(ErrorCode::non_manifold, kStage,
             "directed edge repeated; surface is non-manifold or inconsistently oriented");
      directed[key] = int(f);
    }
  }
  for (const auto& [key, f] : directed) {
    auto [u, v] = key;
    if (!directed.count({v, u}))
      fail(ErrorCode::open_boundary, kStage,
           "edge (" + std::to_string(u) + "," + std::to_string(v) +
               ") borders only one face");
    if (u < v) {
      Polyhedron::Edge e;
      e.a = u;
      e.b = v;
      e.face_left = f;
      e.face_right = directed[{v, u}];
      P.edges.push_back(e);
    }
  }

  int V = nv, E = int(P.edges.size()), F = int(P.faces.size());
  if (V - E + F != 2)
    fail(ErrorCode::euler_violation, kStage,
         "V - E + F = " + std::to_string(V - E + F) + ", expected 2");

  // connectivity of the face adjacency graph
  std::vector<char> seen(P.faces.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (const auto& e : P.edges) {
      if (e.face_left == f && !seen[e.face_right]) {
        seen[e.face_right] = 1;
        stack.push_back(e.face_right);
      } else if (e.face_right == f && !seen[e.face_left]) {
        seen[e.face_left] = 1;
        stack.push_back(e.face_left);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != int(P.faces.size()))
    fail(ErrorCode::non_manifold, kStage, "surface is disconnected");

  for (size_t f = 0; f < P.faces.size(); ++f)
    P.total_area += polygon_signed_area({P.charts[f]});

  // vertex stars double as a vertex-manifoldness check and give cone angles
  P.cone_angles.resize(nv);
  for (int v = 0; v < nv; ++v) {
    PointStar star = build_point_star(P, SurfacePoint::at_vertex(v));
    P.cone_angles[v] = star.total_angle;
  }
  return P;
}

std::vector<int> point_faces(const Polyhedron& P, const SurfacePoint& sp) {
  switch (sp.kind) {
    case SurfacePoint::Kind::vertex: return P.vertex_faces[sp.ref];
    case SurfacePoint::Kind::edge:
      return {P.edges[sp.ref].face_left, P.edges[sp.ref].face_right};
    case SurfacePoint::Kind::face: return {sp.ref};
  }
  return {};
}

bool point_on_face(const Polyhedron& P, const SurfacePoint& sp, int f) {
  auto fs = point_faces(P, sp);
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

Vec2 chart_position(const Polyhedron& P, const SurfacePoint& sp, int f) {
  switch (sp.kind) {
    case SurfacePoint::Kind::vertex: {
      int pos = P.face_vertex_pos(f, sp.ref);
      if (pos < 0)
        fail(ErrorCode::internal_error, kStage, "vertex not on requested face");
      return P.charts[f][pos];
    }
    case SurfacePoint::Kind::edge: {
      const auto& e = P.edges[sp.ref];
      if (e.face_left != f && e.face_right != f)
        fail(ErrorCode::internal_error, kStage, "edge not on requested face");
      int pa = P.face_vertex_pos(f, e.a);
      int pb = P.face_vertex_pos(f, e.b);
      Vec2 ca = P.charts[f][pa], cb = P.charts[f][pb];
      return ca + sp.t * (cb - ca);
    }
    case SurfacePoint::Kind::face:
      if (sp.ref != f)
        fail(ErrorCode::internal_error, kStage, "point not on requested face");
      return sp.uv;
  }
  fail(ErrorCode::internal_error, kStage, "bad anchor kind");
}

Vec3 surface_position3d(const Polyhedron& P, const SurfacePoint& sp) {
  switch (sp.kind) {
    case SurfacePoint::Kind::vertex: return P.vertices[sp.ref];
    case SurfacePoint::Kind::edge: {
      const auto& e = P.edges[sp.ref];
      return P.vertices[e.a] + sp.t * (P.vertices[e.b] - P.vertices[e.a]);
    }
    case SurfacePoint::Kind::face: return P.face_point3d(sp.ref, sp.uv);
  }
  fail(ErrorCode::internal_error, kStage, "bad anchor kind");
}

SurfacePoint canonical_point(const Polyhedron& P, int f, Vec2 uv) {
  const auto& cyc = P.faces[f];
  const auto& chart = P.charts[f];
  double eps = P.tol.absolute_eps;
  size_t m = cyc.size();
  for (size_t i = 0; i < m; ++i)
    if (dist(uv, chart[i]) <= eps) return SurfacePoint::at_vertex(cyc[i]);
  for (size_t i = 0; i < m; ++i) {
    Vec2 a = chart[i], b = chart[(i + 1) % m];
    if (point_segment_distance(uv, a, b) <= eps) {
      int e = P.edge_between(cyc[i], cyc[(i + 1) % m]);
      double t = (uv - a).dot(b - a) / (b - a).dot(b - a);
      t = std::clamp(t, 0.0, 1.0);
      if (P.edges[e].a != cyc[i]) t = 1.0 - t;  // canonical a->b direction
      return SurfacePoint::on_edge(e, t);
    }
  }
  return SurfacePoint::in_face(f, uv);
}

// --- point star ---

namespace {

struct Corner {
  Vec2 apex;
  Vec2 d_out;  // toward the cycle successor
  Vec2 d_in;   // toward the cycle predecessor
  double angle;
};

Corner face_corner(const Polyhedron& P, int f, int v) {
  const auto& cyc = P.faces[f];
  int pos = P.face_vertex_pos(f, v);
  int m = int(cyc.size());
  Vec2 apex = P.charts[f][pos];
  Vec2 nxt = P.charts[f][(pos + 1) % m];
  Vec2 prv = P.charts[f][(pos + m - 1) % m];
  Vec2 d_out = (nxt - apex).normalized();
  Vec2 d_in = (prv - apex).normalized();
  double ang = std::fmod(d_in.angle() - d_out.angle(), kTwoPi);
  if (ang <= 0) ang += kTwoPi;  // interior angle of a CCW polygon corner
  return {apex, d_out, d_in, ang};
}

}  // namespace

PointStar build_point_star(const Polyhedron& P, const SurfacePoint& sp) {
  PointStar star;
  star.at = sp;

  auto add_sector = [&](int face, Vec2 apex, Vec2 d_out, double angle) {
    PointStar::Sector s;
    s.face = face;
    s.start = star.total_angle;
    s.angle = angle;
    s.apex = apex;
    s.chart_offset = s.start - d_out.angle();
    star.sectors.push_back(s);
    star.total_angle += angle;
  };

  switch (sp.kind) {
    case SurfacePoint::Kind::face: {
      add_sector(sp.ref, sp.uv, {1, 0}, kTwoPi);
      break;
    }
    case SurfacePoint::Kind::edge: {
      const auto& e = P.edges[sp.ref];
      // face_left traverses a->b; its half-plane opens CCW from dir(x->b)
      for (int f : {e.face_left, e.face_right}) {
        Vec2 ca = chart_position(P, SurfacePoint::at_vertex(e.a), f);
        Vec2 cb = chart_position(P, SurfacePoint::at_vertex(e.b), f);
        Vec2 apex = ca + sp.t * (cb - ca);
        Vec2 d_out = (f == e.face_left) ? (cb - apex).normalized()
                                        : (ca - apex).normalized();
        add_sector(f, apex, d_out, kPi);
      }
      break;
    }
    case SurfacePoint::Kind::vertex: {
      int v = sp.ref;
      const auto& incident = P.vertex_faces[v];
      if (incident.empty())
        fail(ErrorCode::non_manifold, kStage,
             "vertex " + std::to_string(v) + " has no incident face");
      int start_face = *std::min_element(incident.begin(), incident.end());
      int f = start_face;
      size_t guard = 0;
      do {
        Corner c = face_corner(P, f, v);
        add_sector(f, c.apex, c.d_out, c.angle);
        // next sector counterclockwise: across the edge toward the
        // predecessor vertex of this corner
        const auto& cyc = P.faces[f];
        int pos = P.face_vertex_pos(f, v);
        int prev_v = cyc[(pos + cyc.size() - 1) % cyc.size()];
        int e = P.edge_between(v, prev_v);
        if (e < 0)
          fail(ErrorCode::internal_error, kStage, "missing edge in star walk");
        f = P.other_face(e, f);
        if (++guard > incident.size() + 1)
          fail(ErrorCode::non_manifold, kStage,
               "vertex " + std::to_string(v) + " star does not close");
      } while (f != start_face);
      if (star.sectors.size() != incident.size())
        fail(ErrorCode::non_manifold, kStage,
             "vertex " + std::to_string(v) + " has a pinched star");
      break;
    }
  }
  return star;
}

double PointStar::normalize(double phi) const {
  double p = std::fmod(phi, total_angle);
  if (p < 0) p += total_angle;
  return p;
}

double PointStar::direction_angle(int face, Vec2 chart_dir,
                                  const Tolerance& tol) const {
  for (const Sector& s : sectors) {
    if (s.face != face) continue;
    double raw = chart_dir.angle() + s.chart_offset;
    double local = std::fmod(raw - s.start, kTwoPi);
    if (local < 0) local += kTwoPi;
    if (local <= s.angle + tol.angle_eps)
      return normalize(s.start + std::min(local, s.angle));
    if (kTwoPi - local <= tol.angle_eps) return normalize(s.start);
  }
  fail(ErrorCode::internal_error, kStage,
       "direction does not lie in any sector of the star");
}

const PointStar::Sector& PointStar::sector_at(double phi,
                                              const Tolerance& tol) const {
  double p = normalize(phi);
  for (const Sector& s : sectors)
    if (p >= s.start - tol.angle_eps && p <= s.start + s.angle + tol.angle_eps)
      return s;
  return sectors.back();
}

std::pair<int, Vec2> PointStar::direction_at(double phi,
                                             const Tolerance& tol) const {
  const Sector& s = sector_at(phi, tol);
  double chart_angle = normalize(phi) - s.chart_offset;
  return {s.face, Vec2{std::cos(chart_angle), std::sin(chart_angle)}};
}

std::pair<int, Vec2> PointStar::position_at(double phi, double radius,
                                            const Tolerance& tol) const {
  const Sector& s = sector_at(phi, tol);
  double chart_angle = normalize(phi) - s.chart_offset;
  Vec2 dir{std::cos(chart_angle), std::sin(chart_angle)};
  return {s.face, s.apex + radius * dir};
}

double cone_angle(const Polyhedron& P, int v) { return P.cone_angles[v]; }

Isometry2 edge_transfer(const Polyhedron& P, int e, int from_face,
                        int to_face) {
  const auto& ed = P.edges[e];
  if (!P.face_contains_edge(from_face, e) || !P.face_contains_edge(to_face, e))
    fail(ErrorCode::internal_error, kStage, "edge_transfer across non-shared edge");
  SurfacePoint pa = SurfacePoint::at_vertex(ed.a);
  SurfacePoint pb = SurfacePoint::at_vertex(ed.b);
  Vec2 a0 = chart_position(P, pa, from_face), b0 = chart_position(P, pb, from_face);
  Vec2 a1 = chart_position(P, pa, to_face), b1 = chart_position(P, pb, to_face);
  return Isometry2::map_segment(a0, b0, a1, b1);
}

std::map<int, Isometry2> develop(const Polyhedron& P, int seed_face,
                                 const std::vector<int>& face_walk) {
  std::map<int, Isometry2> placement;
  placement[seed_face] = Isometry2::identity();
  int prev = seed_face;
  for (int f : face_walk) {
    if (f == prev) continue;
    if (placement.count(f)) { prev = f; continue; }
    int shared = -1;
    for (size_t e = 0; e < P.edges.size(); ++e) {
      const auto& ed = P.edges[e];
      if ((ed.face_left == prev && ed.face_right == f) ||
          (ed.face_right == prev && ed.face_left == f)) {
        shared = int(e);
        break;
      }
    }
    if (shared < 0)
      fail(ErrorCode::invalid_anchor, "develop",
           "faces " + std::to_string(prev) + " and " + std::to_string(f) +
               " are not adjacent");
    placement[f] = placement[prev].compose(edge_transfer(P, shared, f, prev));
    prev = f;
  }
  return placement;
}

double wedge_angle(const Polyhedron& P, int v, const SurfaceDirection& dir_in,
                   const SurfaceDirection& dir_out, WedgeSide side) {
  PointStar star = build_point_star(P, SurfacePoint::at_vertex(v));
  double pin = star.direction_angle(dir_in.face, dir_in.dir, P.tol);
  double pout = star.direction_angle(dir_out.face, dir_out.dir, P.tol);
  double ccw = star.normalize(pout - pin);
  return side == WedgeSide::left ? ccw : star.total_angle - ccw;
}

double surface_distance_point_segment(const Polyhedron& P,
                                      const SurfacePoint& p,
                                      const SurfaceSegment& s) {
  if (!point_on_face(P, p, s.face))
    fail(ErrorCode::invalid_anchor, "surface",
         "point and segment share no carrier face");
  Vec2 uv = chart_position(P, p, s.face);
  return point_segment_distance(uv, s.a_uv, s.b_uv);
}

std::vector<SurfaceSegment> SurfacePolyline::segments(
    const Polyhedron& P) const {
  std::vector<SurfaceSegment> out;
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    int f = carrier_faces[i];
    out.push_back({points[i], points[i + 1], f,
                   chart_position(P, points[i], f),
                   chart_position(P, points[i + 1], f)});
  }
  return out;
}

double SurfacePolyline::length(const Polyhedron& P) const {
  double s = 0;
  for (const auto& seg : segments(P)) s += dist(seg.a_uv, seg.b_uv);
  return s;
}

SurfacePolyline make_polyline(const Polyhedron& P,
                              std::vector<SurfacePoint> points,
                              std::vector<int> carrier_faces,
                              const std::string& stage) {
  if (points.size() < 2 || carrier_faces.size() != points.size() - 1)
    fail(ErrorCode::invalid_anchor, stage, "polyline point/carrier mismatch");
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    int f = carrier_faces[i];
    if (f < 0 || f >= int(P.faces.size()))
      fail(ErrorCode::invalid_anchor, stage, "carrier face out of range");
    if (!point_on_face(P, points[i], f) || !point_on_face(P, points[i + 1], f))
      fail(ErrorCode::invalid_anchor, stage,
           "polyline segment endpoint not on its carrier face");
    Vec2 a = chart_position(P, points[i], f);
    Vec2 b = chart_position(P, points[i + 1], f);
    if (dist(a, b) <= P.tol.absolute_eps)
      fail(ErrorCode::invalid_anchor, stage, "zero-length polyline segment");
  }
  SurfacePolyline pl;
  pl.points = std::move(points);
  pl.carrier_faces = std::move(carrier_faces);
  return pl;
}

TraceResult trace_to(const Polyhedron& P, const SurfacePoint& start,
                     int start_face, const Isometry2& start_placement,
                     Vec2 target_plane, const std::string& stage) {
  TraceResult res;
  int f = start_face;
  Isometry2 M = start_placement;
  SurfacePoint cur_sp = start;
  Vec2 cur = chart_position(P, start, f);
  double eps = P.tol.absolute_eps;

  size_t guard = 0, max_steps = 8 * P.faces.size() + 16;
  while (true) {
    if (++guard > max_steps)
      fail(ErrorCode::clearance_failure, stage,
           "trace did not terminate; configuration too tight");
    Vec2 target = M.inverse()(target_plane);
    PlanarPolygon poly = P.face_polygon(f);
    bool inside = point_in_polygon(target, poly, P.tol) ||
                  point_on_polygon_boundary(target, poly, P.tol);
    if (inside && dist(cur, target) <= eps) {
      // zero-length tail: end at current point
      res.end = cur_sp;
      res.end_face = f;
      res.end_uv = cur;
      res.end_placement = M;
      return res;
    }
    if (inside) {
      SurfacePoint end_sp = canonical_point(P, f, target);
      res.segments.push_back({cur_sp, end_sp, f, cur, target});
      res.end = end_sp;
      res.end_face = f;
      res.end_uv = target;
      res.end_placement = M;
      return res;
    }

    // exit through a boundary edge
    const auto& cyc = P.faces[f];
    size_t m = cyc.size();
    Vec2 r = target - cur;
    double best_t = std::numeric_limits<double>::infinity();
    int best_i = -1;
    double best_s = 0;
    for (size_t i = 0; i < m; ++i) {
      Vec2 c = P.charts[f][i], d = P.charts[f][(i + 1) % m];
      Vec2 e = d - c;
      double denom = r.cross(e);
      if (std::abs(denom) < 1e-14 * std::max(1.0, r.norm() * e.norm())) continue;
      double t = (c - cur).cross(e) / denom;
      double s = (c - cur).cross(r) / denom;
      double t_eps = eps / std::max(r.norm(), eps);
      double s_eps = eps / std::max(e.norm(), eps);
      if (t <= t_eps || t > 1.0 + t_eps) continue;
      if (s < -s_eps || s > 1.0 + s_eps) continue;
      if (t < best_t) {
        best_t = t;
        best_i = int(i);
        best_s = std::clamp(s, 0.0, 1.0);
      }
    }
    if (best_i < 0)
      fail(ErrorCode::clearance_failure, stage,
           "trace lost its target outside face " + std::to_string(f));

    int va = cyc[best_i], vb = cyc[(best_i + 1) % m];
    int e = P.edge_between(va, vb);
    Vec2 exit_uv = cur + std::min(best_t, 1.0) * r;
    SurfacePoint exit_sp = canonical_point(P, f, exit_uv);
    if (exit_sp.kind == SurfacePoint::Kind::vertex)
      fail(ErrorCode::clearance_failure, stage,
           "trace passes through vertex " + std::to_string(exit_sp.ref));
    if (exit_sp.kind != SurfacePoint::Kind::edge || exit_sp.ref != e) {
      // numeric snap landed elsewhere; anchor explicitly to the crossed edge
      double t = best_s;
      if (P.edges[e].a != va) t = 1.0 - t;
      exit_sp = SurfacePoint::on_edge(e, t);
      exit_uv = chart_position(P, exit_sp, f);
    }
    if (dist(cur, exit_uv) > eps)
      res.segments.push_back({cur_sp, exit_sp, f, cur, exit_uv});

    int g = P.other_face(e, f);
    M = M.compose(edge_transfer(P, e, g, f));
    cur_sp = exit_sp;
    cur = chart_position(P, exit_sp, g);
    f = g;
  }
}

}  // namespace hingeforge
