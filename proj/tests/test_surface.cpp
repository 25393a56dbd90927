#include <cmath>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "hingeforge/surface.hpp"

using namespace hingeforge;
namespace fx = hingeforge::fixtures;

namespace {

// Independent development oracle: unfold a face walk by composing 3D
// rotations about the shared edges, then compare pairwise distances of the
// developed vertex images.
struct Rot3 {
  // Rodrigues rotation about a unit axis through a point.
  Vec3 point, axis;
  double angle;
  Vec3 operator()(Vec3 p) const {
    Vec3 d = p - point;
    double c = std::cos(angle), s = std::sin(angle);
    Vec3 r = d * c + axis.cross(d) * s + axis * (axis.dot(d) * (1 - c));
    return point + r;
  }
};

std::map<int, std::vector<Vec3>> oracle_unfold(const Polyhedron& P,
                                               int seed,
                                               const std::vector<int>& walk) {
  std::map<int, std::vector<Vec3>> placed;
  auto face_pts = [&](int f) {
    std::vector<Vec3> pts;
    for (int v : P.faces[f]) pts.push_back(P.vertices[v]);
    return pts;
  };
  placed[seed] = face_pts(seed);
  Vec3 plane_normal = P.frames[seed].normal;
  std::vector<Rot3> chain;  // accumulated motions applied to later faces
  int prev = seed;
  for (int f : walk) {
    if (f == prev || placed.count(f)) { prev = f; continue; }
    int shared = -1;
    for (size_t e = 0; e < P.edges.size(); ++e) {
      const auto& ed = P.edges[e];
      if ((ed.face_left == prev && ed.face_right == f) ||
          (ed.face_right == prev && ed.face_left == f))
        shared = int(e);
    }
    REQUIRE(shared >= 0);
    // current 3D position of the shared edge after accumulated motions
    Vec3 a = P.vertices[P.edges[shared].a];
    Vec3 b = P.vertices[P.edges[shared].b];
    for (const auto& r : chain) { a = r(a); b = r(b); }
    // rotate face f (moved by the chain so far) about the edge until its
    // normal matches the seed plane normal
    std::vector<Vec3> pts = face_pts(f);
    for (const auto& r : chain)
      for (auto& p : pts) p = r(p);
    Vec3 n = (pts[1] - pts[0]).cross(pts[2] - pts[1]).normalized();
    Vec3 axis = (b - a).normalized();
    // angle that brings n onto plane_normal about axis
    Vec3 n_perp = n - axis * axis.dot(n);
    Vec3 t_perp = plane_normal - axis * axis.dot(plane_normal);
    double ang = std::atan2(axis.dot(n_perp.cross(t_perp)), n_perp.dot(t_perp));
    Rot3 rot{a, axis, ang};
    for (auto& p : pts) p = rot(p);
    chain.push_back(rot);
    placed[f] = pts;
    prev = f;
  }
  return placed;
}

void check_development_matches_oracle(const Polyhedron& P, int seed,
                                      const std::vector<int>& walk) {
  auto dev = develop(P, seed, walk);
  auto oracle = oracle_unfold(P, seed, walk);
  std::vector<Vec2> dev_pts;
  std::vector<Vec3> ora_pts;
  for (const auto& [f, iso] : dev) {
    for (size_t i = 0; i < P.faces[f].size(); ++i) {
      dev_pts.push_back(iso(P.charts[f][i]));
      ora_pts.push_back(oracle.at(f)[i]);
    }
  }
  for (size_t i = 0; i < dev_pts.size(); ++i)
    for (size_t j = i + 1; j < dev_pts.size(); ++j)
      CHECK(dist(dev_pts[i], dev_pts[j]) ==
            doctest::Approx((ora_pts[i] - ora_pts[j]).norm()).epsilon(1e-9));
}

}  // namespace

TEST_CASE("cube loads with expected counts and cone angles") {
  Polyhedron P = fx::cube_mesh();
  CHECK(P.vertices.size() == 8);
  CHECK(P.edges.size() == 12);
  CHECK(P.faces.size() == 6);
  for (int v = 0; v < 8; ++v)
    CHECK(cone_angle(P, v) == doctest::Approx(3 * kPi / 2));
  CHECK(P.total_area == doctest::Approx(6.0));
}

TEST_CASE("tetrahedron counts and cone angles") {
  Polyhedron P = fx::tetrahedron_mesh();
  CHECK(P.vertices.size() == 4);
  CHECK(P.edges.size() == 6);
  CHECK(P.faces.size() == 4);
  for (int v = 0; v < 4; ++v)
    CHECK(cone_angle(P, v) == doctest::Approx(kPi));
}

TEST_CASE("doubly covered triangle is a valid flat polyhedron") {
  Polyhedron P = fx::doubly_covered_triangle_mesh();
  CHECK(P.vertices.size() == 3);
  CHECK(P.edges.size() == 3);
  CHECK(P.faces.size() == 2);
  for (int v = 0; v < 3; ++v)
    CHECK(cone_angle(P, v) == doctest::Approx(2 * kPi / 3));
}

TEST_CASE("gauss-bonnet holds on every fixture mesh") {
  for (const Polyhedron& P :
       {fx::cube_mesh(), fx::tetrahedron_mesh(), fx::octahedron_mesh(),
        fx::doubly_covered_triangle_mesh(), fx::doubly_covered_square_mesh()}) {
    double defect = 0;
    for (size_t v = 0; v < P.vertices.size(); ++v)
      defect += kTwoPi - P.cone_angles[v];
    CHECK(defect == doctest::Approx(4 * kPi).epsilon(1e-9));
    for (size_t v = 0; v < P.vertices.size(); ++v)
      CHECK(P.cone_angles[v] <= kTwoPi + 1e-12);
  }
}

TEST_CASE("invalid meshes are rejected with distinct codes") {
  // open boundary: single square face pair missing
  std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  CHECK_THROWS_WITH_AS(build_polyhedron(v, {{0, 1, 2, 3}, {0, 1, 2, 3}}),
                       doctest::Contains("non-manifold"), PipelineError);
  try {
    build_polyhedron(v, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}});
  } catch (const PipelineError& e) {
    CHECK(e.code() == ErrorCode::non_manifold);
  }
  // nonplanar face
  std::vector<Vec3> w = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0.4}, {0, 1, 0}};
  bool threw = false;
  try {
    build_polyhedron(w, {{0, 1, 2, 3}, {0, 3, 2, 1}});
  } catch (const PipelineError& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::nonplanar_face);
  }
  CHECK(threw);
}

TEST_CASE("develop: cube strip of four side faces") {
  Polyhedron P = fx::cube_mesh();
  // front(2), right(3), back(4), left(5)
  auto dev = develop(P, 2, {3, 4, 5});
  CHECK(dev.size() == 4);
  // all four unit squares, consecutive ones sharing a unit edge
  std::vector<int> walk = {2, 3, 4, 5};
  for (size_t i = 0; i + 1 < walk.size(); ++i) {
    int f = walk[i], g = walk[i + 1];
    // the shared vertical edge maps to the same planar segment
    for (const auto& e : P.edges) {
      if ((e.face_left == f && e.face_right == g) ||
          (e.face_right == f && e.face_left == g)) {
        Vec2 af = dev[f](chart_position(P, SurfacePoint::at_vertex(e.a), f));
        Vec2 ag = dev[g](chart_position(P, SurfacePoint::at_vertex(e.a), g));
        Vec2 bf = dev[f](chart_position(P, SurfacePoint::at_vertex(e.b), f));
        Vec2 bg = dev[g](chart_position(P, SurfacePoint::at_vertex(e.b), g));
        CHECK(dist(af, ag) < 1e-12);
        CHECK(dist(bf, bg) < 1e-12);
      }
    }
  }
  check_development_matches_oracle(P, 2, {3, 4, 5});
}

TEST_CASE("develop: identity on a single face") {
  Polyhedron P = fx::cube_mesh();
  auto dev = develop(P, 1, {});
  CHECK(dev.size() == 1);
  Vec2 p = dev[1]({0.25, 0.5});
  CHECK(dist(p, {0.25, 0.5}) == 0.0);
}

TEST_CASE("develop matches 3D rotation oracle on the tetrahedron") {
  Polyhedron P = fx::tetrahedron_mesh();
  check_development_matches_oracle(P, 0, {1, 2, 3});
  check_development_matches_oracle(P, 1, {0, 2, 3});
}

TEST_CASE("develop rejects non-adjacent consecutive faces") {
  Polyhedron P = fx::cube_mesh();
  CHECK_THROWS_AS(develop(P, 0, {1}), PipelineError);  // bottom, top
}

TEST_CASE("wedge angles at a cube corner") {
  Polyhedron P = fx::cube_mesh();
  // at vertex 0, directions along edges 0->1 and 0->3 within the bottom face
  int bottom = 0;
  Vec2 d01 = (chart_position(P, SurfacePoint::at_vertex(1), bottom) -
              chart_position(P, SurfacePoint::at_vertex(0), bottom))
                 .normalized();
  Vec2 d03 = (chart_position(P, SurfacePoint::at_vertex(3), bottom) -
              chart_position(P, SurfacePoint::at_vertex(0), bottom))
                 .normalized();
  SurfaceDirection in{bottom, d01}, out{bottom, d03};
  double near = wedge_angle(P, 0, in, out, WedgeSide::left);
  double far = wedge_angle(P, 0, in, out, WedgeSide::right);
  CHECK(near + far == doctest::Approx(3 * kPi / 2));
  CHECK(std::min(near, far) == doctest::Approx(kPi / 2));
  CHECK(std::max(near, far) == doctest::Approx(kPi));
}

TEST_CASE("wedge angle matches full star development at a tetra vertex") {
  Polyhedron P = fx::tetrahedron_mesh();
  PointStar star = build_point_star(P, SurfacePoint::at_vertex(0));
  CHECK(star.total_angle == doctest::Approx(kPi));
  // bisectors of two incident faces
  auto bisector = [&](int f) {
    const auto& cyc = P.faces[f];
    int pos = P.face_vertex_pos(f, 0);
    Vec2 apex = P.charts[f][pos];
    Vec2 a = P.charts[f][(pos + 1) % cyc.size()] - apex;
    Vec2 b = P.charts[f][(pos + cyc.size() - 1) % cyc.size()] - apex;
    return SurfaceDirection{f, (a.normalized() + b.normalized()).normalized()};
  };
  auto d1 = bisector(P.vertex_faces[0][0]);
  auto d2 = bisector(P.vertex_faces[0][1]);
  double left = wedge_angle(P, 0, d1, d2, WedgeSide::left);
  double right = wedge_angle(P, 0, d1, d2, WedgeSide::right);
  CHECK(left + right == doctest::Approx(star.total_angle));
  // oracle: star angles measured by explicit development
  double phi1 = star.direction_angle(d1.face, d1.dir, P.tol);
  double phi2 = star.direction_angle(d2.face, d2.dir, P.tol);
  double sweep = std::fmod(phi2 - phi1 + star.total_angle, star.total_angle);
  CHECK(left == doctest::Approx(sweep));
}

TEST_CASE("surface_distance_point_segment in one chart") {
  Polyhedron P = fx::cube_mesh();
  SurfaceSegment s{SurfacePoint::in_face(1, {1, -1}), SurfacePoint::in_face(1, {1, 1}),
                   1, {1, -1}, {1, 1}};
  CHECK(surface_distance_point_segment(P, SurfacePoint::in_face(1, {0, 0}), s) ==
        doctest::Approx(1.0));
  SurfaceSegment s2{SurfacePoint::in_face(1, {-1, 0}), SurfacePoint::in_face(1, {1, 0}),
                    1, {-1, 0}, {1, 0}};
  CHECK(surface_distance_point_segment(P, SurfacePoint::in_face(1, {0, 2}), s2) ==
        doctest::Approx(2.0));
  CHECK(surface_distance_point_segment(P, SurfacePoint::in_face(1, {0, 0}), s2) ==
        doctest::Approx(0.0));
}

TEST_CASE("point star at edge and face interior points") {
  Polyhedron P = fx::cube_mesh();
  PointStar fs = build_point_star(P, SurfacePoint::in_face(0, {0.3, 0.4}));
  CHECK(fs.total_angle == doctest::Approx(kTwoPi));
  CHECK(fs.sectors.size() == 1);
  PointStar es = build_point_star(P, SurfacePoint::on_edge(0, 0.5));
  CHECK(es.total_angle == doctest::Approx(kTwoPi));
  CHECK(es.sectors.size() == 2);
}

TEST_CASE("trace crosses a cube edge into the adjacent face") {
  Polyhedron P = fx::cube_mesh();
  // front face (2) chart: square with corners v0,v1,v5,v4; start inside and
  // aim beyond the v1->v5 edge into the right face
  SurfacePoint start = SurfacePoint::in_face(2, {0.5, 0.5});
  TraceResult tr = trace_to(P, start, 2, Isometry2::identity(), {1.5, 0.5}, "test");
  CHECK(tr.segments.size() == 2);
  CHECK(tr.segments[0].face == 2);
  CHECK(tr.segments[1].face == 3);
  CHECK(tr.end.kind == SurfacePoint::Kind::face);
  CHECK(tr.end.ref == 3);
  // length preserved across the crease
  double len = 0;
  for (const auto& s : tr.segments) len += dist(s.a_uv, s.b_uv);
  CHECK(len == doctest::Approx(1.0));
}

TEST_CASE("trace through a vertex is a clearance failure") {
  Polyhedron P = fx::cube_mesh();
  SurfacePoint start = SurfacePoint::in_face(2, {0.5, 0.5});
  bool threw = false;
  try {
    trace_to(P, start, 2, Isometry2::identity(), {1.5, 1.5}, "test");
  } catch (const PipelineError& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::clearance_failure);
  }
  CHECK(threw);
}

TEST_CASE("canonical points snap to edges and vertices") {
  Polyhedron P = fx::cube_mesh();
  SurfacePoint sp = canonical_point(P, 0, {0, 0});
  CHECK(sp.kind == SurfacePoint::Kind::vertex);
  SurfacePoint se = canonical_point(P, 2, {0.5, 0});
  CHECK(se.kind == SurfacePoint::Kind::edge);
  SurfacePoint sf = canonical_point(P, 2, {0.5, 0.25});
  CHECK(sf.kind == SurfacePoint::Kind::face);
}
