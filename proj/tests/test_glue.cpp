#include <cmath>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "hingeforge/glue.hpp"

using namespace hingeforge;
namespace fx = hingeforge::fixtures;

namespace {
const Tolerance tol{};
}

TEST_CASE("triangle dissection glues back to the original cone angles") {
  Polyhedron P = fx::doubly_covered_triangle_mesh();
  fx::TreePair pr = fx::doubly_covered_triangle_trees(P);
  BuiltDissection bd = build_dissection(P, pr.a, pr.b);
  GluedMetric m = glue_metric(bd.d, P.tol);
  int cone_classes = 0;
  for (const auto& cl : m.classes)
    if (std::abs(cl.total_angle - kTwoPi) > 1e-9) ++cone_classes;
  CHECK(cone_classes == 3);
  for (const auto& cl : m.classes) {
    if (cl.hinge < 0) continue;
    int v = bd.d.hinges[cl.hinge].vertex;
    CHECK(cl.total_angle == doctest::Approx(P.cone_angles[v]).epsilon(1e-12));
    CHECK(cl.total_angle ==
          doctest::Approx(cl.hinge_alpha + kTwoPi - cl.hinge_alpha_prime)
              .epsilon(1e-9));
  }
}

TEST_CASE("single square glued to itself is a doubly covered square") {
  HingedDissection d;
  d.pieces = {PlanarPolygon{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}};
  d.placement_a = {Isometry2::identity()};
  d.placement_b = {Isometry2::identity()};
  GluedMetric m = glue_metric(d, tol);
  CHECK(m.doubled);
  CHECK(m.classes.size() == 4);
  for (const auto& cl : m.classes)
    CHECK(cl.total_angle == doctest::Approx(kPi));  // two right angles
  CHECK(std::abs(gauss_bonnet_residual(m)) < 1e-12);
  CHECK(check_alexandrov(m, tol).convex);
}

TEST_CASE("perturbed piece geometry fails to glue") {
  Polyhedron P = fx::doubly_covered_square_mesh();
  fx::TreePair pr = fx::doubly_covered_square_trees(P);
  BuiltDissection bd = build_dissection(P, pr.a, pr.b);
  HingedDissection broken = bd.d;
  broken.pieces[0].vertices[1].x += 1e-3;
  bool threw = false;
  try {
    glue_metric(broken, P.tol);
  } catch (const PipelineError& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::glue_mismatch);
  }
  CHECK(threw);
}

TEST_CASE("doubly covered L-shape is a saddle metric") {
  // one-piece identity dissection of a hexagonal L: the reflex corner glues
  // to total angle 3*pi
  HingedDissection d;
  d.pieces = {PlanarPolygon{
      {{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}}};
  d.placement_a = {Isometry2::identity()};
  d.placement_b = {Isometry2::identity()};
  GluedMetric m = glue_metric(d, tol);
  CHECK(m.doubled);
  CHECK(m.classes.size() == 6);
  AlexandrovReport ar = check_alexandrov(m, tol);
  CHECK_FALSE(ar.convex);
  CHECK(ar.witnesses.size() == 1);
  CHECK(m.classes[ar.witnesses[0]].total_angle == doctest::Approx(3 * kPi));
  CHECK(std::abs(gauss_bonnet_residual(m)) < 1e-12);
}

TEST_CASE("gauss-bonnet residual detects a corrupted metric") {
  Polyhedron P = fx::cube_mesh();
  fx::TreePair pr = fx::cube_trees(P);
  BuiltDissection bd = build_dissection(P, pr.a, pr.b);
  GluedMetric m = glue_metric(bd.d, P.tol);
  CHECK(std::abs(gauss_bonnet_residual(m)) < 1e-9);
  // drop one cone class
  GluedMetric corrupted = m;
  for (size_t k = 0; k < corrupted.classes.size(); ++k) {
    if (corrupted.classes[k].hinge >= 0) {
      double defect = kTwoPi - corrupted.classes[k].total_angle;
      corrupted.classes.erase(corrupted.classes.begin() + k);
      CHECK(gauss_bonnet_residual(corrupted) ==
            doctest::Approx(-defect).epsilon(1e-12));
      break;
    }
  }
}

TEST_CASE("metric is invariant under rigid motions of a configuration") {
  Polyhedron P = fx::tetrahedron_mesh();
  fx::TreePair pr = fx::tetrahedron_trees(P);
  BuiltDissection bd = build_dissection(P, pr.a, pr.b);
  GluedMetric m1 = glue_metric(bd.d, P.tol);
  HingedDissection moved = bd.d;
  Isometry2 rigid{Rot2::from_angle(0.7), Vec2{3.5, -1.25}};
  for (auto& pl : moved.placement_a) pl = rigid.compose(pl);
  GluedMetric m2 = glue_metric(moved, P.tol);
  REQUIRE(m1.classes.size() == m2.classes.size());
  std::multiset<double> a1, a2;
  for (const auto& cl : m1.classes) a1.insert(std::round(cl.total_angle * 1e9));
  for (const auto& cl : m2.classes) a2.insert(std::round(cl.total_angle * 1e9));
  CHECK(a1 == a2);
}

TEST_CASE("roundtrip reconstructs every fixture's cone angles") {
  auto check = [](const Polyhedron& P, const fx::TreePair& pr, size_t nvert) {
    RoundtripReport r = roundtrip_check(P, pr.a, pr.b);
    CHECK(r.ok);
    CHECK(r.vertex_classes == nvert);
    CHECK(r.max_cone_angle_error < 1e-9);
    CHECK(std::abs(r.gauss_bonnet) < 1e-6);
    CHECK(r.alexandrov_convex);
  };
  {
    Polyhedron P = fx::cube_mesh();
    check(P, fx::cube_trees(P), 8);
  }
  {
    Polyhedron P = fx::tetrahedron_mesh();
    check(P, fx::tetrahedron_trees(P), 4);
  }
  {
    Polyhedron P = fx::octahedron_mesh();
    check(P, fx::octahedron_trees(P), 6);
  }
  {
    Polyhedron P = fx::doubly_covered_triangle_mesh();
    check(P, fx::doubly_covered_triangle_trees(P), 3);
  }
  {
    Polyhedron P = fx::doubly_covered_square_mesh();
    check(P, fx::doubly_covered_square_trees(P), 4);
  }
}
