#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hingeforge::fixtures {

Polyhedron cube_mesh() {
  std::vector<Vec3> v = {
      {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
      {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
  };
  std::vector<std::vector<int>> f = {
      {0, 3, 2, 1},  // bottom
      {4, 5, 6, 7},  // top
      {0, 1, 5, 4},  // front  y=0
      {1, 2, 6, 5},  // right  x=1
      {2, 3, 7, 6},  // back   y=1
      {3, 0, 4, 7},  // left   x=0
  };
  return build_polyhedron(v, f);
}

Polyhedron tetrahedron_mesh() {
  double s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  std::vector<Vec3> v = {
      {0, 0, 0},
      {1, 0, 0},
      {0.5, s3 / 2, 0},
      {0.5, s3 / 6, s6 / 3},
  };
  std::vector<std::vector<int>> f = {
      {0, 2, 1},
      {0, 1, 3},
      {1, 2, 3},
      {2, 0, 3},
  };
  return build_polyhedron(v, f);
}

Polyhedron octahedron_mesh() {
  std::vector<Vec3> v = {
      {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
  };
  std::vector<std::vector<int>> f = {
      {0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
      {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5},
  };
  return build_polyhedron(v, f);
}

Polyhedron doubly_covered_polygon_mesh(const std::vector<Vec2>& poly) {
  std::vector<Vec3> v;
  for (Vec2 p : poly) v.push_back({p.x, p.y, 0});
  std::vector<int> front(poly.size()), back(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) front[i] = int(i);
  back[0] = 0;
  for (size_t i = 1; i < poly.size(); ++i) back[i] = int(poly.size() - i);
  return build_polyhedron(v, {front, back});
}

Polyhedron doubly_covered_triangle_mesh() {
  return doubly_covered_polygon_mesh({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}});
}

Polyhedron doubly_covered_square_mesh() {
  return doubly_covered_polygon_mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

SurfacePoint face_point(const Polyhedron& P, int f, Vec3 pos) {
  const auto& fr = P.frames[f];
  Vec3 d = pos - fr.origin;
  return SurfacePoint::in_face(f, {d.dot(fr.ex), d.dot(fr.ey)});
}

SurfaceTree::TreeEdge mesh_tree_edge(const Polyhedron& P, int u, int v) {
  int e = P.edge_between(u, v);
  if (e < 0) fail(ErrorCode::invalid_tree, "fixtures", "no such mesh edge");
  SurfaceTree::TreeEdge te;
  te.from = u;
  te.to = v;
  te.polyline = make_polyline(
      P, {SurfacePoint::at_vertex(u), SurfacePoint::at_vertex(v)},
      {P.edges[e].face_left}, "fixtures");
  return te;
}

SurfaceTree::TreeEdge chord(const Polyhedron& P, int f, int u, int v) {
  SurfaceTree::TreeEdge te;
  te.from = u;
  te.to = v;
  te.polyline = make_polyline(
      P, {SurfacePoint::at_vertex(u), SurfacePoint::at_vertex(v)}, {f},
      "fixtures");
  return te;
}

SurfaceTree::TreeEdge bent2(const Polyhedron& P, int f, int u, int v, Vec3 mid) {
  SurfaceTree::TreeEdge te;
  te.from = u;
  te.to = v;
  te.polyline = make_polyline(P,
                              {SurfacePoint::at_vertex(u), face_point(P, f, mid),
                               SurfacePoint::at_vertex(v)},
                              {f, f}, "fixtures");
  return te;
}

SurfaceTree make_tree(const Polyhedron& P,
                      std::vector<SurfaceTree::TreeEdge> edges,
                      const std::vector<int>* node_subset) {
  SurfaceTree T;
  if (node_subset) {
    for (int v : *node_subset) T.nodes.push_back({v, SurfacePoint::at_vertex(v)});
  } else {
    for (int v = 0; v < int(P.vertices.size()); ++v)
      T.nodes.push_back({v, SurfacePoint::at_vertex(v)});
  }
  T.edges = std::move(edges);
  return T;
}

SurfaceTree::TreeEdge bent_path(const Polyhedron& P, int f, int u, int v,
                                std::vector<Vec3> mids) {
  std::vector<SurfacePoint> pts{SurfacePoint::at_vertex(u)};
  for (const Vec3& m : mids) pts.push_back(face_point(P, f, m));
  pts.push_back(SurfacePoint::at_vertex(v));
  std::vector<int> carriers(pts.size() - 1, f);
  SurfaceTree::TreeEdge te;
  te.from = u;
  te.to = v;
  te.polyline = make_polyline(P, std::move(pts), std::move(carriers), "fixtures");
  return te;
}

TreePair cube_trees(const Polyhedron& P) {
  // faces: 0 bottom, 1 top, 2 front, 3 right, 4 back, 5 left
  SurfaceTree a = make_tree(
      P, {mesh_tree_edge(P, 0, 4), mesh_tree_edge(P, 1, 5),
          mesh_tree_edge(P, 2, 6), mesh_tree_edge(P, 3, 7),
          mesh_tree_edge(P, 5, 6), mesh_tree_edge(P, 6, 7),
          mesh_tree_edge(P, 7, 4)});
  // tree b: bottom path with edge 2-3 re-routed through the bottom face to
  // pass near edge 0-1 (this pinch keeps the offset clearances small),
  // plus face chords and the free top mesh edge
  SurfaceTree b = make_tree(
      P, {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 1, 2),
          bent2(P, 0, 2, 3, {0.5, 0.18, 0.0}), mesh_tree_edge(P, 4, 5),
          chord(P, 4, 2, 7), chord(P, 3, 1, 6), chord(P, 2, 0, 5)});
  return {a, b};
}

TreePair tetrahedron_trees(const Polyhedron& P) {
  SurfaceTree a = make_tree(P, {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 0, 2),
                                mesh_tree_edge(P, 0, 3)});
  // tree b reaches vertex 0 through face (2,0,3) with a corner tuck near
  // vertex 2; the tuck pins the clearance radius far below face size
  auto in203 = [&](double x, double y) {
    Vec3 ex = (P.vertices[0] - P.vertices[2]).normalized();
    Vec3 n = ex.cross(P.vertices[3] - P.vertices[2]).normalized();
    (void)n;
    Vec3 ey = (P.vertices[3] - P.vertices[2] -
               ((P.vertices[3] - P.vertices[2]).dot(ex)) * ex)
                  .normalized();
    return P.vertices[2] + x * ex + y * ey;
  };
  SurfaceTree b = make_tree(
      P, {mesh_tree_edge(P, 1, 2), mesh_tree_edge(P, 2, 3),
          bent_path(P, 3, 3, 0,
                    {in203(0.5, 0.416), in203(0.12, 0.03), in203(0.70, 0.16)})});
  return {a, b};
}

TreePair octahedron_trees(const Polyhedron& P) {
  SurfaceTree a = make_tree(P, {mesh_tree_edge(P, 2, 4), mesh_tree_edge(P, 1, 4),
                                mesh_tree_edge(P, 3, 4), mesh_tree_edge(P, 0, 2),
                                mesh_tree_edge(P, 0, 5)});
  // both bent edges approach vertex 1 through faces whose other creases are
  // unused; the second tucks in near vertex 5
  Vec3 m = 0.28 * P.vertices[3] + 0.42 * P.vertices[1] + 0.30 * P.vertices[5];
  Vec3 m2 = 0.06 * P.vertices[1] + 0.06 * P.vertices[2] + 0.88 * P.vertices[5];
  SurfaceTree b = make_tree(
      P, {mesh_tree_edge(P, 0, 4), mesh_tree_edge(P, 0, 3),
          mesh_tree_edge(P, 3, 5), bent2(P, 6, 5, 1, m),
          bent2(P, 5, 2, 1, m2)});
  return {a, b};
}

TreePair doubly_covered_triangle_trees(const Polyhedron& P) {
  // all edges drawn through face interiors, so every crease stays free;
  // tree a runs along the front, tree b along the back with a corner tuck
  // near vertex 0 pinching tree b's own first edge
  SurfaceTree a = make_tree(
      P, {bent2(P, 0, 0, 1, {0.4674, 0.228, 0}),
          bent2(P, 0, 0, 2, {0.5, 0.64, 0})});
  SurfaceTree b = make_tree(
      P, {bent2(P, 1, 0, 2, {0.5016, 0.3645, 0}),
          bent_path(P, 1, 2, 1, {{0.70, 0.42, 0}, {0.1484, 0.0599, 0}})});
  return {a, b};
}

TreePair doubly_covered_square_trees(const Polyhedron& P) {
  // front diagonal 0-2 with bent paths to 1 and 3; tree b is the same
  // drawing rotated a quarter turn, on the back. the paths to the far
  // corners tuck in near the diagonals to pin the clearances.
  SurfaceTree a = make_tree(
      P, {chord(P, 0, 0, 2),
          bent_path(P, 0, 2, 1, {{0.75, 0.35, 0}, {0.15, 0.05, 0}}),
          bent2(P, 0, 0, 3, {0.28, 0.75, 0})});
  SurfaceTree b = make_tree(
      P, {chord(P, 1, 1, 3),
          bent_path(P, 1, 1, 0, {{0.35, 0.25, 0}, {0.05, 0.85, 0}}),
          bent2(P, 1, 3, 2, {0.75, 0.72, 0})});
  return {a, b};
}

std::optional<RandomFixture> random_comb_fixture(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int n = 3 + int(rng() % 6);

  std::vector<double> angles(n);
  for (int tries = 0; tries < 32; ++tries) {
    for (int i = 0; i < n; ++i) angles[i] = kTwoPi * unit(rng);
    std::sort(angles.begin(), angles.end());
    double min_gap = angles[0] + kTwoPi - angles[n - 1];
    for (int i = 1; i < n; ++i) min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
    if (min_gap > 0.45) break;
    if (tries == 31) return std::nullopt;
  }
  std::vector<Vec2> poly(n);
  for (int i = 0; i < n; ++i) {
    double r = 0.92 + 0.16 * unit(rng);
    poly[i] = {r * std::cos(angles[i]), r * std::sin(angles[i])};
  }
  // convexity with a little slack
  for (int i = 0; i < n; ++i) {
    Vec2 a = poly[(i + n - 1) % n], b = poly[i], c2 = poly[(i + 1) % n];
    if (signed_area2(a, b, c2) < 0.05) return std::nullopt;
  }

  RandomFixture out{doubly_covered_polygon_mesh(poly), {}};
  const Polyhedron& P = out.P;
  Vec2 centroid{0, 0};
  for (Vec2 v : poly) centroid = centroid + v * (1.0 / n);

  std::vector<SurfaceTree::TreeEdge> ea, eb;
  for (int i = 0; i + 1 < n; ++i) ea.push_back(mesh_tree_edge(P, i, i + 1));
  for (int i = 0; i + 1 < n; ++i) {
    Vec2 mid = (poly[i] + poly[i + 1]) * 0.5;
    double len = dist(poly[i], poly[i + 1]);
    double delta = (0.05 + 0.08 * unit(rng)) * len;
    Vec2 m2 = mid + delta * (centroid - mid).normalized();
    eb.push_back(bent2(P, 1, i, i + 1, {m2.x, m2.y, 0.0}));
  }
  out.trees = {make_tree(P, std::move(ea)), make_tree(P, std::move(eb))};
  if (!validate_tree(P, out.trees.a).ok || !validate_tree(P, out.trees.b).ok)
    return std::nullopt;
  if (!check_noncrossing(P, out.trees.a, out.trees.b).ok) return std::nullopt;
  return out;
}

Polyhedron dented_cube_mesh() {
  std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                         {0, 0, 1}, {1, 0, 1}, {0.5, 0.5, 0.5}, {0, 1, 1}};
  std::vector<std::vector<int>> f = {
      {0, 3, 2, 1}, {0, 1, 5, 4}, {3, 0, 4, 7}, {4, 5, 6}, {4, 6, 7},
      {1, 2, 6},    {1, 6, 5},    {2, 3, 7},    {2, 7, 6}};
  return build_polyhedron(v, f);
}

SurfaceTree dented_cube_overlap_tree(const Polyhedron& dented) {
  const Polyhedron& P = dented;
  return make_tree(P, {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 1, 2),
                       mesh_tree_edge(P, 2, 3), mesh_tree_edge(P, 0, 4),
                       mesh_tree_edge(P, 4, 5), mesh_tree_edge(P, 4, 7),
                       mesh_tree_edge(P, 2, 6)});
}

TreePair crossing_trees(const Polyhedron& dc_square) {
  const Polyhedron& P = dc_square;
  SurfaceTree a = doubly_covered_square_trees(P).a;
  // front diagonal 1-3 properly crosses a's front diagonal 0-2
  SurfaceTree b = make_tree(P, {chord(P, 0, 1, 3),
                                bent2(P, 1, 3, 0, {0.3, 0.25, 0}),
                                bent2(P, 1, 1, 2, {0.75, 0.7, 0})});
  return {a, b};
}

TreePair interleaved_trees(const Polyhedron& cube) {
  const Polyhedron& P = cube;
  // at vertex 0 the cyclic order is A(bottom diag), B(mesh 0-1),
  // A(front diag), B(mesh 0-4)
  SurfaceTree a = make_tree(
      P, {chord(P, 0, 0, 2), chord(P, 2, 0, 5), mesh_tree_edge(P, 2, 3),
          mesh_tree_edge(P, 3, 7), mesh_tree_edge(P, 5, 6),
          mesh_tree_edge(P, 1, 2), mesh_tree_edge(P, 4, 7)});
  SurfaceTree b = make_tree(
      P, {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 0, 4),
          mesh_tree_edge(P, 1, 5), chord(P, 3, 1, 6), chord(P, 4, 2, 7),
          chord(P, 5, 3, 4), mesh_tree_edge(P, 6, 7)});
  return {a, b};
}

SurfaceTree cube_nonspanning_tree(const Polyhedron& P) {
  std::vector<int> nodes = {0, 1, 2, 3, 4, 5, 6};
  return make_tree(P,
                   {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 1, 2),
                    mesh_tree_edge(P, 2, 3), mesh_tree_edge(P, 0, 4),
                    mesh_tree_edge(P, 4, 5), mesh_tree_edge(P, 5, 6)},
                   &nodes);
}

SurfaceTree cube_cyclic_tree(const Polyhedron& P) {
  return make_tree(P, {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 1, 2),
                       mesh_tree_edge(P, 2, 3), mesh_tree_edge(P, 3, 7),
                       mesh_tree_edge(P, 7, 6), mesh_tree_edge(P, 6, 5),
                       mesh_tree_edge(P, 5, 4), mesh_tree_edge(P, 4, 0)});
}

SurfaceTree cube_forest_tree(const Polyhedron& P) {
  return make_tree(P, {mesh_tree_edge(P, 0, 1), mesh_tree_edge(P, 1, 2),
                       mesh_tree_edge(P, 2, 3), mesh_tree_edge(P, 4, 5),
                       mesh_tree_edge(P, 5, 6), mesh_tree_edge(P, 6, 7)});
}

}  // namespace hingeforge::fixtures
