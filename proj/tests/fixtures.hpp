#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hingeforge/noncross.hpp"
#include "hingeforge/surface.hpp"

namespace hingeforge::fixtures {

// Unit cube, vertices 0..3 on z=0 counterclockwise from (0,0,0), 4..7 above.
Polyhedron cube_mesh();
// Regular tetrahedron with side 1, vertex 0 at the origin.
Polyhedron tetrahedron_mesh();
// Regular octahedron with unit circumradius.
Polyhedron octahedron_mesh();
// Flat polyhedron: two mirror copies of a CCW convex polygon in the z=0 plane.
Polyhedron doubly_covered_polygon_mesh(const std::vector<Vec2>& poly);
Polyhedron doubly_covered_triangle_mesh();  // equilateral, side 1
Polyhedron doubly_covered_square_mesh();    // unit square

// --- tree-pair fixtures (hand-designed, validated non-crossing) ---

struct TreePair {
  SurfaceTree a, b;
};

// helpers for building trees by hand
SurfacePoint face_point(const Polyhedron& P, int f, Vec3 pos);
SurfaceTree::TreeEdge mesh_tree_edge(const Polyhedron& P, int u, int v);
SurfaceTree::TreeEdge chord(const Polyhedron& P, int f, int u, int v);
SurfaceTree::TreeEdge bent2(const Polyhedron& P, int f, int u, int v, Vec3 mid);
SurfaceTree make_tree(const Polyhedron& P,
                      std::vector<SurfaceTree::TreeEdge> edges,
                      const std::vector<int>* node_subset = nullptr);

// T_A = classic cross cut tree (7 mesh edges); T_B = bottom path + three
// face chords + one bent edge.
TreePair cube_trees(const Polyhedron& P);
// T_A = star of mesh edges at vertex 0; T_B = path 1-2-3 plus a bent edge
// back to vertex 0 through the bottom face.
TreePair tetrahedron_trees(const Polyhedron& P);
TreePair octahedron_trees(const Polyhedron& P);
TreePair doubly_covered_triangle_trees(const Polyhedron& P);
TreePair doubly_covered_square_trees(const Polyhedron& P);

// Cube with one corner pushed inward: the saddle vertex makes leaf-ended
// cut trees unfold with overlap.
Polyhedron dented_cube_mesh();
SurfaceTree dented_cube_overlap_tree(const Polyhedron& dented);

// Randomized family: a doubly covered convex polygon whose tree a runs
// along the boundary creases and whose tree b shadows it just inside the
// back face. Returns nothing when the sampled polygon is too degenerate.
struct RandomFixture {
  Polyhedron P;
  TreePair trees;
};
std::optional<RandomFixture> random_comb_fixture(std::uint64_t seed);

// negative fixtures
TreePair crossing_trees(const Polyhedron& dc_square);
TreePair interleaved_trees(const Polyhedron& cube);
SurfaceTree cube_nonspanning_tree(const Polyhedron& cube);
SurfaceTree cube_cyclic_tree(const Polyhedron& cube);
SurfaceTree cube_forest_tree(const Polyhedron& cube);

}  // namespace hingeforge::fixtures
