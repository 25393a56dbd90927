// Fixture clearance probe: prints the geometric margins that the separating
// cycle construction depends on, for tuning fixture coordinates.
#include <cstdio>
#include <string>

#include "fixtures.hpp"
#include "hingeforge/cycle.hpp"

using namespace hingeforge;
namespace fx = hingeforge::fixtures;

static void probe(const std::string& name, const Polyhedron& P,
                  const fx::TreePair& pair) {
  std::printf("== %s ==\n", name.c_str());
  try {
    UnionGraph G = build_union_graph(P, pair.a, pair.b);
    ClearanceParams cp = clearances(G);
    double L = cp.epsilon / std::sin(cp.alpha);
    double lmin = 1e99;
    for (const auto& e : G.edges)
      lmin = std::min(lmin, dist(e.seg.a_uv, e.seg.b_uv));
    std::printf(
        "  alpha=%.4f deg  eps=%.4f  L=eps/sin=%.4f  Lmin=%.4f  feet=%.4f "
        "(vs Lmin/2=%.4f)\n",
        cp.alpha * 180 / kPi, cp.epsilon, L, lmin,
        cp.epsilon / std::tan(cp.alpha), lmin / 2);
    SeparatingCycle c = build_separating_cycle(P, pair.a, pair.b);
    std::printf("  cycle OK: %zu vertices, %zu curve points\n",
                c.vertex_order.size(), c.curve.points.size());
  } catch (const PipelineError& e) {
    std::printf("  FAILED: %s\n", e.what());
  }
}

int main() {
  {
    Polyhedron P = fx::cube_mesh();
    probe("cube", P, fx::cube_trees(P));
  }
  {
    Polyhedron P = fx::tetrahedron_mesh();
    probe("tetrahedron", P, fx::tetrahedron_trees(P));
  }
  {
    Polyhedron P = fx::octahedron_mesh();
    probe("octahedron", P, fx::octahedron_trees(P));
  }
  {
    Polyhedron P = fx::doubly_covered_triangle_mesh();
    probe("dc-triangle", P, fx::doubly_covered_triangle_trees(P));
  }
  {
    Polyhedron P = fx::doubly_covered_square_mesh();
    probe("dc-square", P, fx::doubly_covered_square_trees(P));
  }
  return 0;
}
