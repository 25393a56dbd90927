#pragma once

#include <vector>

#include "hingeforge/noncross.hpp"

namespace hingeforge {

// Offset clearances for routing the separating cycle: alpha is a third of the
// smallest angle between incident drawn edges (capped at pi/2), epsilon a
// third of the smallest node-to-nonincident-edge distance.
struct ClearanceParams {
  double alpha = 0.0;
  double epsilon = 0.0;
};

// The two trees drawn together as one graph on the surface, with every
// polyline bend promoted to a node so each graph edge is a single face-local
// segment. Rotation order at each node is counterclockwise by intrinsic
// star angle.
struct UnionGraph {
  const Polyhedron* P = nullptr;

  struct Node {
    SurfacePoint point;
    int vertex_id = -1;  // polyhedron vertex id, or -1 for bends
    bool shared = false; // node of both trees
  };
  std::vector<Node> nodes;

  struct Edge {
    int a = -1, b = -1;  // node indices
    int tree = 0;        // 1 or 2
    int tree_edge = -1;  // edge index within the source tree
    int seg_index = 0;
    SurfaceSegment seg;  // geometry, a -> b
    bool on_mesh_edge = false;
    int mesh_edge = -1;
  };
  std::vector<Edge> edges;

  struct HalfEdge {
    int edge = -1;
    bool forward = true;  // a -> b

    bool operator==(const HalfEdge& o) const {
      return edge == o.edge && forward == o.forward;
    }
  };

  std::vector<std::vector<HalfEdge>> rotation;        // CCW per node
  std::vector<std::vector<double>> rotation_angles;   // star angles, aligned
  std::vector<PointStar> stars;

  struct FaceWalk {
    std::vector<HalfEdge> half_edges;
  };
  std::vector<FaceWalk> face_walks;

  int half_source(HalfEdge h) const {
    return h.forward ? edges[h.edge].a : edges[h.edge].b;
  }
  int half_target(HalfEdge h) const {
    return h.forward ? edges[h.edge].b : edges[h.edge].a;
  }
  // star angle of the half-edge's outgoing direction at its source
  double direction_angle(HalfEdge h) const;
  // chart position of node n in face f
  Vec2 node_chart(int n, int f) const;
  // carrier face on the left of the directed half-edge
  int left_face(HalfEdge h) const;
};

// Requires check_noncrossing to pass; throws crossing_trees otherwise.
UnionGraph build_union_graph(const Polyhedron& P, const SurfaceTree& T1,
                             const SurfaceTree& T2);

ClearanceParams clearances(const UnionGraph& G);

// Euler tour of tree 1: each tree-1 edge once per direction, turning to the
// clockwise-next edge around the tree at every node.
std::vector<UnionGraph::HalfEdge> euler_tour(const UnionGraph& G);

// The forced cyclic order extracted from the faces of the union graph,
// directed along tree 1's clockwise tour.
struct ForcedCycle {
  std::vector<int> junction_nodes;  // node indices, cyclic
  std::vector<int> faces;           // face walk between junction i and i+1
  std::vector<int> vertex_order;    // polyhedron vertex ids in cycle order
};

ForcedCycle forced_cycle(const UnionGraph& G);
std::vector<int> forced_vertex_order(const UnionGraph& G);

struct SeparatingCycle {
  std::vector<int> vertex_order;  // each polyhedron vertex exactly once
  SurfacePolyline curve;          // closed: last point repeats the first
  ClearanceParams clearance;
  // Tree 1 lies in the closed region on the right of the directed curve
  // (the interior); tree 2 on the left (the exterior).

  // per tour step: the sidewalk offset points of the traversed half-edge
  struct SidewalkInfo {
    UnionGraph::HalfEdge step;
    SurfacePoint p, q;
  };
  std::vector<SidewalkInfo> sidewalks;
};

SeparatingCycle build_separating_cycle(const Polyhedron& P,
                                       const SurfaceTree& T1,
                                       const SurfaceTree& T2);

// True cyclic equality up to rotation (and reflection if allow_reflection).
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b,
                  bool allow_reflection);

}  // namespace hingeforge
