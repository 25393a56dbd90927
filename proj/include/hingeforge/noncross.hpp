#pragma once

#include <string>
#include <vector>

#include "hingeforge/surface.hpp"

namespace hingeforge {

// A cut tree drawn on the surface: nodes are surface points (all polyhedron
// vertices plus optional degree-2 bend nodes), edges are face-local polylines.
struct SurfaceTree {
  struct Node {
    int id = -1;
    SurfacePoint anchor;
  };
  struct TreeEdge {
    int from = -1, to = -1;  // node ids
    SurfacePolyline polyline;
  };

  std::vector<Node> nodes;
  std::vector<TreeEdge> edges;

  int node_index(int id) const;
  const Node& node(int id) const { return nodes[node_index(id)]; }
  std::vector<int> incident_edges(int id) const;
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;

  void add(const std::string& code, const std::string& message) {
    ok = false;
    issues.push_back({code, message});
  }
};

// Confirms tree-ness, spanning, bend degrees, and self-noncrossing.
// Malformed references throw; geometric/topological failures are reported.
ValidationReport validate_tree(const Polyhedron& P, const SurfaceTree& T);

enum class ViolationKind { proper_cross, interior_touch, interleaved_at_vertex };

const char* violation_kind_name(ViolationKind k);

struct NonCrossViolation {
  ViolationKind kind;
  SurfacePoint location;
  int edge_a = -1;  // edge index in T1 (or node id for interleaving)
  int edge_b = -1;  // edge index in T2
  std::string detail;
};

struct NonCrossReport {
  bool ok = true;
  std::vector<NonCrossViolation> violations;
};

// Checks that edges of the two trees meet only at common nodes and that each
// tree's edges are contiguous in the intrinsic cyclic order around every
// shared node.
NonCrossReport check_noncrossing(const Polyhedron& P, const SurfaceTree& T1,
                                 const SurfaceTree& T2);

// Tagged flat list of the drawn segments of a tree; shared by the noncross
// check and the union-graph construction.
struct DrawnSegment {
  int tree_edge = -1;
  int seg_index = 0;
  SurfaceSegment seg;
  bool on_mesh_edge = false;
  int mesh_edge = -1;
};

std::vector<DrawnSegment> drawn_segments(const Polyhedron& P,
                                         const SurfaceTree& T);

// Chart realization of a drawn segment in face f (which must carry it).
SurfaceSegment segment_in_face(const Polyhedron& P, const SurfaceSegment& s,
                               int f);

}  // namespace hingeforge
