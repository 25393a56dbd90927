#pragma once

#include <optional>
#include <vector>

#include "hingeforge/cycle.hpp"

namespace hingeforge {

// A planar development of the surface cut along one tree.
struct Net {
  PlanarPolygon boundary;

  struct Patch {
    int face = -1;             // source mesh face
    PlanarPolygon region;      // placed sub-polygon of that face
    Isometry2 placement;       // face chart -> net plane
  };
  std::vector<Patch> patches;

  // cut vertices have one image per boundary visit
  std::vector<std::pair<int, Vec2>> vertex_images;
  // image of the other tree's drawing, one polyline per tree edge
  std::vector<std::vector<Vec2>> tree_image;
  double cut_length = 0.0;
};

// Develops the surface cut along T. Throws not_a_net if the development
// overlaps. When `other` is given, its drawing is mapped into the net.
Net unfold_net(const Polyhedron& P, const SurfaceTree& T,
               const SurfaceTree* other = nullptr);

// Cyclic chain of pieces hinged at corners, with the two configurations.
struct HingedDissection {
  std::vector<PlanarPolygon> pieces;  // local coords, chain order

  struct Hinge {
    int vertex = -1;  // polyhedron vertex id (external inputs may use labels)
    int piece_prev = -1, corner_prev = -1;
    int piece_next = -1, corner_next = -1;
    bool active = true;
  };
  std::vector<Hinge> hinges;  // hinge i joins pieces[i-1] and pieces[i]

  std::vector<Isometry2> placement_a, placement_b;

  Vec2 hinge_point_local(int h, bool on_next) const;
};

struct BuiltDissection {
  HingedDissection d;
  Net net_a, net_b;
  std::vector<double> hinge_cone_angles;        // per hinge, from the surface
  std::vector<std::vector<int>> edge_tree;      // per piece edge: 1=A or 2=B
};

// Forward direction of the construction: pieces are the closures of the
// components of the surface minus both trees, hinged along the separating
// cycle's vertex order.
BuiltDissection build_dissection(const Polyhedron& P, const SurfaceTree& T_A,
                                 const SurfaceTree& T_B);

struct HingeAngles {
  struct Entry {
    double alpha = 0.0;        // hinge angle in configuration A
    double alpha_prime = 0.0;  // same material angle in configuration B
    double beta = 0.0;         // complement: 2*pi - alpha_prime
  };
  std::vector<Entry> entries;  // one per hinge
};

HingeAngles hinge_angles(const HingedDissection& d, const Tolerance& tol);

struct Classification {
  bool reversible = false;
  bool monotone = false;
  bool simple = false;
  std::string witness_reversible;  // offending detail when false
  std::string witness_monotone;
  std::string witness_simple;
};

Classification classify(const HingedDissection& d, const HingeAngles& angles,
                        const Tolerance& tol);

// placed piece polygon under a configuration
PlanarPolygon placed_piece(const HingedDissection& d, int piece, bool config_a);

// Per-edge status of a piece boundary edge within one configuration.
enum class EdgeStatus { boundary, interior };
// For each piece edge: interior iff another placed edge coincides with it.
std::vector<std::vector<EdgeStatus>> edge_statuses(const HingedDissection& d,
                                                   bool config_a,
                                                   const Tolerance& tol);

}  // namespace hingeforge
