#pragma once

#include <string>
#include <vector>

#include "hingeforge/dissect.hpp"

namespace hingeforge {

// The polyhedral metric obtained by gluing the pieces as they are glued in
// both configurations.
struct GluedMetric {
  struct VertexClass {
    std::vector<std::pair<int, int>> corners;  // (piece, corner)
    double total_angle = 0.0;
    int hinge = -1;  // hinge index when the class carries a chain hinge
    // decomposition recorded from hinge angles: alpha + (2*pi - alpha')
    double hinge_alpha = 0.0;
    double hinge_alpha_prime = 0.0;
  };
  std::vector<VertexClass> classes;
  bool doubled = false;  // identity-fold gluing of a single configuration
};

// Identifies piece boundary edges pairwise using the two placements; throws
// glue_mismatch when partner edges disagree in length or the identification
// does not close a surface.
GluedMetric glue_metric(const HingedDissection& d, const Tolerance& tol);

struct AlexandrovReport {
  bool convex = false;
  std::vector<int> witnesses;  // classes with angle > 2*pi
};

AlexandrovReport check_alexandrov(const GluedMetric& m, const Tolerance& tol);

// Sum of angle defects minus 4*pi; zero for a sphere-type metric.
double gauss_bonnet_residual(const GluedMetric& m);

struct RoundtripReport {
  bool ok = false;
  size_t vertex_classes = 0;
  double max_cone_angle_error = 0.0;
  double gauss_bonnet = 0.0;
  bool alexandrov_convex = false;
  std::string failure;
};

// Runs the forward construction and the gluing, then checks that the glued
// vertex classes match the polyhedron's vertices and cone angles.
RoundtripReport roundtrip_check(const Polyhedron& P, const SurfaceTree& T_A,
                                const SurfaceTree& T_B);

}  // namespace hingeforge
