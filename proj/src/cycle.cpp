#include "hingeforge/cycle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace hingeforge {

namespace {
const std::string kStage = "cycle";

UnionGraph::HalfEdge twin(UnionGraph::HalfEdge h) {
  return {h.edge, !h.forward};
}
}  // namespace

double UnionGraph::direction_angle(HalfEdge h) const {
  const Edge& e = edges[h.edge];
  Vec2 from = h.forward ? e.seg.a_uv : e.seg.b_uv;
  Vec2 to = h.forward ? e.seg.b_uv : e.seg.a_uv;
  return stars[half_source(h)].direction_angle(e.seg.face,
                                               (to - from).normalized(), P->tol);
}

Vec2 UnionGraph::node_chart(int n, int f) const {
  return chart_position(*P, nodes[n].point, f);
}

int UnionGraph::left_face(HalfEdge h) const {
  const Edge& e = edges[h.edge];
  if (!e.on_mesh_edge) return e.seg.face;
  const auto& me = P->edges[e.mesh_edge];
  auto param = [&](const SurfacePoint& sp) {
    if (sp.kind == SurfacePoint::Kind::vertex)
      return sp.ref == me.a ? 0.0 : 1.0;
    return sp.t;
  };
  double ts = param(h.forward ? e.seg.a : e.seg.b);
  double tt = param(h.forward ? e.seg.b : e.seg.a);
  return tt > ts ? me.face_left : me.face_right;
}

UnionGraph build_union_graph(const Polyhedron& P, const SurfaceTree& T1,
                             const SurfaceTree& T2) {
  NonCrossReport nc = check_noncrossing(P, T1, T2);
  if (!nc.ok)
    fail(ErrorCode::crossing_trees, kStage,
         "trees are not non-crossing (" +
             std::string(violation_kind_name(nc.violations.front().kind)) + ")");

  UnionGraph G;
  G.P = &P;
  double eps = P.tol.absolute_eps;

  auto find_node = [&](const SurfacePoint& sp) {
    for (size_t i = 0; i < G.nodes.size(); ++i)
      if (same_surface_point(G.nodes[i].point, sp, eps)) return int(i);
    return -1;
  };
  auto add_node = [&](const SurfacePoint& sp, bool is_tree_node,
                      int tree) -> int {
    int i = find_node(sp);
    if (i >= 0) {
      if (is_tree_node && tree == 2 && G.nodes[i].vertex_id < 0)
        G.nodes[i].shared = true;  // shared non-vertex node
      return i;
    }
    UnionGraph::Node n;
    n.point = sp;
    n.vertex_id = sp.kind == SurfacePoint::Kind::vertex ? sp.ref : -1;
    G.nodes.push_back(n);
    return int(G.nodes.size() - 1);
  };

  for (const auto& n : T1.nodes) add_node(n.anchor, true, 1);
  for (const auto& n : T2.nodes) {
    int i = find_node(n.anchor);
    if (i >= 0 && G.nodes[i].vertex_id >= 0) G.nodes[i].shared = true;
    add_node(n.anchor, true, 2);
  }

  int tree_tag = 1;
  for (const SurfaceTree* T : {&T1, &T2}) {
    auto segs = drawn_segments(P, *T);
    for (const auto& d : segs) {
      UnionGraph::Edge e;
      e.a = add_node(d.seg.a, false, tree_tag);
      e.b = add_node(d.seg.b, false, tree_tag);
      e.tree = tree_tag;
      e.tree_edge = d.tree_edge;
      e.seg_index = d.seg_index;
      e.seg = d.seg;
      e.on_mesh_edge = d.on_mesh_edge;
      e.mesh_edge = d.mesh_edge;
      G.edges.push_back(e);
    }
    tree_tag = 2;
  }

  // rotation system from intrinsic star angles
  G.stars.reserve(G.nodes.size());
  for (const auto& n : G.nodes) G.stars.push_back(build_point_star(P, n.point));
  G.rotation.assign(G.nodes.size(), {});
  G.rotation_angles.assign(G.nodes.size(), {});
  for (size_t ei = 0; ei < G.edges.size(); ++ei) {
    G.rotation[G.edges[ei].a].push_back({int(ei), true});
    G.rotation[G.edges[ei].b].push_back({int(ei), false});
  }
  for (size_t n = 0; n < G.nodes.size(); ++n) {
    std::vector<std::pair<double, UnionGraph::HalfEdge>> order;
    for (auto h : G.rotation[n]) order.push_back({G.direction_angle(h), h});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    G.rotation[n].clear();
    for (auto& [phi, h] : order) {
      G.rotation[n].push_back(h);
      G.rotation_angles[n].push_back(phi);
    }
  }

  // face walks: from (u->v) the face on the left continues with the
  // clockwise predecessor of (v->u) in the rotation
  std::map<std::pair<int, bool>, int> walk_of;
  for (size_t ei = 0; ei < G.edges.size(); ++ei) {
    for (bool fwd : {true, false}) {
      if (walk_of.count({int(ei), fwd})) continue;
      UnionGraph::FaceWalk walk;
      UnionGraph::HalfEdge h{int(ei), fwd};
      while (!walk_of.count({h.edge, h.forward})) {
        walk_of[{h.edge, h.forward}] = int(G.face_walks.size());
        walk.half_edges.push_back(h);
        int v = G.half_target(h);
        UnionGraph::HalfEdge tw = twin(h);
        const auto& rot = G.rotation[v];
        size_t k = 0;
        while (k < rot.size() && !(rot[k] == tw)) ++k;
        if (k == rot.size())
          fail(ErrorCode::internal_error, kStage, "rotation system inconsistent");
        h = rot[(k + rot.size() - 1) % rot.size()];
      }
      G.face_walks.push_back(walk);
    }
  }

  int V = int(G.nodes.size());
  int E = int(G.edges.size());
  int F = int(G.face_walks.size());
  if (V - E + F != 2)
    fail(ErrorCode::internal_error, kStage,
         "union graph violates Euler formula: V-E+F = " +
             std::to_string(V - E + F));

  // every face boundary holds at most one maximal run per tree
  for (const auto& walk : G.face_walks) {
    int runs1 = 0, runs2 = 0;
    size_t m = walk.half_edges.size();
    for (size_t i = 0; i < m; ++i) {
      int cur = G.edges[walk.half_edges[i].edge].tree;
      int prev = G.edges[walk.half_edges[(i + m - 1) % m].edge].tree;
      if (cur == 1 && prev != 1) ++runs1;
      if (cur == 2 && prev != 2) ++runs2;
    }
    if (runs1 > 1 || runs2 > 1)
      fail(ErrorCode::internal_error, kStage,
           "union-graph face has multiple runs of one tree");
  }
  return G;
}

ClearanceParams clearances(const UnionGraph& G) {
  const Polyhedron& P = *G.P;
  ClearanceParams cp;
  double min_gap = std::numeric_limits<double>::infinity();
  for (size_t n = 0; n < G.nodes.size(); ++n) {
    const auto& angs = G.rotation_angles[n];
    if (angs.size() < 2) continue;
    double total = G.stars[n].total_angle;
    for (size_t i = 0; i < angs.size(); ++i) {
      double next = (i + 1 < angs.size()) ? angs[i + 1] : angs[0] + total;
      double gap = next - angs[i];
      if (gap < P.tol.angle_eps)
        fail(ErrorCode::clearance_failure, kStage,
             "two edges leave a node in the same direction");
      min_gap = std::min(min_gap, gap);
    }
  }
  if (!std::isfinite(min_gap))
    fail(ErrorCode::clearance_failure, kStage, "graph has no incident edge pairs");
  cp.alpha = std::min(min_gap / 3.0, kPi / 2.0);

  double min_dist = std::numeric_limits<double>::infinity();
  for (size_t n = 0; n < G.nodes.size(); ++n) {
    auto nf = point_faces(P, G.nodes[n].point);
    for (size_t ei = 0; ei < G.edges.size(); ++ei) {
      const auto& e = G.edges[ei];
      if (e.a == int(n) || e.b == int(n)) continue;
      std::vector<int> ef = e.on_mesh_edge
                                ? std::vector<int>{P.edges[e.mesh_edge].face_left,
                                                   P.edges[e.mesh_edge].face_right}
                                : std::vector<int>{e.seg.face};
      for (int f : ef) {
        if (std::find(nf.begin(), nf.end(), f) == nf.end()) continue;
        SurfaceSegment s = segment_in_face(P, e.seg, f);
        Vec2 uv = G.node_chart(int(n), f);
        min_dist = std::min(min_dist,
                            point_segment_distance(uv, s.a_uv, s.b_uv));
      }
    }
  }
  if (!std::isfinite(min_dist) || min_dist <= P.tol.absolute_eps)
    fail(ErrorCode::clearance_failure, kStage,
         "no positive node-to-edge clearance");
  cp.epsilon = min_dist / 3.0;
  return cp;
}

std::vector<UnionGraph::HalfEdge> euler_tour(const UnionGraph& G) {
  // rotation restricted to tree 1
  std::vector<std::vector<UnionGraph::HalfEdge>> rot1(G.nodes.size());
  size_t t1_edges = 0;
  for (size_t n = 0; n < G.nodes.size(); ++n)
    for (auto h : G.rotation[n])
      if (G.edges[h.edge].tree == 1) rot1[n].push_back(h);
  for (const auto& e : G.edges)
    if (e.tree == 1) ++t1_edges;

  int start_node = -1;
  for (size_t n = 0; n < G.nodes.size(); ++n)
    if (!rot1[n].empty()) { start_node = int(n); break; }
  if (start_node < 0)
    fail(ErrorCode::invalid_tree, kStage, "tree 1 has no edges");

  std::vector<UnionGraph::HalfEdge> tour;
  UnionGraph::HalfEdge h = rot1[start_node][0];
  do {
    tour.push_back(h);
    int v = G.half_target(h);
    UnionGraph::HalfEdge tw = twin(h);
    const auto& rot = rot1[v];
    size_t k = 0;
    while (k < rot.size() && !(rot[k] == tw)) ++k;
    if (k == rot.size())
      fail(ErrorCode::internal_error, kStage, "tour left tree 1");
    // clockwise-next around the tree: counterclockwise predecessor
    h = rot[(k + rot.size() - 1) % rot.size()];
    if (tour.size() > 2 * t1_edges + 1)
      fail(ErrorCode::internal_error, kStage, "euler tour does not close");
  } while (!(h == tour.front()));
  if (tour.size() != 2 * t1_edges)
    fail(ErrorCode::internal_error, kStage, "euler tour misses edges");
  return tour;
}

ForcedCycle forced_cycle(const UnionGraph& G) {
  ForcedCycle fc;
  struct Out {
    int to = -1;
    int face = -1;
  };
  std::map<int, Out> out;
  for (size_t w = 0; w < G.face_walks.size(); ++w) {
    const auto& walk = G.face_walks[w].half_edges;
    size_t m = walk.size();
    int from = -1, to = -1;
    int switches = 0;
    for (size_t i = 0; i < m; ++i) {
      int cur = G.edges[walk[i].edge].tree;
      int nxt = G.edges[walk[(i + 1) % m].edge].tree;
      if (cur == nxt) continue;
      ++switches;
      int node = G.half_target(walk[i]);
      if (cur == 2 && nxt == 1) from = node;  // tree-1 run starts here
      if (cur == 1 && nxt == 2) to = node;    // tree-1 run ends here
    }
    if (switches == 0)
      fail(ErrorCode::forced_order_failure, kStage,
           "union-graph face bounded by a single tree");
    if (switches != 2 || from < 0 || to < 0 || from == to)
      fail(ErrorCode::forced_order_failure, kStage,
           "union-graph face does not force a single connection");
    // the separating cycle built from tree 1's clockwise tour runs along
    // each face's tree-1 run from its start junction to its end junction
    if (out.count(from))
      fail(ErrorCode::forced_order_failure, kStage,
           "junction node forced twice in the same direction");
    out[from] = {to, int(w)};
  }

  // walk the directed forced connections
  int start = -1;
  for (const auto& [n, o] : out) {
    if (G.nodes[n].vertex_id == 0) start = n;
    (void)o;
  }
  if (start < 0) start = out.begin()->first;
  int cur = start;
  do {
    auto it = out.find(cur);
    if (it == out.end())
      fail(ErrorCode::forced_order_failure, kStage,
           "forced connections do not close into a cycle");
    fc.junction_nodes.push_back(cur);
    fc.faces.push_back(it->second.face);
    cur = it->second.to;
    if (fc.junction_nodes.size() > out.size())
      fail(ErrorCode::forced_order_failure, kStage,
           "forced connections contain a sub-cycle");
  } while (cur != start);
  if (fc.junction_nodes.size() != out.size())
    fail(ErrorCode::forced_order_failure, kStage,
         "forced connections form more than one cycle");

  for (int n : fc.junction_nodes)
    if (G.nodes[n].vertex_id >= 0) fc.vertex_order.push_back(G.nodes[n].vertex_id);
  std::set<int> seen(fc.vertex_order.begin(), fc.vertex_order.end());
  if (seen.size() != G.P->vertices.size() ||
      seen.size() != fc.vertex_order.size())
    fail(ErrorCode::forced_order_failure, kStage,
         "forced cycle does not visit every vertex exactly once");
  return fc;
}

std::vector<int> forced_vertex_order(const UnionGraph& G) {
  return forced_cycle(G).vertex_order;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b,
                  bool allow_reflection) {
  if (a.size() != b.size()) return false;
  size_t n = a.size();
  for (size_t s = 0; s < n; ++s) {
    bool eq = true;
    for (size_t i = 0; i < n && eq; ++i)
      if (a[i] != b[(s + i) % n]) eq = false;
    if (eq) return true;
  }
  if (allow_reflection) {
    std::vector<int> r(b.rbegin(), b.rend());
    return cyclic_equal(a, r, false);
  }
  return false;
}

// --- separating cycle construction ---

namespace {

// placement of a star sector's chart into the node development plane
// (node at the origin, star angle = plane angle)
Isometry2 sector_to_node_plane(const PointStar::Sector& s) {
  Rot2 r = Rot2::from_angle(s.chart_offset);
  return {r, -(r(s.apex))};
}

std::vector<SurfaceSegment> reversed_segments(
    const std::vector<SurfaceSegment>& segs) {
  std::vector<SurfaceSegment> out;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    SurfaceSegment s = *it;
    std::swap(s.a, s.b);
    std::swap(s.a_uv, s.b_uv);
    out.push_back(s);
  }
  return out;
}

struct RadialTrace {
  std::vector<SurfaceSegment> segments;  // node -> tip
  SurfacePoint tip;
  int tip_face = -1;
  Isometry2 tip_placement;  // chart of tip_face -> node plane
};

// trace outward from a union-graph node at star angle phi to radius L,
// working in the node development plane
RadialTrace radial_trace(const UnionGraph& G, int n, double phi, double L) {
  const Polyhedron& P = *G.P;
  const PointStar& star = G.stars[n];
  const auto& sector = star.sector_at(phi, P.tol);
  Isometry2 placement = sector_to_node_plane(sector);
  double a = star.normalize(phi);
  Vec2 target{L * std::cos(a), L * std::sin(a)};
  TraceResult tr =
      trace_to(P, G.nodes[n].point, sector.face, placement, target, kStage);
  if (tr.end.kind == SurfacePoint::Kind::vertex)
    fail(ErrorCode::clearance_failure, kStage,
         "cycle offset point lands on a vertex");
  return {tr.segments, tr.end, tr.end_face, tr.end_placement};
}

}  // namespace

SeparatingCycle build_separating_cycle(const Polyhedron& P,
                                       const SurfaceTree& T1,
                                       const SurfaceTree& T2) {
  ValidationReport v1 = validate_tree(P, T1);
  ValidationReport v2 = validate_tree(P, T2);
  if (!v1.ok || !v2.ok)
    fail(ErrorCode::invalid_tree, kStage,
         std::string("tree ") + (!v1.ok ? "1" : "2") + " fails validation (" +
             (!v1.ok ? v1.issues.front().code : v2.issues.front().code) + ")");

  UnionGraph G = build_union_graph(P, T1, T2);
  ClearanceParams cp = clearances(G);
  double L = cp.epsilon / std::sin(cp.alpha);
  double rho = cp.epsilon / 2.0;

  std::vector<UnionGraph::HalfEdge> tour = euler_tour(G);
  size_t N = tour.size();

  struct Step {
    UnionGraph::HalfEdge h;
    double phi_p = 0, phi_q = 0;          // ramp angles at source/target
    RadialTrace ramp_out;                 // source node plane: u -> p
    RadialTrace ramp_in;                  // target node plane: v -> q
    std::vector<SurfaceSegment> parallel; // p -> q
  };
  std::vector<Step> steps(N);

  for (size_t i = 0; i < N; ++i) {
    Step& st = steps[i];
    st.h = tour[i];
    int u = G.half_source(st.h), v = G.half_target(st.h);
    st.phi_p = G.stars[u].normalize(G.direction_angle(st.h) + cp.alpha);
    st.phi_q = G.stars[v].normalize(G.direction_angle(twin(st.h)) - cp.alpha);
    st.ramp_out = radial_trace(G, u, st.phi_p, L);
    st.ramp_in = radial_trace(G, v, st.phi_q, L);

    // parallel piece p -> q, traced in the source node plane. in that
    // development the traversed segment runs along the ray at the edge's own
    // star angle, and q sits at distance L from the far end, swung back by
    // alpha on the left side.
    int f = G.left_face(st.h);
    Vec2 uc = G.node_chart(u, f), vc = G.node_chart(v, f);
    double s_ang = G.stars[u].normalize(G.direction_angle(st.h));
    double back = s_ang + kPi - cp.alpha;
    Vec2 q_unode = dist(uc, vc) * Vec2{std::cos(s_ang), std::sin(s_ang)} +
                   L * Vec2{std::cos(back), std::sin(back)};
    TraceResult tr = trace_to(P, st.ramp_out.tip, st.ramp_out.tip_face,
                              st.ramp_out.tip_placement, q_unode, kStage);
    st.parallel = tr.segments;
    if (!surface_points_close(P, tr.end, st.ramp_in.tip, 64 * P.tol.absolute_eps)) {
      fail(ErrorCode::clearance_failure, kStage,
           "sidewalk ends do not meet across a step");
    }
  }

  // connectors at each node between consecutive steps
  SeparatingCycle cycle;
  cycle.clearance = cp;
  std::vector<SurfaceSegment> curve;
  std::vector<int> visit_count(G.nodes.size(), 0);

  for (size_t i = 0; i < N; ++i) {
    const Step& cur = steps[i];
    const Step& nxt = steps[(i + 1) % N];
    cycle.sidewalks.push_back({cur.h, cur.ramp_out.tip, cur.ramp_in.tip});
    curve.insert(curve.end(), cur.parallel.begin(), cur.parallel.end());

    int v = G.half_target(cur.h);
    if (G.half_source(nxt.h) != v)
      fail(ErrorCode::internal_error, kStage, "tour steps do not chain");

    // wedge from the departing edge CCW to the arriving edge
    double phi_arr = G.direction_angle(twin(cur.h));
    double phi_dep = G.direction_angle(nxt.h);
    const PointStar& star = G.stars[v];
    double gap = star.normalize(phi_arr - phi_dep);
    if (gap < P.tol.angle_eps) gap = star.total_angle;  // leaf: full turn
    bool has_t2 = false;
    for (size_t k = 0; k < G.rotation[v].size(); ++k) {
      if (G.edges[G.rotation[v][k].edge].tree != 2) continue;
      double d = star.normalize(G.rotation_angles[v][k] - phi_dep);
      if (d < P.tol.angle_eps || std::abs(gap - d) < P.tol.angle_eps)
        fail(ErrorCode::clearance_failure, kStage,
             "tree-2 edge on a wedge boundary");
      if (d < gap) has_t2 = true;
    }

    if (has_t2) {
      // visit the node: q -> v -> p
      auto in = reversed_segments(cur.ramp_in.segments);
      curve.insert(curve.end(), in.begin(), in.end());
      curve.insert(curve.end(), nxt.ramp_out.segments.begin(),
                   nxt.ramp_out.segments.end());
      if (visit_count[v] == 0 && G.nodes[v].vertex_id >= 0)
        cycle.vertex_order.push_back(G.nodes[v].vertex_id);
      ++visit_count[v];
    } else {
      // crosswalk inside the wedge: radial in, arc around, radial out
      double a_arr = star.normalize(cur.phi_q);
      double sweep = star.normalize(a_arr - star.normalize(nxt.phi_p));
      int arc_steps = std::max(1, int(std::ceil(sweep / (kPi / 6.0))));
      SurfacePoint at = cur.ramp_in.tip;
      int at_face = cur.ramp_in.tip_face;
      Isometry2 at_placement = cur.ramp_in.tip_placement;
      auto walk_to = [&](Vec2 target) {
        TraceResult tr = trace_to(P, at, at_face, at_placement, target, kStage);
        curve.insert(curve.end(), tr.segments.begin(), tr.segments.end());
        at = tr.end;
        at_face = tr.end_face;
        at_placement = tr.end_placement;
      };
      walk_to({rho * std::cos(a_arr), rho * std::sin(a_arr)});
      for (int k = 1; k <= arc_steps; ++k) {
        double a = a_arr - sweep * k / arc_steps;
        walk_to({rho * std::cos(a), rho * std::sin(a)});
      }
      double a_dep = a_arr - sweep;
      walk_to({L * std::cos(a_dep), L * std::sin(a_dep)});
      if (!surface_points_close(P, at, nxt.ramp_out.tip, 64 * P.tol.absolute_eps))
        fail(ErrorCode::clearance_failure, kStage,
             "crosswalk does not meet the next sidewalk");
    }
  }

  for (size_t n = 0; n < G.nodes.size(); ++n) {
    if (G.nodes[n].vertex_id >= 0 && visit_count[n] != 1)
      fail(ErrorCode::clearance_failure, kStage,
           "cycle visits vertex " + std::to_string(G.nodes[n].vertex_id) +
               " " + std::to_string(visit_count[n]) + " times");
    if (G.nodes[n].vertex_id < 0 && !G.nodes[n].shared && visit_count[n] != 0)
      fail(ErrorCode::internal_error, kStage, "cycle visits a bend node");
  }

  // stitch segments into a closed polyline
  if (curve.empty())
    fail(ErrorCode::internal_error, kStage, "empty cycle curve");
  SurfacePolyline pl;
  pl.points.push_back(curve.front().a);
  for (size_t i = 0; i < curve.size(); ++i) {
    if (i + 1 < curve.size() &&
        !surface_points_close(P, curve[i].b, curve[i + 1].a, 64 * P.tol.absolute_eps))
      fail(ErrorCode::internal_error, kStage, "cycle curve is not contiguous");
    pl.points.push_back(curve[i].b);
    pl.carrier_faces.push_back(curve[i].face);
  }
  if (!surface_points_close(P, pl.points.front(), pl.points.back(),
                            64 * P.tol.absolute_eps))
    fail(ErrorCode::internal_error, kStage, "cycle curve is not closed");
  pl.points.back() = pl.points.front();
  cycle.curve = pl;

  // simplicity and non-intersection self-check
  auto curve_segs = curve;
  size_t M = curve_segs.size();
  auto seg_faces = [&](const SurfaceSegment& s) {
    std::vector<int> fs{s.face};
    return fs;
  };
  for (size_t i = 0; i < M; ++i) {
    for (size_t j = i + 1; j < M; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == M - 1);
      for (int f : seg_faces(curve_segs[i])) {
        if (curve_segs[j].face != f) continue;
        SegmentRelation rel =
            segment_classify(curve_segs[i].a_uv, curve_segs[i].b_uv,
                             curve_segs[j].a_uv, curve_segs[j].b_uv, P.tol);
        if (rel == SegmentRelation::disjoint) continue;
        if (adjacent && rel == SegmentRelation::shared_endpoint) continue;
        fail(ErrorCode::clearance_failure, kStage,
             "cycle curve self-intersects (" +
                 std::string(segment_relation_name(rel)) + ")");
      }
      if (!adjacent) {
        // coincident endpoints across different carrier faces
        for (const auto& pa : {curve_segs[i].a, curve_segs[i].b})
          for (const auto& pb : {curve_segs[j].a, curve_segs[j].b})
            if (pa.kind != SurfacePoint::Kind::face &&
                same_surface_point(pa, pb, P.tol.absolute_eps) &&
                !(j == i + 1 || (i == 0 && j == M - 1)))
              fail(ErrorCode::clearance_failure, kStage,
                   "cycle curve touches itself at a mesh edge");
      }
    }
  }
  // the curve may touch the graph only at visited nodes
  for (const auto& cs : curve_segs) {
    for (const auto& ge : G.edges) {
      std::vector<int> gf =
          ge.on_mesh_edge
              ? std::vector<int>{P.edges[ge.mesh_edge].face_left,
                                 P.edges[ge.mesh_edge].face_right}
              : std::vector<int>{ge.seg.face};
      for (int f : gf) {
        if (cs.face != f) continue;
        SurfaceSegment gs = segment_in_face(P, ge.seg, f);
        SegmentRelation rel =
            segment_classify(cs.a_uv, cs.b_uv, gs.a_uv, gs.b_uv, P.tol);
        if (rel == SegmentRelation::disjoint) continue;
        if (rel == SegmentRelation::shared_endpoint) {
          bool at_visited_node = false;
          for (const auto& pt : {cs.a, cs.b})
            if (pt.kind == SurfacePoint::Kind::vertex)
              at_visited_node = true;
          if (at_visited_node) continue;
        }
        fail(ErrorCode::clearance_failure, kStage,
             "cycle curve intersects a tree edge");
      }
    }
  }

  return cycle;
}

}  // namespace hingeforge
