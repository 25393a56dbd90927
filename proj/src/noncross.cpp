#include "hingeforge/noncross.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hingeforge {

namespace {
const std::string kStage = "tree";
}

int SurfaceTree::node_index(int id) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return int(i);
  fail(ErrorCode::invalid_tree, kStage, "unknown node id " + std::to_string(id));
}

std::vector<int> SurfaceTree::incident_edges(int id) const {
  std::vector<int> out;
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].from == id || edges[e].to == id) out.push_back(int(e));
  return out;
}

std::vector<DrawnSegment> drawn_segments(const Polyhedron& P,
                                         const SurfaceTree& T) {
  std::vector<DrawnSegment> out;
  for (size_t e = 0; e < T.edges.size(); ++e) {
    auto segs = T.edges[e].polyline.segments(P);
    for (size_t i = 0; i < segs.size(); ++i) {
      DrawnSegment d{int(e), int(i), segs[i], false, -1};
      // a segment with both endpoints on one mesh edge of its carrier face
      // lies on that mesh edge
      for (int me = 0; me < int(P.edges.size()); ++me) {
        const auto& ed = P.edges[me];
        if (ed.face_left != segs[i].face && ed.face_right != segs[i].face)
          continue;
        auto on_edge = [&](const SurfacePoint& sp) {
          if (sp.kind == SurfacePoint::Kind::edge) return sp.ref == me;
          if (sp.kind == SurfacePoint::Kind::vertex)
            return sp.ref == ed.a || sp.ref == ed.b;
          return false;
        };
        if (on_edge(segs[i].a) && on_edge(segs[i].b)) {
          d.on_mesh_edge = true;
          d.mesh_edge = me;
          break;
        }
      }
      out.push_back(d);
    }
  }
  return out;
}

SurfaceSegment segment_in_face(const Polyhedron& P, const SurfaceSegment& s,
                               int f) {
  if (s.face == f) return s;
  SurfaceSegment r = s;
  r.face = f;
  r.a_uv = chart_position(P, s.a, f);
  r.b_uv = chart_position(P, s.b, f);
  return r;
}

namespace {

std::vector<int> segment_faces(const Polyhedron& P, const DrawnSegment& d) {
  if (d.on_mesh_edge)
    return {P.edges[d.mesh_edge].face_left, P.edges[d.mesh_edge].face_right};
  return {d.seg.face};
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

bool anchors_valid(const Polyhedron& P, const SurfacePoint& sp) {
  switch (sp.kind) {
    case SurfacePoint::Kind::vertex:
      return sp.ref >= 0 && sp.ref < int(P.vertices.size());
    case SurfacePoint::Kind::edge:
      return sp.ref >= 0 && sp.ref < int(P.edges.size()) && sp.t > 0 && sp.t < 1;
    case SurfacePoint::Kind::face:
      return sp.ref >= 0 && sp.ref < int(P.faces.size());
  }
  return false;
}

}  // namespace

ValidationReport validate_tree(const Polyhedron& P, const SurfaceTree& T) {
  ValidationReport rep;

  std::set<int> ids;
  for (const auto& n : T.nodes) {
    if (!ids.insert(n.id).second)
      fail(ErrorCode::invalid_tree, kStage,
           "duplicate node id " + std::to_string(n.id));
    if (!anchors_valid(P, n.anchor))
      fail(ErrorCode::invalid_anchor, kStage,
           "node " + std::to_string(n.id) + " has an invalid anchor");
    if (n.anchor.kind == SurfacePoint::Kind::face) {
      SurfacePoint canon = canonical_point(P, n.anchor.ref, n.anchor.uv);
      if (canon.kind != SurfacePoint::Kind::face)
        rep.add("non-canonical-anchor",
                "node " + std::to_string(n.id) +
                    " is stored as face-interior but lies on the face boundary");
      PlanarPolygon poly = P.face_polygon(n.anchor.ref);
      if (!point_in_polygon(n.anchor.uv, poly, P.tol) &&
          !point_on_polygon_boundary(n.anchor.uv, poly, P.tol))
        fail(ErrorCode::invalid_anchor, kStage,
             "node " + std::to_string(n.id) + " lies outside its face");
    }
  }
  for (const auto& e : T.edges) {
    if (!ids.count(e.from) || !ids.count(e.to))
      fail(ErrorCode::invalid_tree, kStage, "edge references unknown node");
    if (e.from == e.to)
      fail(ErrorCode::invalid_tree, kStage, "self-loop edge");
    if (e.polyline.points.size() < 2)
      fail(ErrorCode::invalid_tree, kStage, "edge with empty polyline");
    if (!same_surface_point(e.polyline.points.front(),
                            T.node(e.from).anchor, P.tol.absolute_eps) ||
        !same_surface_point(e.polyline.points.back(), T.node(e.to).anchor,
                            P.tol.absolute_eps))
      fail(ErrorCode::invalid_tree, kStage,
           "edge polyline endpoints do not match its nodes");
  }

  // spanning: every polyhedron vertex appears as a node anchor
  for (int v = 0; v < int(P.vertices.size()); ++v) {
    bool found = false;
    for (const auto& n : T.nodes)
      if (n.anchor.kind == SurfacePoint::Kind::vertex && n.anchor.ref == v)
        found = true;
    if (!found)
      rep.add("not-spanning",
              "polyhedron vertex " + std::to_string(v) + " is not a tree node");
  }

  // connectivity and acyclicity
  std::map<int, int> idx;
  for (size_t i = 0; i < T.nodes.size(); ++i) idx[T.nodes[i].id] = int(i);
  DSU dsu(int(T.nodes.size()));
  bool cycle = false;
  for (const auto& e : T.edges)
    if (!dsu.unite(idx[e.from], idx[e.to])) cycle = true;
  int comps = 0;
  for (size_t i = 0; i < T.nodes.size(); ++i)
    if (dsu.find(int(i)) == int(i)) ++comps;
  if (comps != 1) rep.add("not-connected", "tree has " + std::to_string(comps) +
                                               " components");
  if (cycle) rep.add("not-acyclic", "tree contains a cycle");

  // non-vertex nodes must be degree-2 bends
  for (const auto& n : T.nodes) {
    if (n.anchor.kind == SurfacePoint::Kind::vertex) continue;
    int deg = int(T.incident_edges(n.id).size());
    if (deg != 2)
      rep.add("bend-degree", "non-vertex node " + std::to_string(n.id) +
                                 " has degree " + std::to_string(deg));
  }

  // self-noncrossing: segments meet only at shared nodes / consecutive bends
  auto segs = drawn_segments(P, T);
  for (size_t i = 0; i < segs.size(); ++i) {
    for (size_t j = i + 1; j < segs.size(); ++j) {
      bool consecutive = segs[i].tree_edge == segs[j].tree_edge &&
                         std::abs(segs[i].seg_index - segs[j].seg_index) == 1;
      auto fi = segment_faces(P, segs[i]);
      auto fj = segment_faces(P, segs[j]);
      for (int f : fi) {
        if (std::find(fj.begin(), fj.end(), f) == fj.end()) continue;
        SurfaceSegment a = segment_in_face(P, segs[i].seg, f);
        SurfaceSegment b = segment_in_face(P, segs[j].seg, f);
        SegmentRelation rel =
            segment_classify(a.a_uv, a.b_uv, b.a_uv, b.b_uv, P.tol);
        if (rel == SegmentRelation::disjoint) continue;
        if (rel == SegmentRelation::shared_endpoint) {
          if (consecutive) continue;
          // the shared point must be a tree node
          bool at_node = false;
          for (const auto& pt : {a.a, a.b})
            for (const auto& qt : {b.a, b.b})
              if (same_surface_point(pt, qt, P.tol.absolute_eps))
                for (const auto& n : T.nodes)
                  if (same_surface_point(pt, n.anchor, P.tol.absolute_eps))
                    at_node = true;
          if (at_node) continue;
        }
        rep.add("self-crossing",
                "edges " + std::to_string(segs[i].tree_edge) + " and " +
                    std::to_string(segs[j].tree_edge) + " " +
                    segment_relation_name(rel) + " in face " + std::to_string(f));
        break;
      }
    }
  }
  return rep;
}

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::proper_cross: return "proper-cross";
    case ViolationKind::interior_touch: return "interior-touch";
    case ViolationKind::interleaved_at_vertex: return "interleaved-at-vertex";
  }
  return "unknown";
}

namespace {

SurfacePoint cross_location(const Polyhedron& P, const SurfaceSegment& a,
                            const SurfaceSegment& b) {
  Vec2 r = a.b_uv - a.a_uv, s = b.b_uv - b.a_uv;
  double denom = r.cross(s);
  if (std::abs(denom) < 1e-18) return a.a;
  double t = (b.a_uv - a.a_uv).cross(s) / denom;
  return canonical_point(P, a.face, a.a_uv + t * r);
}

bool is_node_of(const SurfaceTree& T, const SurfacePoint& pt, double eps) {
  for (const auto& n : T.nodes)
    if (same_surface_point(pt, n.anchor, eps)) return true;
  return false;
}

}  // namespace

NonCrossReport check_noncrossing(const Polyhedron& P, const SurfaceTree& T1,
                                 const SurfaceTree& T2) {
  NonCrossReport rep;
  double eps = P.tol.absolute_eps;

  auto s1 = drawn_segments(P, T1);
  auto s2 = drawn_segments(P, T2);

  for (const auto& da : s1) {
    for (const auto& db : s2) {
      auto fa = segment_faces(P, da);
      auto fb = segment_faces(P, db);
      for (int f : fa) {
        if (std::find(fb.begin(), fb.end(), f) == fb.end()) continue;
        SurfaceSegment a = segment_in_face(P, da.seg, f);
        SurfaceSegment b = segment_in_face(P, db.seg, f);
        SegmentRelation rel =
            segment_classify(a.a_uv, a.b_uv, b.a_uv, b.b_uv, P.tol);
        if (rel == SegmentRelation::disjoint) continue;
        if (rel == SegmentRelation::shared_endpoint) {
          // legal only at a common node of both trees
          SurfacePoint shared = a.a;
          for (const auto& pt : {a.a, a.b})
            for (const auto& qt : {b.a, b.b})
              if (same_surface_point(pt, qt, eps)) shared = pt;
          if (is_node_of(T1, shared, eps) && is_node_of(T2, shared, eps))
            continue;
          rep.ok = false;
          rep.violations.push_back({ViolationKind::interior_touch, shared,
                                    da.tree_edge, db.tree_edge,
                                    "segments meet at a non-node point"});
        } else if (rel == SegmentRelation::proper_cross) {
          rep.ok = false;
          rep.violations.push_back({ViolationKind::proper_cross,
                                    cross_location(P, a, b), da.tree_edge,
                                    db.tree_edge, ""});
        } else {
          rep.ok = false;
          rep.violations.push_back({ViolationKind::interior_touch,
                                    rel == SegmentRelation::overlap ? a.a
                                                                    : cross_location(P, a, b),
                                    da.tree_edge, db.tree_edge,
                                    segment_relation_name(rel)});
        }
        break;  // one report per segment pair
      }
    }
  }

  // contiguity of each tree's edges around every shared node
  for (const auto& n1 : T1.nodes) {
    for (const auto& n2 : T2.nodes) {
      if (!same_surface_point(n1.anchor, n2.anchor, eps)) continue;
      PointStar star = build_point_star(P, n1.anchor);

      struct Dir {
        double phi;
        int tree;  // 1 or 2
      };
      std::vector<Dir> dirs;
      auto add_dirs = [&](const SurfaceTree& T, int node_id, int tag) {
        for (int e : T.incident_edges(node_id)) {
          const auto& pl = T.edges[e].polyline;
          auto segs = pl.segments(P);
          const SurfaceSegment& s =
              (T.edges[e].from == node_id) ? segs.front() : segs.back();
          Vec2 at = (T.edges[e].from == node_id) ? s.a_uv : s.b_uv;
          Vec2 to = (T.edges[e].from == node_id) ? s.b_uv : s.a_uv;
          dirs.push_back(
              {star.direction_angle(s.face, (to - at).normalized(), P.tol), tag});
        }
      };
      add_dirs(T1, n1.id, 1);
      add_dirs(T2, n2.id, 2);
      std::sort(dirs.begin(), dirs.end(),
                [](const Dir& a, const Dir& b) { return a.phi < b.phi; });
      // count cyclic blocks of T1 directions
      int blocks = 0;
      for (size_t i = 0; i < dirs.size(); ++i) {
        size_t prev = (i + dirs.size() - 1) % dirs.size();
        if (dirs[i].tree == 1 && dirs[prev].tree != 1) ++blocks;
      }
      if (blocks > 1) {
        rep.ok = false;
        rep.violations.push_back({ViolationKind::interleaved_at_vertex,
                                  n1.anchor, n1.id, n2.id,
                                  "tree edges interleave around shared node"});
      }
    }
  }
  return rep;
}

}  // namespace hingeforge
