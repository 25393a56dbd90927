#include "hingeforge/dissect.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hingeforge {

namespace {
const std::string kStage = "dissect";
constexpr double kRefNudge = 1e-7;  // angular nudge into the piece interior

// ---------------------------------------------------------------------------
// Cut complex: overlay of drawn tree segments on the mesh, with every mesh
// edge subdivided at the drawn points. Sub-polygons are the per-face cells.
// ---------------------------------------------------------------------------

struct CutComplex {
  const Polyhedron* P = nullptr;

  struct CNode {
    SurfacePoint p;
  };
  std::vector<CNode> nodes;

  enum class Kind { crease, cut };
  struct CEdge {
    int a = -1, b = -1;
    Kind kind = Kind::crease;
    int tree = 0;
    int tree_edge = -1;
    int mesh_edge = -1;  // valid for creases and on-crease cuts
    int face = -1;       // carrier face for interior cuts
  };
  std::vector<CEdge> edges;

  struct SubPoly {
    int face = -1;
    std::vector<int> walk_edge;
    std::vector<char> walk_fwd;
    std::vector<int> walk_node;  // node at the start of each step
    PlanarPolygon chart;
  };
  std::vector<SubPoly> subs;

  std::map<std::pair<int, bool>, std::pair<int, int>> side;  // directed -> sub,pos

  int node_of(const SurfacePoint& sp, double eps) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (surface_points_close(*P, nodes[i].p, sp, eps)) return int(i);
    return -1;
  }
  Vec2 node_chart(int n, int f) const {
    return chart_position(*P, nodes[n].p, f);
  }
};

double param_on_mesh_edge(const Polyhedron& P, const SurfacePoint& sp, int me) {
  if (sp.kind == SurfacePoint::Kind::vertex)
    return sp.ref == P.edges[me].a ? 0.0 : 1.0;
  if (sp.kind == SurfacePoint::Kind::edge && sp.ref == me) return sp.t;
  fail(ErrorCode::internal_error, kStage, "point not on the mesh edge");
}

CutComplex build_cut_complex(const Polyhedron& P,
                             const std::vector<const SurfaceTree*>& trees) {
  CutComplex cc;
  cc.P = &P;
  double eps = P.tol.absolute_eps;

  auto add_node = [&](const SurfacePoint& sp) {
    int i = cc.node_of(sp, eps);
    if (i >= 0) return i;
    cc.nodes.push_back({sp});
    return int(cc.nodes.size() - 1);
  };
  for (int v = 0; v < int(P.vertices.size()); ++v)
    add_node(SurfacePoint::at_vertex(v));

  struct Drawn {
    int tree;
    DrawnSegment d;
    int na, nb;
  };
  std::vector<Drawn> drawn;
  int tag = 1;
  for (const SurfaceTree* T : trees) {
    for (const auto& d : drawn_segments(P, *T))
      drawn.push_back({tag, d, add_node(d.seg.a), add_node(d.seg.b)});
    ++tag;
  }

  // subdivide every mesh edge at the nodes lying on it
  for (int me = 0; me < int(P.edges.size()); ++me) {
    std::vector<std::pair<double, int>> pts;
    for (size_t n = 0; n < cc.nodes.size(); ++n) {
      const SurfacePoint& sp = cc.nodes[n].p;
      if (sp.kind == SurfacePoint::Kind::vertex &&
          (sp.ref == P.edges[me].a || sp.ref == P.edges[me].b))
        pts.push_back({sp.ref == P.edges[me].a ? 0.0 : 1.0, int(n)});
      if (sp.kind == SurfacePoint::Kind::edge && sp.ref == me)
        pts.push_back({sp.t, int(n)});
    }
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
      CutComplex::CEdge e;
      e.a = pts[i].second;
      e.b = pts[i + 1].second;
      e.kind = CutComplex::Kind::crease;
      e.mesh_edge = me;
      cc.edges.push_back(e);
    }
  }

  // mark crease pieces covered by on-crease cut segments; add interior cuts
  for (const auto& dr : drawn) {
    if (dr.d.on_mesh_edge) {
      int me = dr.d.mesh_edge;
      double t0 = param_on_mesh_edge(P, dr.d.seg.a, me);
      double t1 = param_on_mesh_edge(P, dr.d.seg.b, me);
      if (t0 > t1) std::swap(t0, t1);
      for (auto& e : cc.edges) {
        if (e.mesh_edge != me || e.kind != CutComplex::Kind::crease) continue;
        double ea = param_on_mesh_edge(P, cc.nodes[e.a].p, me);
        double eb = param_on_mesh_edge(P, cc.nodes[e.b].p, me);
        if (ea > eb) std::swap(ea, eb);
        if (ea >= t0 - 1e-12 && eb <= t1 + 1e-12) {
          e.kind = CutComplex::Kind::cut;
          e.tree = dr.tree;
          e.tree_edge = dr.d.tree_edge;
        }
      }
    } else {
      CutComplex::CEdge e;
      e.a = dr.na;
      e.b = dr.nb;
      e.kind = CutComplex::Kind::cut;
      e.tree = dr.tree;
      e.tree_edge = dr.d.tree_edge;
      e.face = dr.d.seg.face;
      cc.edges.push_back(e);
    }
  }

  // per-face cell extraction
  for (int f = 0; f < int(P.faces.size()); ++f) {
    std::vector<int> fedges;
    for (size_t e = 0; e < cc.edges.size(); ++e) {
      const auto& ce = cc.edges[e];
      bool on_face = (ce.mesh_edge >= 0 && P.face_contains_edge(f, ce.mesh_edge)) ||
                     ce.face == f;
      if (on_face) fedges.push_back(int(e));
    }

    // rotation system in the face chart
    struct Half {
      int edge;
      bool fwd;
    };
    std::map<int, std::vector<Half>> rot;  // node -> halves
    for (int e : fedges) {
      rot[cc.edges[e].a].push_back({e, true});
      rot[cc.edges[e].b].push_back({e, false});
    }
    auto half_dir = [&](const Half& h) {
      const auto& ce = cc.edges[h.edge];
      Vec2 s = cc.node_chart(h.fwd ? ce.a : ce.b, f);
      Vec2 t = cc.node_chart(h.fwd ? ce.b : ce.a, f);
      return (t - s).normalized();
    };
    for (auto& [n, halves] : rot) {
      std::sort(halves.begin(), halves.end(), [&](const Half& x, const Half& y) {
        return half_dir(x).angle() < half_dir(y).angle();
      });
    }

    std::set<std::pair<int, bool>> visited;
    for (int e0 : fedges) {
      for (bool fwd0 : {true, false}) {
        if (visited.count({e0, fwd0})) continue;
        std::vector<Half> walk;
        Half h{e0, fwd0};
        while (!visited.count({h.edge, h.fwd})) {
          visited.insert({h.edge, h.fwd});
          walk.push_back(h);
          const auto& ce = cc.edges[h.edge];
          int v = h.fwd ? ce.b : ce.a;
          Half tw{h.edge, !h.fwd};
          const auto& halves = rot[v];
          size_t k = 0;
          while (k < halves.size() &&
                 !(halves[k].edge == tw.edge && halves[k].fwd == tw.fwd))
            ++k;
          if (k == halves.size())
            fail(ErrorCode::internal_error, kStage, "cell rotation inconsistent");
          // interior-left: clockwise predecessor of the reversed edge
          h = halves[(k + halves.size() - 1) % halves.size()];
        }
        CutComplex::SubPoly sp;
        sp.face = f;
        for (const Half& wh : walk) {
          sp.walk_edge.push_back(wh.edge);
          sp.walk_fwd.push_back(wh.fwd);
          int start = wh.fwd ? cc.edges[wh.edge].a : cc.edges[wh.edge].b;
          sp.walk_node.push_back(start);
          sp.chart.vertices.push_back(cc.node_chart(start, f));
        }
        if (polygon_signed_area(sp.chart) <= 0) continue;  // outer walk
        int id = int(cc.subs.size());
        for (size_t i = 0; i < sp.walk_edge.size(); ++i)
          cc.side[{sp.walk_edge[i], bool(sp.walk_fwd[i])}] = {id, int(i)};
        cc.subs.push_back(std::move(sp));
      }
    }
  }
  return cc;
}

// directed boundary step: (edge, fwd)
using Dir = std::pair<int, bool>;

Dir advance_walk(const CutComplex& cc, Dir he) {
  auto it = cc.side.find(he);
  if (it == cc.side.end()) {
    const auto& e = cc.edges[he.first];
    fail(ErrorCode::internal_error, kStage,
         "boundary walk left the complex (edge " + std::to_string(he.first) +
             (he.second ? " fwd" : " rev") + ", kind " +
             (e.kind == CutComplex::Kind::cut ? "cut" : "crease") +
             ", mesh_edge " + std::to_string(e.mesh_edge) + ", tree " +
             std::to_string(e.tree) + ")");
  }
  auto [sub, pos] = it->second;
  const auto& sp = cc.subs[sub];
  size_t np = (pos + 1) % sp.walk_edge.size();
  return {sp.walk_edge[np], bool(sp.walk_fwd[np])};
}

template <typename Glued>
Dir next_boundary(const CutComplex& cc, Dir he, Glued glued) {
  Dir cur = advance_walk(cc, he);
  size_t guard = 0;
  while (glued(cur.first)) {
    cur = advance_walk(cc, {cur.first, !cur.second});
    if (++guard > cc.edges.size())
      fail(ErrorCode::internal_error, kStage, "boundary walk does not close");
  }
  return cur;
}

// BFS development of a set of sub-polygons glued across the given edges.
template <typename Glued>
std::map<int, Isometry2> develop_subs(const CutComplex& cc, int seed,
                                      Glued glued) {
  const Polyhedron& P = *cc.P;
  std::map<int, Isometry2> place;
  place[seed] = Isometry2::identity();
  std::vector<int> queue{seed};
  while (!queue.empty()) {
    int s = queue.back();
    queue.pop_back();
    const auto& sub = cc.subs[s];
    for (size_t i = 0; i < sub.walk_edge.size(); ++i) {
      int e = sub.walk_edge[i];
      if (!glued(e)) continue;
      auto other = cc.side.find({e, !bool(sub.walk_fwd[i])});
      if (other == cc.side.end())
        fail(ErrorCode::internal_error, kStage, "glued edge without twin side");
      int t = other->second.first;
      if (place.count(t)) continue;
      const auto& tsub = cc.subs[t];
      Isometry2 transfer =
          (tsub.face == sub.face)
              ? Isometry2::identity()
              : edge_transfer(P, cc.edges[e].mesh_edge, tsub.face, sub.face);
      place[t] = place[s].compose(transfer);
      queue.push_back(t);
    }
  }
  return place;
}

struct BoundaryWalk {
  std::vector<Dir> steps;
  std::vector<int> start_nodes;
};

template <typename Glued>
BoundaryWalk trace_boundary(const CutComplex& cc, Dir start, Glued glued) {
  BoundaryWalk bw;
  Dir cur = start;
  size_t guard = 0, limit = 4 * cc.edges.size() + 8;
  do {
    bw.steps.push_back(cur);
    bw.start_nodes.push_back(cur.second ? cc.edges[cur.first].a
                                        : cc.edges[cur.first].b);
    cur = next_boundary(cc, cur, glued);
    if (++guard > limit)
      fail(ErrorCode::internal_error, kStage, "boundary walk does not return");
  } while (cur != start);
  return bw;
}

}  // namespace

// ---------------------------------------------------------------------------
// unfolding
// ---------------------------------------------------------------------------

Net unfold_net(const Polyhedron& P, const SurfaceTree& T,
               const SurfaceTree* other) {
  ValidationReport vr = validate_tree(P, T);
  if (!vr.ok)
    fail(ErrorCode::invalid_tree, "unfold",
         "cut tree fails validation (" + vr.issues.front().code + ")");

  CutComplex cc = build_cut_complex(P, {&T});
  auto glued = [&](int e) { return cc.edges[e].kind == CutComplex::Kind::crease; };

  auto place = develop_subs(cc, 0, glued);
  if (place.size() != cc.subs.size())
    fail(ErrorCode::internal_error, "unfold", "cut surface is disconnected");

  Net net;
  for (size_t s = 0; s < cc.subs.size(); ++s) {
    Net::Patch patch;
    patch.face = cc.subs[s].face;
    patch.region = cc.subs[s].chart;
    patch.placement = place.at(int(s));
    net.patches.push_back(patch);
  }

  // boundary walk along the cut edges
  int first_cut = -1;
  for (size_t e = 0; e < cc.edges.size(); ++e)
    if (!glued(int(e))) { first_cut = int(e); break; }
  if (first_cut < 0)
    fail(ErrorCode::invalid_tree, "unfold", "cut tree has no edges");
  BoundaryWalk bw = trace_boundary(cc, {first_cut, true}, glued);

  size_t cut_sides = 0;
  for (size_t e = 0; e < cc.edges.size(); ++e)
    if (!glued(int(e))) cut_sides += 2;
  if (bw.steps.size() != cut_sides)
    fail(ErrorCode::not_a_net, "unfold",
         "cut boundary splits into several loops");

  for (size_t i = 0; i < bw.steps.size(); ++i) {
    auto [sub, pos] = cc.side.at(bw.steps[i]);
    Vec2 pt = place.at(sub)(cc.subs[sub].chart.vertices[pos]);
    net.boundary.vertices.push_back(pt);
    const SurfacePoint& sp = cc.nodes[bw.start_nodes[i]].p;
    if (sp.kind == SurfacePoint::Kind::vertex)
      net.vertex_images.push_back({sp.ref, pt});
  }

  // overlap checks
  if (!polygon_is_simple(net.boundary, P.tol))
    fail(ErrorCode::not_a_net, "unfold", "net boundary is not simple");
  std::vector<PlanarPolygon> placed;
  for (const auto& patch : net.patches) {
    PlanarPolygon q;
    for (Vec2 v : patch.region.vertices) q.vertices.push_back(patch.placement(v));
    placed.push_back(q);
  }
  for (size_t i = 0; i < placed.size(); ++i)
    for (size_t j = i + 1; j < placed.size(); ++j)
      if (polygons_overlap(placed[i], placed[j], P.tol))
        fail(ErrorCode::not_a_net, "unfold", "developed faces overlap");

  double area = 0;
  for (const auto& q : placed) area += polygon_signed_area(q);
  if (std::abs(area - P.total_area) > 1e-9 * P.total_area)
    fail(ErrorCode::internal_error, "unfold", "net area mismatch");

  for (const auto& te : T.edges) net.cut_length += te.polyline.length(P);

  if (other) {
    for (const auto& te : other->edges) {
      std::vector<Vec2> img;
      auto segs = te.polyline.segments(P);
      for (size_t i = 0; i < segs.size(); ++i) {
        int f = segs[i].face;
        Vec2 mid = (segs[i].a_uv + segs[i].b_uv) * 0.5;
        int found = -1;
        for (size_t s = 0; s < cc.subs.size() && found < 0; ++s) {
          if (cc.subs[s].face != f) continue;
          if (point_in_polygon(mid, cc.subs[s].chart, P.tol) ||
              point_on_polygon_boundary(mid, cc.subs[s].chart, P.tol))
            found = int(s);
        }
        if (found < 0)
          fail(ErrorCode::internal_error, "unfold",
               "failed to locate the other tree inside the net");
        const Isometry2& m = place.at(found);
        if (img.empty()) img.push_back(m(segs[i].a_uv));
        img.push_back(m(segs[i].b_uv));
      }
      net.tree_image.push_back(img);
    }
  }
  return net;
}

// ---------------------------------------------------------------------------
// dissection assembly
// ---------------------------------------------------------------------------

Vec2 HingedDissection::hinge_point_local(int h, bool on_next) const {
  const Hinge& hg = hinges[h];
  if (on_next) return pieces[hg.piece_next].vertices[hg.corner_next];
  return pieces[hg.piece_prev].vertices[hg.corner_prev];
}

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

int locate_sub(const CutComplex& cc, int face, Vec2 pt, const Tolerance& tol) {
  for (size_t s = 0; s < cc.subs.size(); ++s) {
    if (cc.subs[s].face != face) continue;
    if (point_in_polygon(pt, cc.subs[s].chart, tol)) return int(s);
  }
  for (size_t s = 0; s < cc.subs.size(); ++s) {
    if (cc.subs[s].face != face) continue;
    if (point_on_polygon_boundary(pt, cc.subs[s].chart, tol)) return int(s);
  }
  fail(ErrorCode::internal_error, kStage, "point not inside any cell");
}

}  // namespace

BuiltDissection build_dissection(const Polyhedron& P, const SurfaceTree& T_A,
                                 const SurfaceTree& T_B) {
  SeparatingCycle cyc = build_separating_cycle(P, T_A, T_B);
  UnionGraph G = build_union_graph(P, T_A, T_B);
  ForcedCycle fc = forced_cycle(G);
  if (!cyclic_equal(cyc.vertex_order, fc.vertex_order, false))
    fail(ErrorCode::internal_error, kStage,
         "separating cycle and forced order disagree");
  for (int n : fc.junction_nodes)
    if (G.nodes[n].vertex_id < 0)
      fail(ErrorCode::invalid_tree, kStage,
           "trees share a non-vertex node; unsupported as a hinge");

  BuiltDissection out;
  out.net_a = unfold_net(P, T_A, &T_B);
  out.net_b = unfold_net(P, T_B, &T_A);

  CutComplex cc = build_cut_complex(P, {&T_A, &T_B});
  auto glued = [&](int e) { return cc.edges[e].kind == CutComplex::Kind::crease; };

  // merge cells across creases into pieces
  DSU dsu(int(cc.subs.size()));
  for (size_t e = 0; e < cc.edges.size(); ++e) {
    if (!glued(int(e))) continue;
    auto l = cc.side.find({int(e), true});
    auto r = cc.side.find({int(e), false});
    if (l == cc.side.end() || r == cc.side.end())
      fail(ErrorCode::internal_error, kStage, "crease piece without two sides");
    dsu.unite(l->second.first, r->second.first);
  }

  // chain order: map each forced face to its piece (component root)
  size_t n = fc.junction_nodes.size();
  std::vector<int> piece_root(n, -1);
  std::map<int, int> root_to_chain;
  for (size_t k = 0; k < n; ++k) {
    const auto& walk = G.face_walks[fc.faces[k]].half_edges;
    UnionGraph::HalfEdge h = walk.front();
    int f = G.left_face(h);
    SurfaceSegment seg = segment_in_face(P, G.edges[h.edge].seg, f);
    Vec2 a = h.forward ? seg.a_uv : seg.b_uv;
    Vec2 b = h.forward ? seg.b_uv : seg.a_uv;
    Vec2 mid = (a + b) * 0.5;
    Vec2 inward = (b - a).normalized().perp();
    Vec2 probe = mid + (0.5 * cyc.clearance.epsilon) * inward;
    int root = dsu.find(locate_sub(cc, f, probe, P.tol));
    piece_root[k] = root;
    if (root_to_chain.count(root))
      fail(ErrorCode::internal_error, kStage, "two chain slots share a piece");
    root_to_chain[root] = int(k);
  }
  std::set<int> all_roots;
  for (size_t s = 0; s < cc.subs.size(); ++s) all_roots.insert(dsu.find(int(s)));
  if (all_roots.size() != n)
    fail(ErrorCode::internal_error, kStage,
         "piece count differs from the forced cycle length");

  // local development per piece + boundary walks
  std::vector<std::map<int, Isometry2>> local(n);
  std::vector<BoundaryWalk> walks(n);
  std::vector<std::vector<Vec2>> polys(n);
  for (size_t k = 0; k < n; ++k) {
    int seed = -1;
    for (size_t s = 0; s < cc.subs.size() && seed < 0; ++s)
      if (dsu.find(int(s)) == piece_root[k]) seed = int(s);
    auto piece_glued = [&](int e) {
      if (!glued(e)) return false;
      auto it = cc.side.find({e, true});
      return dsu.find(it->second.first) == piece_root[k];
    };
    local[k] = develop_subs(cc, seed, piece_glued);

    // boundary: start from a cut side bordering this piece
    Dir start{-1, true};
    for (size_t e = 0; e < cc.edges.size() && start.first < 0; ++e) {
      if (glued(int(e))) continue;
      for (bool fwd : {true, false}) {
        auto it = cc.side.find({int(e), fwd});
        if (it != cc.side.end() && dsu.find(it->second.first) == piece_root[k]) {
          start = {int(e), fwd};
          break;
        }
      }
    }
    if (start.first < 0)
      fail(ErrorCode::internal_error, kStage, "piece without cut boundary");
    walks[k] = trace_boundary(cc, start, piece_glued);
    for (size_t i = 0; i < walks[k].steps.size(); ++i) {
      auto [sub, pos] = cc.side.at(walks[k].steps[i]);
      polys[k].push_back(local[k].at(sub)(cc.subs[sub].chart.vertices[pos]));
    }
  }

  // hinge records; hinge k sits at junction k between pieces k-1 and k
  HingedDissection d;
  d.pieces.resize(n);
  d.hinges.resize(n);
  out.edge_tree.resize(n);
  for (size_t k = 0; k < n; ++k) {
    d.pieces[k].vertices = polys[k];
    for (auto st : walks[k].steps)
      out.edge_tree[k].push_back(cc.edges[st.first].tree);
  }
  auto corner_at = [&](size_t k, int vertex_id) {
    int found = -1;
    for (size_t i = 0; i < walks[k].start_nodes.size(); ++i) {
      const SurfacePoint& sp = cc.nodes[walks[k].start_nodes[i]].p;
      if (sp.kind == SurfacePoint::Kind::vertex && sp.ref == vertex_id) {
        if (found >= 0)
          fail(ErrorCode::internal_error, kStage,
               "piece touches its hinge vertex twice");
        found = int(i);
      }
    }
    if (found < 0)
      fail(ErrorCode::internal_error, kStage, "piece misses its hinge vertex");
    return found;
  };
  for (size_t k = 0; k < n; ++k) {
    int vid = G.nodes[fc.junction_nodes[k]].vertex_id;
    auto& hg = d.hinges[k];
    hg.vertex = vid;
    hg.piece_prev = int((k + n - 1) % n);
    hg.piece_next = int(k);
    hg.corner_prev = corner_at(hg.piece_prev, vid);
    hg.corner_next = corner_at(hg.piece_next, vid);
    hg.active = true;
    out.hinge_cone_angles.push_back(P.cone_angles[vid]);
  }

  // placements into the two nets, via any cell of the piece
  auto net_placement = [&](const Net& net, size_t k) {
    int seed = -1;
    for (size_t s = 0; s < cc.subs.size() && seed < 0; ++s)
      if (dsu.find(int(s)) == piece_root[k]) seed = int(s);
    Vec2 inner = polygon_interior_point(cc.subs[seed].chart, P.tol);
    for (const auto& patch : net.patches) {
      if (patch.face != cc.subs[seed].face) continue;
      if (point_in_polygon(inner, patch.region, P.tol))
        return patch.placement.compose(local[k].at(seed).inverse());
    }
    fail(ErrorCode::internal_error, kStage, "piece cell missing from the net");
  };
  for (size_t k = 0; k < n; ++k) {
    d.placement_a.push_back(net_placement(out.net_a, k));
    d.placement_b.push_back(net_placement(out.net_b, k));
  }

  // canonical local coordinates: entry hinge at the origin, following corner
  // on the positive x axis
  for (size_t k = 0; k < n; ++k) {
    auto& poly = d.pieces[k].vertices;
    int c = d.hinges[k].corner_next;
    Vec2 origin = poly[c];
    Vec2 next = poly[(c + 1) % poly.size()];
    Isometry2 canon = Isometry2::map_segment(
        origin, next, {0, 0}, {dist(origin, next), 0.0});
    for (auto& v : poly) v = canon(v);
    Isometry2 inv = canon.inverse();
    d.placement_a[k] = d.placement_a[k].compose(inv);
    d.placement_b[k] = d.placement_b[k].compose(inv);
  }

  // chain validity: consecutive pieces meet exactly at the hinge point
  for (size_t k = 0; k < n; ++k) {
    Vec2 prev_pt = d.pieces[d.hinges[k].piece_prev].vertices[d.hinges[k].corner_prev];
    Vec2 next_pt = d.pieces[d.hinges[k].piece_next].vertices[d.hinges[k].corner_next];
    for (bool config_a : {true, false}) {
      const auto& pl = config_a ? d.placement_a : d.placement_b;
      Vec2 a = pl[d.hinges[k].piece_prev](prev_pt);
      Vec2 b = pl[d.hinges[k].piece_next](next_pt);
      if (dist(a, b) > 64 * P.tol.absolute_eps)
        fail(ErrorCode::internal_error, kStage,
             "hinge points do not coincide under a placement");
    }
  }

  out.d = std::move(d);
  return out;
}

// ---------------------------------------------------------------------------
// angles and classification
// ---------------------------------------------------------------------------

PlanarPolygon placed_piece(const HingedDissection& d, int piece, bool config_a) {
  const Isometry2& m = config_a ? d.placement_a[piece] : d.placement_b[piece];
  PlanarPolygon out;
  for (Vec2 v : d.pieces[piece].vertices) out.vertices.push_back(m(v));
  return out;
}

std::vector<std::vector<EdgeStatus>> edge_statuses(const HingedDissection& d,
                                                   bool config_a,
                                                   const Tolerance& tol) {
  struct PEdge {
    int piece, idx;
    Vec2 a, b;
  };
  std::vector<PEdge> all;
  for (size_t p = 0; p < d.pieces.size(); ++p) {
    PlanarPolygon poly = placed_piece(d, int(p), config_a);
    size_t m = poly.vertices.size();
    for (size_t i = 0; i < m; ++i)
      all.push_back({int(p), int(i), poly.vertices[i], poly.vertices[(i + 1) % m]});
  }
  std::vector<std::vector<EdgeStatus>> st(d.pieces.size());
  for (size_t p = 0; p < d.pieces.size(); ++p)
    st[p].assign(d.pieces[p].vertices.size(), EdgeStatus::boundary);
  double eps = 64 * tol.absolute_eps;
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j) continue;
      if (dist(all[i].a, all[j].b) <= eps && dist(all[i].b, all[j].a) <= eps) {
        st[all[i].piece][all[i].idx] = EdgeStatus::interior;
        break;
      }
    }
  }
  return st;
}

namespace {

// reference ray of a piece at a hinge corner: along the boundary edge that is
// exposed in configuration A, nudged into the piece interior
Vec2 reference_ray(const HingedDissection& d,
                   const std::vector<std::vector<EdgeStatus>>& status_a,
                   int piece, int corner) {
  const auto& poly = d.pieces[piece].vertices;
  int m = int(poly.size());
  int out_edge = corner;
  int in_edge = (corner + m - 1) % m;
  bool out_boundary = status_a[piece][out_edge] == EdgeStatus::boundary;
  bool in_boundary = status_a[piece][in_edge] == EdgeStatus::boundary;
  bool use_out = out_boundary || !in_boundary;
  if (use_out) {
    Vec2 dir = (poly[(corner + 1) % m] - poly[corner]).normalized();
    return dir.rotated(kRefNudge);
  }
  Vec2 dir = (poly[(corner + m - 1) % m] - poly[corner]).normalized();
  return dir.rotated(-kRefNudge);
}

}  // namespace

HingeAngles hinge_angles(const HingedDissection& d, const Tolerance& tol) {
  HingeAngles ha;
  auto status_a = edge_statuses(d, true, tol);
  for (size_t h = 0; h < d.hinges.size(); ++h) {
    const auto& hg = d.hinges[h];
    Vec2 ray_prev =
        reference_ray(d, status_a, hg.piece_prev, hg.corner_prev);
    Vec2 ray_next =
        reference_ray(d, status_a, hg.piece_next, hg.corner_next);
    HingeAngles::Entry e;
    auto measure = [&](const std::vector<Isometry2>& pl) {
      Vec2 rp = pl[hg.piece_prev].apply_dir(ray_prev);
      Vec2 rn = pl[hg.piece_next].apply_dir(ray_next);
      return ccw_angle_between(rn.angle(), rp.angle(), tol);
    };
    e.alpha = measure(d.placement_a);
    e.alpha_prime = measure(d.placement_b);
    e.beta = kTwoPi - e.alpha_prime;
    ha.entries.push_back(e);
  }
  return ha;
}

Classification classify(const HingedDissection& d, const HingeAngles& angles,
                        const Tolerance& tol) {
  Classification c;
  auto sa = edge_statuses(d, true, tol);
  auto sb = edge_statuses(d, false, tol);

  // reversible: every edge flips between boundary and interior, and every
  // hinge point lies on the outer boundary in both configurations
  c.reversible = true;
  for (size_t p = 0; p < d.pieces.size() && c.reversible; ++p) {
    for (size_t e = 0; e < sa[p].size(); ++e) {
      if (sa[p][e] == sb[p][e]) {
        c.reversible = false;
        c.witness_reversible = "piece " + std::to_string(p) + " edge " +
                               std::to_string(e) +
                               (sa[p][e] == EdgeStatus::boundary
                                    ? " is boundary in both configurations"
                                    : " is interior in both configurations");
        break;
      }
    }
  }
  if (c.reversible) {
    for (size_t h = 0; h < d.hinges.size(); ++h) {
      const auto& hg = d.hinges[h];
      for (auto [piece, corner] :
           {std::pair{hg.piece_prev, hg.corner_prev},
            std::pair{hg.piece_next, hg.corner_next}}) {
        int m = int(d.pieces[piece].vertices.size());
        for (const auto* st : {&sa, &sb}) {
          bool on_boundary =
              (*st)[piece][corner] == EdgeStatus::boundary ||
              (*st)[piece][(corner + m - 1) % m] == EdgeStatus::boundary;
          if (!on_boundary) {
            c.reversible = false;
            c.witness_reversible =
                "hinge " + std::to_string(h) + " leaves the outer boundary";
          }
        }
      }
    }
  }

  c.monotone = true;
  for (size_t h = 0; h < angles.entries.size(); ++h) {
    if (!d.hinges[h].active) continue;
    if (angles.entries[h].alpha_prime <
        angles.entries[h].alpha - tol.angle_eps - 4 * kRefNudge) {
      c.monotone = false;
      c.witness_monotone = "hinge " + std::to_string(h) + " turns back";
      break;
    }
  }

  // simple: each hinge point keeps clear of every non-adjacent piece
  c.simple = true;
  double eps = 64 * tol.absolute_eps;
  for (size_t h = 0; h < d.hinges.size() && c.simple; ++h) {
    const auto& hg = d.hinges[h];
    if (!hg.active) continue;
    for (bool config_a : {true, false}) {
      const auto& pl = config_a ? d.placement_a : d.placement_b;
      Vec2 pt = pl[hg.piece_next](d.hinge_point_local(int(h), true));
      for (size_t p = 0; p < d.pieces.size(); ++p) {
        if (int(p) == hg.piece_prev || int(p) == hg.piece_next) continue;
        PlanarPolygon poly = placed_piece(d, int(p), config_a);
        double dmin = std::numeric_limits<double>::infinity();
        size_t m = poly.vertices.size();
        for (size_t i = 0; i < m; ++i)
          dmin = std::min(dmin, point_segment_distance(
                                    pt, poly.vertices[i],
                                    poly.vertices[(i + 1) % m]));
        if (point_in_polygon(pt, poly, tol) || dmin <= eps) {
          c.simple = false;
          c.witness_simple = "hinge " + std::to_string(h) + " touches piece " +
                             std::to_string(p) +
                             (config_a ? " in configuration A"
                                       : " in configuration B");
          break;
        }
      }
      if (!c.simple) break;
    }
  }

  if (c.simple && !c.monotone)
    fail(ErrorCode::internal_error, kStage,
         "classification violates simple-implies-monotone");
  return c;
}

}  // namespace hingeforge
