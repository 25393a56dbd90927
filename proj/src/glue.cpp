#include "hingeforge/glue.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hingeforge {

namespace {
const std::string kStage = "glue";

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

struct PlacedEdge {
  int piece, idx;
  Vec2 a, b;
};

std::vector<PlacedEdge> placed_edges(const HingedDissection& d, bool config_a) {
  std::vector<PlacedEdge> out;
  for (size_t p = 0; p < d.pieces.size(); ++p) {
    PlanarPolygon poly = placed_piece(d, int(p), config_a);
    size_t m = poly.vertices.size();
    for (size_t i = 0; i < m; ++i)
      out.push_back({int(p), int(i), poly.vertices[i], poly.vertices[(i + 1) % m]});
  }
  return out;
}

double corner_angle(const PlanarPolygon& poly, int i) {
  int m = int(poly.vertices.size());
  Vec2 at = poly.vertices[i];
  Vec2 nxt = poly.vertices[(i + 1) % m];
  Vec2 prv = poly.vertices[(i + m - 1) % m];
  double a = std::fmod((prv - at).angle() - (nxt - at).angle(), kTwoPi);
  if (a < 0) a += kTwoPi;
  return a;  // interior angle of a CCW polygon
}

}  // namespace

GluedMetric glue_metric(const HingedDissection& d, const Tolerance& tol) {
  double eps = 64 * tol.absolute_eps;
  size_t total_corners = 0;
  std::vector<size_t> base(d.pieces.size());
  for (size_t p = 0; p < d.pieces.size(); ++p) {
    base[p] = total_corners;
    total_corners += d.pieces[p].vertices.size();
  }
  auto cid = [&](int piece, int corner) { return int(base[piece] + corner); };

  // per-edge partner in each configuration
  struct Match {
    int piece = -1, idx = -1;
  };
  auto match_edges = [&](bool config_a) {
    auto edges = placed_edges(d, config_a);
    std::vector<std::vector<Match>> m(d.pieces.size());
    for (size_t p = 0; p < d.pieces.size(); ++p)
      m[p].assign(d.pieces[p].vertices.size(), Match{});
    for (size_t i = 0; i < edges.size(); ++i) {
      for (size_t j = 0; j < edges.size(); ++j) {
        if (i == j) continue;
        if (dist(edges[i].a, edges[j].b) <= eps &&
            dist(edges[i].b, edges[j].a) <= eps) {
          if (std::abs(dist(edges[i].a, edges[i].b) -
                       dist(edges[j].a, edges[j].b)) > eps)
            fail(ErrorCode::glue_mismatch, kStage,
                 "glued partner edges differ in length");
          m[edges[i].piece][edges[i].idx] = {edges[j].piece, edges[j].idx};
          break;
        }
      }
    }
    return m;
  };
  auto ma = match_edges(true);
  auto mb = match_edges(false);

  // classify every edge: matched in one configuration (reversible gluing),
  // matched identically in both (shared interior of an identity fold), or
  // unmatched in both (a fold edge)
  size_t folds = 0, both = 0, single = 0, total = 0;
  for (size_t p = 0; p < d.pieces.size(); ++p) {
    for (size_t e = 0; e < ma[p].size(); ++e) {
      ++total;
      bool ia = ma[p][e].piece >= 0, ib = mb[p][e].piece >= 0;
      if (ia && ib) {
        if (ma[p][e].piece != mb[p][e].piece || ma[p][e].idx != mb[p][e].idx)
          fail(ErrorCode::glue_mismatch, kStage,
               "edge glued to different partners in the two configurations");
        ++both;
      } else if (ia || ib) {
        ++single;
      } else {
        ++folds;
      }
    }
  }
  if (folds > 0 && single > 0)
    fail(ErrorCode::glue_mismatch, kStage,
         "piece boundary edge left unglued");

  GluedMetric metric;
  metric.doubled = folds > 0;
  if (!metric.doubled && single != total)
    fail(ErrorCode::glue_mismatch, kStage,
         "edges glued in both configurations without an identity fold");

  if (!metric.doubled) {
    DSU dsu{int(total_corners)};
    for (size_t p = 0; p < d.pieces.size(); ++p) {
      size_t m = d.pieces[p].vertices.size();
      for (size_t e = 0; e < m; ++e) {
        const Match& pm = ma[p][e].piece >= 0 ? ma[p][e] : mb[p][e];
        if (pm.piece < 0)
          fail(ErrorCode::glue_mismatch, kStage,
               "piece boundary edge left unglued");
        size_t pm_m = d.pieces[pm.piece].vertices.size();
        // edge e runs corner e -> e+1; its partner runs opposite
        dsu.unite(cid(int(p), int(e)),
                  dsu.find(cid(pm.piece, int((pm.idx + 1) % pm_m))));
        dsu.unite(cid(int(p), int((e + 1) % m)), cid(pm.piece, pm.idx));
      }
    }
    std::map<int, GluedMetric::VertexClass> classes;
    for (size_t p = 0; p < d.pieces.size(); ++p)
      for (size_t c = 0; c < d.pieces[p].vertices.size(); ++c) {
        auto& cl = classes[dsu.find(cid(int(p), int(c)))];
        cl.corners.push_back({int(p), int(c)});
        cl.total_angle += corner_angle(d.pieces[p], int(c));
      }
    for (auto& [root, cl] : classes) metric.classes.push_back(cl);
  } else {
    // identity fold: two copies of each piece, boundary edges glued
    // front-to-back; interior gluings (if any) repeat on both copies
    DSU dsu{int(2 * total_corners)};
    auto cid2 = [&](int piece, int corner, int side) {
      return int(side * total_corners + base[piece] + corner);
    };
    for (size_t p = 0; p < d.pieces.size(); ++p) {
      size_t m = d.pieces[p].vertices.size();
      for (size_t e = 0; e < m; ++e) {
        bool ia = ma[p][e].piece >= 0, ib = mb[p][e].piece >= 0;
        if (!ia && !ib) {
          for (int corner : {int(e), int((e + 1) % m)})
            dsu.unite(cid2(int(p), corner, 0), cid2(int(p), corner, 1));
        } else {
          const Match& pm = ia ? ma[p][e] : mb[p][e];
          size_t pm_m = d.pieces[pm.piece].vertices.size();
          for (int side : {0, 1}) {
            dsu.unite(cid2(int(p), int(e), side),
                      cid2(pm.piece, int((pm.idx + 1) % pm_m), side));
            dsu.unite(cid2(int(p), int((e + 1) % m), side),
                      cid2(pm.piece, pm.idx, side));
          }
        }
      }
    }
    std::map<int, GluedMetric::VertexClass> classes;
    for (int side : {0, 1})
      for (size_t p = 0; p < d.pieces.size(); ++p)
        for (size_t c = 0; c < d.pieces[p].vertices.size(); ++c) {
          auto& cl = classes[dsu.find(cid2(int(p), int(c), side))];
          cl.corners.push_back({int(p), int(c)});
          cl.total_angle += corner_angle(d.pieces[p], int(c));
        }
    for (auto& [root, cl] : classes) metric.classes.push_back(cl);
  }

  // attach hinge decompositions
  if (!d.hinges.empty() && !metric.doubled) {
    HingeAngles ha = hinge_angles(d, tol);
    for (size_t h = 0; h < d.hinges.size(); ++h) {
      const auto& hg = d.hinges[h];
      for (size_t k = 0; k < metric.classes.size(); ++k) {
        auto& cl = metric.classes[k];
        bool has = std::find(cl.corners.begin(), cl.corners.end(),
                             std::pair{hg.piece_next, hg.corner_next}) !=
                   cl.corners.end();
        if (has) {
          cl.hinge = int(h);
          cl.hinge_alpha = ha.entries[h].alpha;
          cl.hinge_alpha_prime = ha.entries[h].alpha_prime;
        }
      }
    }
  }
  return metric;
}

AlexandrovReport check_alexandrov(const GluedMetric& m, const Tolerance& tol) {
  AlexandrovReport rep;
  rep.convex = true;
  for (size_t k = 0; k < m.classes.size(); ++k) {
    if (m.classes[k].total_angle > kTwoPi + tol.angle_eps) {
      rep.convex = false;
      rep.witnesses.push_back(int(k));
    }
  }
  return rep;
}

double gauss_bonnet_residual(const GluedMetric& m) {
  double defect = 0;
  for (const auto& cl : m.classes) defect += kTwoPi - cl.total_angle;
  return defect - 4 * kPi;
}

RoundtripReport roundtrip_check(const Polyhedron& P, const SurfaceTree& T_A,
                                const SurfaceTree& T_B) {
  RoundtripReport rep;
  BuiltDissection bd = build_dissection(P, T_A, T_B);
  GluedMetric m = glue_metric(bd.d, P.tol);
  rep.vertex_classes = m.classes.size();
  rep.gauss_bonnet = gauss_bonnet_residual(m);
  rep.alexandrov_convex = check_alexandrov(m, P.tol).convex;

  // hinge classes carry the polyhedron vertices; every other corner class
  // must be a flat point of the glued metric
  std::vector<char> seen(P.vertices.size(), 0);
  size_t hinge_classes = 0;
  for (const auto& cl : m.classes) {
    if (cl.hinge < 0) {
      if (std::abs(cl.total_angle - kTwoPi) > 1e-9) {
        rep.failure = "non-hinge class is not flat";
        return rep;
      }
      continue;
    }
    ++hinge_classes;
    int v = bd.d.hinges[cl.hinge].vertex;
    if (v < 0 || v >= int(P.vertices.size()) || seen[v]) {
      rep.failure = "vertex classes do not biject with vertices";
      return rep;
    }
    seen[v] = 1;
    rep.max_cone_angle_error = std::max(
        rep.max_cone_angle_error, std::abs(cl.total_angle - P.cone_angles[v]));
  }
  rep.vertex_classes = hinge_classes;
  if (hinge_classes != P.vertices.size()) {
    rep.failure = "vertex class count differs from vertex count";
    return rep;
  }
  if (rep.max_cone_angle_error > 1e-9) {
    rep.failure = "cone angles disagree";
    return rep;
  }
  if (std::abs(rep.gauss_bonnet) > 1e-6) {
    rep.failure = "gauss-bonnet residual too large";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace hingeforge
