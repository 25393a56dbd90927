#include "hingeforge/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace hingeforge {

namespace {
const std::string kStage = "io";

std::string format_double(double x) {
  if (!std::isfinite(x))
    fail(ErrorCode::internal_error, kStage, "non-finite number in output");
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_json_rec(std::ostream& os, const Json& j, int depth) {
  std::string pad(2 * depth, ' ');
  std::string pad1(2 * (depth + 1), ' ');
  if (j.is_object()) {
    if (j.empty()) { os << "{}"; return; }
    os << "{\n";
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad1 << '"' << it.key() << "\": ";
      write_json_rec(os, it.value(), depth + 1);
      if (i + 1 < j.size()) os << ',';
      os << '\n';
    }
    os << pad << '}';
  } else if (j.is_array()) {
    if (j.empty()) { os << "[]"; return; }
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& v) {
      return v.is_primitive();
    });
    if (scalars) {
      os << '[';
      for (size_t i = 0; i < j.size(); ++i) {
        write_json_rec(os, j[i], depth);
        if (i + 1 < j.size()) os << ", ";
      }
      os << ']';
    } else {
      os << "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        os << pad1;
        write_json_rec(os, j[i], depth + 1);
        if (i + 1 < j.size()) os << ',';
        os << '\n';
      }
      os << pad << ']';
    }
  } else if (j.is_number_float()) {
    os << format_double(j.get<double>());
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string json_to_string(const Json& j) {
  std::ostringstream os;
  write_json_rec(os, j, 0);
  os << '\n';
  return os.str();
}

double round12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::atof(buf);
}

// --- OFF ---

Polyhedron parse_off(const std::string& text, Tolerance base_tol) {
  std::istringstream in(text);
  std::string tok;
  auto next = [&]() -> std::string {
    std::string t;
    while (in >> t) {
      if (t[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return t;
    }
    fail(ErrorCode::format_error, kStage, "unexpected end of OFF input");
  };
  if (next() != "OFF")
    fail(ErrorCode::format_error, kStage, "missing OFF header");
  auto to_int = [&](const std::string& s) {
    try {
      size_t pos = 0;
      int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (...) {
      fail(ErrorCode::format_error, kStage, "bad integer '" + s + "'");
    }
  };
  auto to_double = [&](const std::string& s) {
    try {
      size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (...) {
      fail(ErrorCode::format_error, kStage, "bad number '" + s + "'");
    }
  };
  int nv = to_int(next()), nf = to_int(next());
  to_int(next());  // edge count, ignored
  if (nv <= 0 || nf <= 0)
    fail(ErrorCode::format_error, kStage, "non-positive OFF counts");
  std::vector<Vec3> vertices(nv);
  for (int i = 0; i < nv; ++i) {
    vertices[i].x = to_double(next());
    vertices[i].y = to_double(next());
    vertices[i].z = to_double(next());
  }
  std::vector<std::vector<int>> faces(nf);
  for (int f = 0; f < nf; ++f) {
    int k = to_int(next());
    if (k < 3) fail(ErrorCode::format_error, kStage, "face with fewer than 3 vertices");
    faces[f].resize(k);
    for (int i = 0; i < k; ++i) faces[f][i] = to_int(next());
  }
  return build_polyhedron(std::move(vertices), std::move(faces), base_tol);
}

std::string write_off(const Polyhedron& P) {
  std::ostringstream os;
  os << "OFF\n"
     << P.vertices.size() << ' ' << P.faces.size() << ' ' << P.edges.size()
     << '\n';
  for (const Vec3& v : P.vertices)
    os << format_double(v.x) << ' ' << format_double(v.y) << ' '
       << format_double(v.z) << '\n';
  for (const auto& f : P.faces) {
    os << f.size();
    for (int v : f) os << ' ' << v;
    os << '\n';
  }
  return os.str();
}

// --- anchors ---

Json anchor_to_json(const Polyhedron& P, const SurfacePoint& sp) {
  Json j;
  switch (sp.kind) {
    case SurfacePoint::Kind::vertex:
      j["kind"] = "vertex";
      j["ref"] = sp.ref;
      j["params"] = Json::array();
      break;
    case SurfacePoint::Kind::edge:
      j["kind"] = "edge";
      j["ref"] = sp.ref;
      j["params"] = Json::array({round12(sp.t)});
      break;
    case SurfacePoint::Kind::face: {
      j["kind"] = "face";
      j["ref"] = sp.ref;
      // fan-triangle barycentric weights over the face cycle
      const auto& chart = P.charts[sp.ref];
      size_t m = chart.size();
      std::vector<double> w(m, 0.0);
      bool found = false;
      for (size_t i = 1; i + 1 < m && !found; ++i) {
        Vec2 a = chart[0], b = chart[i], c = chart[i + 1];
        double det = (b - a).cross(c - a);
        if (std::abs(det) < 1e-15) continue;
        double wb = (sp.uv - a).cross(c - a) / det;
        double wc = (b - a).cross(sp.uv - a) / det;
        double wa = 1.0 - wb - wc;
        if (wa >= -1e-9 && wb >= -1e-9 && wc >= -1e-9) {
          w[0] = wa;
          w[i] = wb;
          w[i + 1] = wc;
          found = true;
        }
      }
      if (!found)
        fail(ErrorCode::internal_error, kStage,
             "face point outside its face in serialization");
      Json params = Json::array();
      for (double x : w) params.push_back(round12(x));
      j["params"] = params;
      break;
    }
  }
  return j;
}

SurfacePoint anchor_from_json(const Polyhedron& P, const Json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    int ref = j.at("ref").get<int>();
    if (kind == "vertex") {
      if (ref < 0 || ref >= int(P.vertices.size()))
        fail(ErrorCode::format_error, kStage, "vertex anchor out of range");
      return SurfacePoint::at_vertex(ref);
    }
    if (kind == "edge") {
      if (ref < 0 || ref >= int(P.edges.size()))
        fail(ErrorCode::format_error, kStage, "edge anchor out of range");
      double t = j.at("params").at(0).get<double>();
      if (!(t > 0.0 && t < 1.0))
        fail(ErrorCode::format_error, kStage, "edge parameter out of (0,1)");
      return SurfacePoint::on_edge(ref, t);
    }
    if (kind == "face") {
      if (ref < 0 || ref >= int(P.faces.size()))
        fail(ErrorCode::format_error, kStage, "face anchor out of range");
      const auto& cyc = P.faces[ref];
      const Json& params = j.at("params");
      if (params.size() != cyc.size())
        fail(ErrorCode::format_error, kStage,
             "face anchor weight count mismatch");
      double sum = 0.0;
      Vec3 pos{0, 0, 0};
      for (size_t i = 0; i < cyc.size(); ++i) {
        double w = params.at(i).get<double>();
        if (w < -1e-9)
          fail(ErrorCode::format_error, kStage, "negative barycentric weight");
        sum += w;
        pos = pos + w * P.vertices[cyc[i]];
      }
      if (std::abs(sum - 1.0) > 1e-6)
        fail(ErrorCode::format_error, kStage, "barycentric weights must sum to 1");
      const auto& fr = P.frames[ref];
      Vec3 dl = pos - fr.origin;
      return canonical_point(P, ref, {dl.dot(fr.ex), dl.dot(fr.ey)});
    }
    fail(ErrorCode::format_error, kStage, "unknown anchor kind '" + kind + "'");
  } catch (const Json::exception& e) {
    fail(ErrorCode::format_error, kStage, std::string("bad anchor: ") + e.what());
  }
}

// --- trees ---

SurfaceTree tree_from_json(const Polyhedron& P, const Json& j) {
  SurfaceTree T;
  try {
    for (const Json& nj : j.at("nodes")) {
      SurfaceTree::Node n;
      n.id = nj.at("id").get<int>();
      n.anchor = anchor_from_json(P, nj.at("anchor"));
      T.nodes.push_back(n);
    }
    for (const Json& ej : j.at("edges")) {
      SurfaceTree::TreeEdge e;
      e.from = ej.at("from").get<int>();
      e.to = ej.at("to").get<int>();
      std::vector<SurfacePoint> pts;
      if (ej.contains("polyline")) {
        for (const Json& aj : ej.at("polyline"))
          pts.push_back(anchor_from_json(P, aj));
      } else {
        pts.push_back(T.node(e.from).anchor);
        pts.push_back(T.node(e.to).anchor);
      }
      std::vector<int> carriers;
      for (const Json& cj : ej.at("carrier_faces"))
        carriers.push_back(cj.get<int>());
      e.polyline = make_polyline(P, std::move(pts), std::move(carriers), kStage);
      T.edges.push_back(e);
    }
  } catch (const Json::exception& e) {
    fail(ErrorCode::format_error, kStage, std::string("bad tree: ") + e.what());
  }
  return T;
}

Json tree_to_json(const Polyhedron& P, const SurfaceTree& T) {
  Json j;
  Json nodes = Json::array();
  for (const auto& n : T.nodes) {
    Json nj;
    nj["id"] = n.id;
    nj["anchor"] = anchor_to_json(P, n.anchor);
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  Json edges = Json::array();
  for (const auto& e : T.edges) {
    Json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    Json pl = Json::array();
    for (const auto& pt : e.polyline.points) pl.push_back(anchor_to_json(P, pt));
    ej["polyline"] = pl;
    Json cf = Json::array();
    for (int f : e.polyline.carrier_faces) cf.push_back(f);
    ej["carrier_faces"] = cf;
    edges.push_back(ej);
  }
  j["edges"] = edges;
  return j;
}

// --- dissections ---

Json dissection_to_json(const HingedDissection& d, const std::string& source,
                        double tolerance) {
  Json j;
  Json pieces = Json::array();
  for (const auto& p : d.pieces) {
    Json poly = Json::array();
    for (Vec2 v : p.vertices)
      poly.push_back(Json::array({round12(v.x), round12(v.y)}));
    Json pj;
    pj["polygon"] = poly;
    pieces.push_back(pj);
  }
  j["pieces"] = pieces;
  Json hinges = Json::array();
  for (const auto& h : d.hinges) {
    Json hj;
    hj["vertex"] = h.vertex;
    hj["piece_prev"] = h.piece_prev;
    hj["corner_prev"] = h.corner_prev;
    hj["piece_next"] = h.piece_next;
    hj["corner_next"] = h.corner_next;
    hj["active"] = h.active;
    hinges.push_back(hj);
  }
  j["hinges"] = hinges;
  auto placements = [&](const std::vector<Isometry2>& pl) {
    Json arr = Json::array();
    for (const auto& m : pl) {
      Json mj;
      mj["rotation"] = round12(m.r.angle());
      mj["translation"] = Json::array({round12(m.t.x), round12(m.t.y)});
      arr.push_back(mj);
    }
    return arr;
  };
  j["placement_a"] = placements(d.placement_a);
  j["placement_b"] = placements(d.placement_b);
  Json meta;
  meta["source"] = source;
  meta["tolerance"] = round12(tolerance);
  j["meta"] = meta;
  return j;
}

HingedDissection dissection_from_json(const Json& j) {
  HingedDissection d;
  try {
    for (const Json& pj : j.at("pieces")) {
      PlanarPolygon poly;
      for (const Json& vj : pj.at("polygon"))
        poly.vertices.push_back({vj.at(0).get<double>(), vj.at(1).get<double>()});
      if (poly.vertices.size() < 3)
        fail(ErrorCode::format_error, kStage, "piece with fewer than 3 corners");
      d.pieces.push_back(poly);
    }
    for (const Json& hj : j.at("hinges")) {
      HingedDissection::Hinge h;
      h.vertex = hj.at("vertex").get<int>();
      h.piece_prev = hj.at("piece_prev").get<int>();
      h.corner_prev = hj.at("corner_prev").get<int>();
      h.piece_next = hj.at("piece_next").get<int>();
      h.corner_next = hj.at("corner_next").get<int>();
      h.active = hj.value("active", true);
      auto check = [&](int piece, int corner) {
        if (piece < 0 || piece >= int(d.pieces.size()) || corner < 0 ||
            corner >= int(d.pieces[piece].vertices.size()))
          fail(ErrorCode::format_error, kStage, "hinge reference out of range");
      };
      check(h.piece_prev, h.corner_prev);
      check(h.piece_next, h.corner_next);
      d.hinges.push_back(h);
    }
    auto placements = [&](const Json& arr) {
      std::vector<Isometry2> out;
      for (const Json& mj : arr) {
        Isometry2 m;
        m.r = Rot2::from_angle(mj.at("rotation").get<double>());
        m.t = {mj.at("translation").at(0).get<double>(),
               mj.at("translation").at(1).get<double>()};
        out.push_back(m);
      }
      return out;
    };
    d.placement_a = placements(j.at("placement_a"));
    d.placement_b = placements(j.at("placement_b"));
    if (d.placement_a.size() != d.pieces.size() ||
        d.placement_b.size() != d.pieces.size())
      fail(ErrorCode::format_error, kStage, "placement count mismatch");
  } catch (const Json::exception& e) {
    fail(ErrorCode::format_error, kStage,
         std::string("bad dissection: ") + e.what());
  }
  return d;
}

// --- reports ---

Json validation_to_json(const ValidationReport& a, const ValidationReport& b,
                        const NonCrossReport& nc) {
  auto tree_rep = [](const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok;
    Json issues = Json::array();
    for (const auto& i : r.issues) {
      Json ij;
      ij["code"] = i.code;
      ij["message"] = i.message;
      issues.push_back(ij);
    }
    j["issues"] = issues;
    return j;
  };
  Json j;
  j["ok"] = a.ok && b.ok && nc.ok;
  j["tree_a"] = tree_rep(a);
  j["tree_b"] = tree_rep(b);
  Json ncj;
  ncj["ok"] = nc.ok;
  Json vs = Json::array();
  for (const auto& v : nc.violations) {
    Json vj;
    vj["kind"] = violation_kind_name(v.kind);
    vj["edge_a"] = v.edge_a;
    vj["edge_b"] = v.edge_b;
    vj["detail"] = v.detail;
    vs.push_back(vj);
  }
  ncj["violations"] = vs;
  j["noncross"] = ncj;
  return j;
}

Json cycle_to_json(const Polyhedron& P, const SeparatingCycle& c,
                   const std::vector<int>& forced) {
  Json j;
  Json order = Json::array();
  for (int v : c.vertex_order) order.push_back(v);
  j["vertex_order"] = order;
  Json fo = Json::array();
  for (int v : forced) fo.push_back(v);
  j["forced_order"] = fo;
  j["agree"] = cyclic_equal(c.vertex_order, forced, false);
  Json cl;
  cl["alpha"] = round12(c.clearance.alpha);
  cl["epsilon"] = round12(c.clearance.epsilon);
  j["clearances"] = cl;
  Json curve;
  Json pts = Json::array();
  for (const auto& pt : c.curve.points) pts.push_back(anchor_to_json(P, pt));
  curve["points"] = pts;
  Json cf = Json::array();
  for (int f : c.curve.carrier_faces) cf.push_back(f);
  curve["carrier_faces"] = cf;
  j["curve"] = curve;
  return j;
}

Json classification_to_json(const Classification& c, const HingeAngles& ha) {
  Json j;
  j["reversible"] = c.reversible;
  j["monotone"] = c.monotone;
  j["simple"] = c.simple;
  Json w;
  w["reversible"] = c.witness_reversible;
  w["monotone"] = c.witness_monotone;
  w["simple"] = c.witness_simple;
  j["witnesses"] = w;
  Json angles = Json::array();
  for (const auto& e : ha.entries) {
    Json ej;
    ej["alpha"] = round12(e.alpha);
    ej["alpha_prime"] = round12(e.alpha_prime);
    ej["beta"] = round12(e.beta);
    angles.push_back(ej);
  }
  j["hinge_angles"] = angles;
  return j;
}

Json metric_to_json(const GluedMetric& m, const AlexandrovReport& ar,
                    double residual) {
  Json j;
  Json classes = Json::array();
  for (const auto& cl : m.classes) {
    Json cj;
    cj["total_angle"] = round12(cl.total_angle);
    Json corners = Json::array();
    for (auto [p, c] : cl.corners) corners.push_back(Json::array({p, c}));
    cj["corners"] = corners;
    cj["hinge"] = cl.hinge;
    if (cl.hinge >= 0) {
      cj["hinge_alpha"] = round12(cl.hinge_alpha);
      cj["hinge_alpha_prime"] = round12(cl.hinge_alpha_prime);
    }
    classes.push_back(cj);
  }
  j["classes"] = classes;
  j["gauss_bonnet_residual"] = round12(residual);
  j["convex"] = ar.convex;
  Json ws = Json::array();
  for (int w : ar.witnesses) ws.push_back(w);
  j["witnesses"] = ws;
  j["doubled"] = m.doubled;
  return j;
}

// --- rendering ---

namespace {

const char* kPalette[] = {"#7fc8f8", "#f8b37f", "#9bdc8a", "#e69bd6",
                          "#f8ef7f", "#a7a9f2", "#8adccf", "#f28a8a",
                          "#c5a3ff", "#b4d67f"};

struct SvgOut {
  std::ostringstream body;
  double lox = 1e300, loy = 1e300, hix = -1e300, hiy = -1e300;

  void grow(Vec2 p) {
    lox = std::min(lox, p.x);
    hix = std::max(hix, p.x);
    loy = std::min(loy, -p.y);
    hiy = std::max(hiy, -p.y);
  }
  static std::string pt(Vec2 p) {
    return format_double(p.x) + "," + format_double(-p.y);
  }
  void path(const std::vector<Vec2>& pts, bool closed, const std::string& style) {
    if (pts.size() < 2) return;
    body << "<path d=\"M " << pt(pts[0]);
    grow(pts[0]);
    for (size_t i = 1; i < pts.size(); ++i) {
      body << " L " << pt(pts[i]);
      grow(pts[i]);
    }
    if (closed) body << " Z";
    body << "\" " << style << "/>\n";
  }
  void circle(Vec2 c, double r, const std::string& style) {
    grow(c);
    body << "<circle cx=\"" << format_double(c.x) << "\" cy=\""
         << format_double(-c.y) << "\" r=\"" << format_double(r) << "\" "
         << style << "/>\n";
  }
  std::string finish() {
    double w = hix - lox, h = hiy - loy;
    double m = 0.05 * std::max(w, h) + 1e-6;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << format_double(lox - m) << ' ' << format_double(loy - m) << ' '
       << format_double(w + 2 * m) << ' ' << format_double(h + 2 * m)
       << "\">\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

}  // namespace

std::string render_net_svg(const Net& net,
                           const std::vector<PlanarPolygon>& placed_pieces,
                           const std::vector<Vec2>& hinge_points,
                           const std::vector<std::vector<Vec2>>& overlay) {
  SvgOut svg;
  double scale = std::max(1e-9, polygon_perimeter(net.boundary));
  svg.path(net.boundary.vertices, true,
           "fill=\"#f6f6f6\" stroke=\"none\"");
  for (size_t i = 0; i < placed_pieces.size(); ++i) {
    std::string style = std::string("fill=\"") + kPalette[i % 10] +
                        "\" fill-opacity=\"0.85\" stroke=\"#444444\" "
                        "stroke-width=\"" +
                        format_double(0.002 * scale) + "\"";
    svg.path(placed_pieces[i].vertices, true, style);
  }
  for (const auto& pl : net.tree_image)
    svg.path(pl, false,
             "fill=\"none\" stroke=\"#c03030\" stroke-dasharray=\"" +
                 format_double(0.01 * scale) + "\" stroke-width=\"" +
                 format_double(0.003 * scale) + "\"");
  svg.path(net.boundary.vertices, true,
           "fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
               format_double(0.004 * scale) + "\"");
  for (const auto& pl : overlay)
    svg.path(pl, false,
             "fill=\"none\" stroke=\"#2060c0\" stroke-width=\"" +
                 format_double(0.003 * scale) + "\"");
  for (Vec2 h : hinge_points)
    svg.circle(h, 0.01 * scale, "fill=\"#000000\"");
  return svg.finish();
}

std::string render_cycle_svg(const Polyhedron& P, const SurfaceTree& T1,
                             const SurfaceTree& T2, const SeparatingCycle& c) {
  SvgOut svg;
  auto proj = [](Vec3 p) { return Vec2{p.x + 0.38 * p.y, p.z + 0.2 * p.y}; };
  double scale = P.bbox_diag;
  for (const auto& e : P.edges)
    svg.path({proj(P.vertices[e.a]), proj(P.vertices[e.b])}, false,
             "fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" +
                 format_double(0.003 * scale) + "\"");
  auto draw_tree = [&](const SurfaceTree& T, const char* color) {
    for (const auto& te : T.edges) {
      std::vector<Vec2> pts;
      for (const auto& pt : te.polyline.points)
        pts.push_back(proj(surface_position3d(P, pt)));
      svg.path(pts, false, std::string("fill=\"none\" stroke=\"") + color +
                               "\" stroke-width=\"" +
                               format_double(0.006 * scale) + "\"");
    }
  };
  draw_tree(T1, "#2060c0");
  draw_tree(T2, "#c03030");
  std::vector<Vec2> curve;
  for (const auto& pt : c.curve.points)
    curve.push_back(proj(surface_position3d(P, pt)));
  svg.path(curve, false,
           "fill=\"none\" stroke=\"#209050\" stroke-width=\"" +
               format_double(0.004 * scale) + "\"");
  return svg.finish();
}

std::vector<std::vector<Vec2>> map_polyline_into_net(const Polyhedron& P,
                                                     const SurfaceTree& cut,
                                                     const SurfacePolyline& pl) {
  Net net = unfold_net(P, cut);
  auto segs = pl.segments(P);
  std::vector<std::vector<Vec2>> out;
  std::vector<Vec2> cur;
  for (const auto& s : segs) {
    Vec2 mid = (s.a_uv + s.b_uv) * 0.5;
    const Net::Patch* found = nullptr;
    for (const auto& patch : net.patches) {
      if (patch.face != s.face) continue;
      if (point_in_polygon(mid, patch.region, P.tol) ||
          point_on_polygon_boundary(mid, patch.region, P.tol)) {
        found = &patch;
        break;
      }
    }
    if (!found)
      fail(ErrorCode::internal_error, kStage, "overlay segment outside net");
    Vec2 a = found->placement(s.a_uv), b = found->placement(s.b_uv);
    if (!cur.empty() && dist(cur.back(), a) > 1e-6 * P.bbox_diag) {
      out.push_back(cur);
      cur.clear();
    }
    if (cur.empty()) cur.push_back(a);
    cur.push_back(b);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace hingeforge
