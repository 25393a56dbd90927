#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hingeforge/io.hpp"

namespace fs = std::filesystem;
using namespace hingeforge;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::format_error, "io", "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    fail(ErrorCode::format_error, "io", "cannot write '" + path.string() + "'");
  out << content;
}

Json parse_json(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    fail(ErrorCode::format_error, "io", "malformed JSON in " + what);
  return j;
}

struct Inputs {
  Polyhedron P;
  SurfaceTree a, b;
};

Inputs load_inputs(const std::string& mesh, const std::string& tree_a,
                   const std::string& tree_b, double tol, double angle_tol) {
  Tolerance base{tol, angle_tol};
  Inputs in{parse_off(read_file(mesh), base), {}, {}};
  in.a = tree_from_json(in.P, parse_json(read_file(tree_a), "tree a"));
  in.b = tree_from_json(in.P, parse_json(read_file(tree_b), "tree b"));
  return in;
}

int cmd_validate(const Inputs& in) {
  ValidationReport ra = validate_tree(in.P, in.a);
  ValidationReport rb = validate_tree(in.P, in.b);
  NonCrossReport nc;
  if (ra.ok && rb.ok) nc = check_noncrossing(in.P, in.a, in.b);
  std::cout << json_to_string(validation_to_json(ra, rb, nc));
  return (ra.ok && rb.ok && nc.ok) ? 0 : 1;
}

int cmd_cycle(const Inputs& in, bool svg, const fs::path& out_dir) {
  SeparatingCycle c = build_separating_cycle(in.P, in.a, in.b);
  UnionGraph G = build_union_graph(in.P, in.a, in.b);
  std::vector<int> forced = forced_vertex_order(G);
  if (!cyclic_equal(c.vertex_order, forced, false))
    fail(ErrorCode::internal_error, "cycle",
         "constructed and forced orders disagree");
  std::cout << json_to_string(cycle_to_json(in.P, c, forced));
  if (svg) {
    fs::create_directories(out_dir);
    write_file(out_dir / "cycle.svg", render_cycle_svg(in.P, in.a, in.b, c));
  }
  return 0;
}

int cmd_dissect(const Inputs& in, bool svg, bool overlay_cycle,
                const fs::path& out_dir) {
  BuiltDissection bd = build_dissection(in.P, in.a, in.b);
  HingeAngles ha = hinge_angles(bd.d, in.P.tol);
  Classification cls = classify(bd.d, ha, in.P.tol);

  fs::create_directories(out_dir);
  write_file(out_dir / "dissection.json",
             json_to_string(dissection_to_json(bd.d, "hingeforge dissect",
                                               in.P.tol.absolute_eps)));
  if (svg) {
    std::vector<std::vector<Vec2>> overlay_a, overlay_b;
    if (overlay_cycle) {
      SeparatingCycle c = build_separating_cycle(in.P, in.a, in.b);
      overlay_a = map_polyline_into_net(in.P, in.a, c.curve);
      overlay_b = map_polyline_into_net(in.P, in.b, c.curve);
    }
    for (bool config_a : {true, false}) {
      std::vector<PlanarPolygon> placed;
      std::vector<Vec2> hinge_pts;
      for (size_t i = 0; i < bd.d.pieces.size(); ++i)
        placed.push_back(placed_piece(bd.d, int(i), config_a));
      for (size_t h = 0; h < bd.d.hinges.size(); ++h) {
        const auto& pl = config_a ? bd.d.placement_a : bd.d.placement_b;
        hinge_pts.push_back(pl[bd.d.hinges[h].piece_next](
            bd.d.hinge_point_local(int(h), true)));
      }
      const Net& net = config_a ? bd.net_a : bd.net_b;
      write_file(out_dir / (config_a ? "net_a.svg" : "net_b.svg"),
                 render_net_svg(net, placed, hinge_pts,
                                config_a ? overlay_a : overlay_b));
    }
  }

  double total = 0;
  for (const auto& p : bd.d.pieces) total += polygon_signed_area(p);
  Json j;
  j["pieces"] = int(bd.d.pieces.size());
  j["total_area"] = round12(total);
  j["net_a_area"] = round12(polygon_signed_area(bd.net_a.boundary));
  j["net_b_area"] = round12(polygon_signed_area(bd.net_b.boundary));
  j["net_a_perimeter"] = round12(polygon_perimeter(bd.net_a.boundary));
  j["net_b_perimeter"] = round12(polygon_perimeter(bd.net_b.boundary));
  j["classification"] = classification_to_json(cls, ha);
  Json order = Json::array();
  for (const auto& h : bd.d.hinges) order.push_back(h.vertex);
  j["hinge_vertices"] = order;
  j["dissection_file"] = (out_dir / "dissection.json").string();
  std::cout << json_to_string(j);
  return 0;
}

int cmd_glue(const std::string& path, double tol, double angle_tol) {
  HingedDissection d =
      dissection_from_json(parse_json(read_file(path), "dissection"));
  // scale the tolerance by the configuration-A extent
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (size_t p = 0; p < d.pieces.size(); ++p)
    for (Vec2 v : placed_piece(d, int(p), true).vertices) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
  double diag = std::hypot(hi_x - lo_x, hi_y - lo_y);
  Tolerance t{tol * std::max(diag, 1e-12), angle_tol};
  GluedMetric m = glue_metric(d, t);
  AlexandrovReport ar = check_alexandrov(m, t);
  std::cout << json_to_string(metric_to_json(m, ar, gauss_bonnet_residual(m)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible hinged dissections from non-crossing nets"};
  app.require_subcommand(1);

  std::string mesh, tree_a, tree_b, dissection;
  double tolerance = 1e-9, angle_tolerance = 1e-9;
  std::string out_dir = ".";
  bool svg = false, overlay_cycle = false;

  app.add_option("--tolerance", tolerance, "absolute tolerance scale");
  app.add_option("--angle-tolerance", angle_tolerance, "angle tolerance (rad)");

  auto* validate = app.add_subcommand("validate", "validate a tree pair");
  validate->add_option("mesh", mesh)->required();
  validate->add_option("tree_a", tree_a)->required();
  validate->add_option("tree_b", tree_b)->required();

  auto* cycle = app.add_subcommand("cycle", "build the separating cycle");
  cycle->add_option("mesh", mesh)->required();
  cycle->add_option("tree_a", tree_a)->required();
  cycle->add_option("tree_b", tree_b)->required();
  cycle->add_flag("--svg", svg);
  cycle->add_option("--out", out_dir);

  auto* dissect = app.add_subcommand("dissect", "build the hinged dissection");
  dissect->add_option("mesh", mesh)->required();
  dissect->add_option("tree_a", tree_a)->required();
  dissect->add_option("tree_b", tree_b)->required();
  dissect->add_flag("--svg", svg);
  dissect->add_flag("--overlay-cycle", overlay_cycle);
  dissect->add_option("--out", out_dir);

  auto* glue = app.add_subcommand("glue", "glue a dissection into a metric");
  glue->add_option("dissection", dissection)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed())
      return cmd_validate(
          load_inputs(mesh, tree_a, tree_b, tolerance, angle_tolerance));
    if (cycle->parsed())
      return cmd_cycle(
          load_inputs(mesh, tree_a, tree_b, tolerance, angle_tolerance), svg,
          out_dir);
    if (dissect->parsed())
      return cmd_dissect(
          load_inputs(mesh, tree_a, tree_b, tolerance, angle_tolerance), svg,
          overlay_cycle, out_dir);
    if (glue->parsed()) return cmd_glue(dissection, tolerance, angle_tolerance);
  } catch (const PipelineError& e) {
    Json err;
    err["error"]["stage"] = e.stage();
    err["error"]["code"] = error_code_name(e.code());
    err["error"]["message"] = e.what();
    std::cerr << json_to_string(err);
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    Json err;
    err["error"]["stage"] = "internal";
    err["error"]["code"] = "internal-error";
    err["error"]["message"] = e.what();
    std::cerr << json_to_string(err);
    return 3;
  }
  return 2;
}
