// Writes the fixture meshes and tree drawings as files, for CLI runs.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "fixtures.hpp"
#include "hingeforge/io.hpp"

using namespace hingeforge;
namespace fx = hingeforge::fixtures;
namespace fs = std::filesystem;

static void put(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  out << s;
}

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "fixtures_out";
  fs::create_directories(dir);
  auto emit = [&](const std::string& name, const Polyhedron& P,
                  const fx::TreePair& pr) {
    put(dir / (name + ".off"), write_off(P));
    put(dir / (name + "_tree_a.json"), json_to_string(tree_to_json(P, pr.a)));
    put(dir / (name + "_tree_b.json"), json_to_string(tree_to_json(P, pr.b)));
  };
  {
    Polyhedron P = fx::cube_mesh();
    emit("cube", P, fx::cube_trees(P));
    put(dir / "cube_tree_crossing.json",
        json_to_string(tree_to_json(P, fx::interleaved_trees(P).b)));
    put(dir / "cube_tree_nonspanning.json",
        json_to_string(tree_to_json(P, fx::cube_nonspanning_tree(P))));
    put(dir / "cube_tree_cyclic.json",
        json_to_string(tree_to_json(P, fx::cube_cyclic_tree(P))));
    fx::TreePair il = fx::interleaved_trees(P);
    put(dir / "cube_interleaved_a.json", json_to_string(tree_to_json(P, il.a)));
    put(dir / "cube_interleaved_b.json", json_to_string(tree_to_json(P, il.b)));
  }
  {
    Polyhedron P = fx::tetrahedron_mesh();
    emit("tetrahedron", P, fx::tetrahedron_trees(P));
  }
  {
    Polyhedron P = fx::octahedron_mesh();
    emit("octahedron", P, fx::octahedron_trees(P));
  }
  {
    Polyhedron P = fx::doubly_covered_triangle_mesh();
    emit("dc_triangle", P, fx::doubly_covered_triangle_trees(P));
  }
  {
    Polyhedron P = fx::doubly_covered_square_mesh();
    emit("dc_square", P, fx::doubly_covered_square_trees(P));
    fx::TreePair cr = fx::crossing_trees(P);
    put(dir / "dc_square_crossing_b.json",
        json_to_string(tree_to_json(P, cr.b)));
  }
  put(dir / "malformed.off", "OFF\n3 zzz 1\n");
  std::cout << "wrote fixtures to " << dir << "\n";
  return 0;
}
