// Regenerates the example inputs under tests/fixtures. Each fixture is
// machine-checked end to end before it is written.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "torvis/gen.hpp"
#include "torvis/pipeline.hpp"

using namespace torvis;
namespace fs = std::filesystem;

namespace {

void save(const fs::path& dir, const std::string& name, const FlatInput& in) {
  PipelineResult r = runPipeline(in, {});
  if (!r.report.allPass()) {
    std::cerr << name << ": pipeline validation failed\n"
              << r.report.summary();
    std::exit(1);
  }
  std::ofstream f(dir / name, std::ios::binary);
  f << serializeInput(in);
  std::cout << name << ": n=" << in.map.vertexCount()
            << " m=" << in.map.edgeCount() << " d=" << in.d()
            << " -> w=" << r.drawing.w << " h=" << r.drawing.h
            << " shared=" << r.drawing.shared_vertices << "\n";
}

FlatInput gridTorus() {
  std::vector<std::vector<Dart>> rot(4);
  auto F = Dart::forward, B = Dart::backward;
  rot[0] = {F(4), F(0), B(5), B(1)};
  rot[1] = {F(6), F(1), B(7), B(0)};
  rot[2] = {F(5), F(2), B(4), B(3)};
  rot[3] = {F(7), F(3), B(6), B(2)};
  SurfaceMap map = buildMap(4, rot, std::vector<int8_t>(8, 1), Surface::torus);
  auto cut = gen::findTorusCut(map);
  if (!cut) std::exit(1);
  return *cut;
}

// first random klein input with three crossings and a working pipeline
FlatInput kleinD3() {
  for (std::uint64_t seed = 1; seed < 4000; ++seed) {
    FlatInput in = gen::randomFlatInput(seed, Surface::klein);
    if (in.d() != 3) continue;
    try {
      PipelineResult r = runPipeline(in, {});
      if (r.report.allPass()) return in;
    } catch (const Error&) {
    }
  }
  std::cerr << "no d=3 klein input found\n";
  std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  fs::path dir = argc > 1 ? argv[1] : "tests/fixtures";
  fs::create_directories(dir);

  save(dir, "grid2x2.tor", gridTorus());

  {
    auto cut = gen::findTorusCut(gen::k7Rotation());
    if (!cut) return 1;
    save(dir, "k7.tor", *cut);
  }
  {
    auto cut = gen::findTorusCut(gen::k5Rotation());
    if (!cut) return 1;
    save(dir, "k5.tor", *cut);
  }
  {
    auto in = gen::searchKleinInput(10, gen::petersenEdges(), 2);
    if (!in) return 1;
    save(dir, "petersen.kle", *in);
  }
  save(dir, "klein_d3.kle", kleinD3());

  {
    // one vertex, two interleaved loops: the canonical rejection fixture
    std::ofstream f(dir / "m0.tor", std::ios::binary);
    f << "# single vertex with two interleaved loops\n"
         "surface torus\n"
         "vertices 1\n"
         "edges 2\n"
         "rot 0: 0+ 1+ 0- 1-\n"
         "bottom: 0+\n";
    std::cout << "m0.tor: rejection fixture\n";
  }
  return 0;
}
