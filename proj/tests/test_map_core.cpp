#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "torvis/map_core.hpp"
#include "torvis/surface_input.hpp"

using namespace torvis;

namespace {

// Triangle in the plane: vertices 0,1,2, edges 0=(0,1), 1=(1,2), 2=(2,0).
SurfaceMap triangleMap() {
  std::vector<std::vector<Dart>> rot(3);
  rot[0] = {Dart::backward(2), Dart::forward(0)};
  rot[1] = {Dart::backward(0), Dart::forward(1)};
  rot[2] = {Dart::backward(1), Dart::forward(2)};
  return buildMap(3, rot, {1, 1, 1}, Surface::cylinder_plane);
}

// Classical 14-triangle embedding of K7: neighbor offsets in clockwise
// order (+2,+3,+1,-2,-3,-1) around every vertex v of Z_7.
SurfaceMap k7Map() {
  // edge id for pair {a,b}: index into the 21 unordered pairs
  auto edge_id = [](int a, int b) {
    if (a > b) std::swap(a, b);
    int id = 0;
    for (int i = 0; i < a; ++i) id += 6 - i;
    return id + (b - a - 1);
  };
  std::vector<std::vector<Dart>> rot(7);
  const int offs[6] = {2, 3, 1, 5, 4, 6};  // -2=5, -3=4, -1=6 mod 7
  for (int v = 0; v < 7; ++v) {
    for (int o : offs) {
      int w = (v + o) % 7;
      int e = edge_id(v, w);
      rot[v].push_back(v < w ? Dart::forward(e) : Dart::backward(e));
    }
  }
  return buildMap(7, rot, std::vector<int8_t>(21, 1), Surface::torus);
}

}  // namespace

TEST_CASE("dart encoding involution") {
  for (int e = 0; e < 5; ++e) {
    CHECK(Dart::forward(e).twin() == Dart::backward(e));
    CHECK(Dart::backward(e).twin().twin() == Dart::backward(e));
    CHECK(Dart::forward(e).edge() == e);
  }
}

TEST_CASE("triangle: two faces, chi 2") {
  SurfaceMap m = triangleMap();
  FaceSet fs = faceCycles(m);
  CHECK(fs.size() == 2);
  CHECK(eulerCharacteristic(m) == 2);
  for (const auto& f : fs.faces) {
    CHECK(f.degree() == 3);
    CHECK(f.simple);
  }
  CHECK(isTwoConnected(m));
}

TEST_CASE("K7 torus embedding: 14 triangular faces, chi 0") {
  SurfaceMap m = k7Map();
  FaceSet fs = faceCycles(m);
  CHECK(fs.size() == 14);
  CHECK(eulerCharacteristic(m) == 0);
  for (const auto& f : fs.faces) CHECK(f.degree() == 3);
}

TEST_CASE("M0 (one vertex, two interleaved loops) is rejected") {
  std::vector<std::vector<Dart>> rot(1);
  rot[0] = {Dart::forward(0), Dart::forward(1), Dart::backward(0),
            Dart::backward(1)};
  CHECK_THROWS_WITH_AS(buildMap(1, rot, {1, 1}, Surface::torus),
                       doctest::Contains("loop"), Error);
  try {
    buildMap(1, rot, {1, 1}, Surface::torus);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopPresent);
  }
}

TEST_CASE("duplicate dart is rejected") {
  std::vector<std::vector<Dart>> rot(2);
  rot[0] = {Dart::forward(0), Dart::forward(0)};
  rot[1] = {Dart::backward(0)};
  CHECK_THROWS_AS(buildMap(2, rot, {1}, Surface::cylinder_plane), Error);
}

TEST_CASE("path graph is not 2-connected") {
  // a-b-c path: b is a cut vertex
  std::vector<std::vector<Dart>> rot(3);
  rot[0] = {Dart::forward(0)};
  rot[1] = {Dart::backward(0), Dart::forward(1)};
  rot[2] = {Dart::backward(1)};
  SurfaceMap m = buildMap(3, rot, {1, 1}, Surface::cylinder_plane);
  CHECK_FALSE(isTwoConnected(m));
}

TEST_CASE("face partition: sum of face degrees is 2m on random rotation systems") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    int m = n + static_cast<int>(rng() % (n + 3));
    // random connected loopless multigraph + random rotations
    std::vector<std::pair<int, int>> ends(m);
    for (int e = 0; e < m; ++e) {
      auto& [a, b] = ends[e];
      if (e < n - 1) {
        a = e;
        b = e + 1;
        continue;
      }
      a = static_cast<int>(rng() % n);
      do { b = static_cast<int>(rng() % n); } while (b == a);
    }
    std::vector<std::vector<Dart>> rot(n);
    for (int e = 0; e < m; ++e) {
      rot[ends[e].first].push_back(Dart::forward(e));
      rot[ends[e].second].push_back(Dart::backward(e));
    }
    bool signed_map = trial % 3 == 0;
    std::vector<int8_t> signs(m, 1);
    if (signed_map)
      for (auto& s : signs) s = rng() % 4 == 0 ? -1 : 1;
    for (auto& r : rot)
      std::shuffle(r.begin(), r.end(), rng);
    SurfaceMap map = buildMap(n, rot, signs,
                              signed_map ? Surface::klein : Surface::torus);

    FaceSet fs = faceCycles(map);
    int total = 0;
    for (const auto& f : fs.faces) total += f.degree();
    CHECK(total == 2 * m);

    if (!signed_map) {
      // all-positive systems: every dart on exactly one face cycle
      std::vector<int> count(2 * m, 0);
      for (const auto& f : fs.faces)
        for (Dart d : f.darts) count[d.id]++;
      CHECK(*std::min_element(count.begin(), count.end()) == 1);
      CHECK(*std::max_element(count.begin(), count.end()) == 1);
      int chi = eulerCharacteristic(map);
      CHECK(chi % 2 == 0);
      CHECK(chi <= 2);
    }
  }
}
