#pragma once

#include <cstdint>
#include <vector>

#include "torvis/errors.hpp"

namespace torvis {

using VertexId = int;
using EdgeId = int;

// One of the two directed sides of an edge. Encoded as 2*edge + side so a
// dart fits in an int and twin() is a bit flip.
struct Dart {
  int id = -1;

  Dart() = default;
  explicit Dart(int raw) : id(raw) {}
  static Dart forward(EdgeId e) { return Dart(2 * e); }
  static Dart backward(EdgeId e) { return Dart(2 * e + 1); }

  EdgeId edge() const { return id >> 1; }
  bool isForward() const { return (id & 1) == 0; }
  Dart twin() const { return Dart(id ^ 1); }
  bool valid() const { return id >= 0; }

  friend bool operator==(Dart a, Dart b) { return a.id == b.id; }
  friend bool operator!=(Dart a, Dart b) { return a.id != b.id; }
  friend bool operator<(Dart a, Dart b) { return a.id < b.id; }
};

enum class Surface { torus, klein, cylinder_plane };

const char* surfaceName(Surface s);

// Combinatorial map: per-vertex clockwise rotation of darts plus edge signs.
// Sign -1 marks an edge whose traversal reverses local orientation (only
// Klein-bottle boundary crossers in this codebase). Immutable once built.
class SurfaceMap {
 public:
  SurfaceMap() = default;  // empty map; real instances come from build()

  // Validates that every dart of edges 0..m-1 appears exactly once across
  // the rotation lists and that no edge is a loop.
  static SurfaceMap build(int n, std::vector<std::vector<Dart>> rotations,
                          std::vector<int8_t> edge_signs, Surface surface);

  // Same checks but loop edges are tolerated; used to host rejection
  // fixtures that buildMap itself must refuse.
  static SurfaceMap buildAllowLoops(int n,
                                    std::vector<std::vector<Dart>> rotations,
                                    std::vector<int8_t> edge_signs,
                                    Surface surface);

  int vertexCount() const { return n_; }
  int edgeCount() const { return m_; }
  int dartCount() const { return 2 * m_; }
  Surface surface() const { return surface_; }

  VertexId tail(Dart d) const { return dart_vertex_[d.id]; }
  VertexId head(Dart d) const { return dart_vertex_[d.twin().id]; }
  int sign(EdgeId e) const { return edge_signs_[e]; }
  bool hasNegativeSigns() const;

  const std::vector<Dart>& rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
  const std::vector<int8_t>& edgeSigns() const { return edge_signs_; }

  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
  int rotationIndex(Dart d) const { return dart_index_[d.id]; }

  Dart rotationSucc(Dart d) const {
    const auto& rot = rotations_[dart_vertex_[d.id]];
    int i = dart_index_[d.id] + 1;
    return rot[i == static_cast<int>(rot.size()) ? 0 : i];
  }
  Dart rotationPred(Dart d) const {
    const auto& rot = rotations_[dart_vertex_[d.id]];
    int i = dart_index_[d.id];
    return rot[i == 0 ? rot.size() - 1 : i - 1];
  }

  bool isLoop(EdgeId e) const {
    return dart_vertex_[2 * e] == dart_vertex_[2 * e + 1];
  }

 private:
  static SurfaceMap buildImpl(int n, std::vector<std::vector<Dart>> rotations,
                              std::vector<int8_t> edge_signs, Surface surface,
                              bool allow_loops);

  int n_ = 0;
  int m_ = 0;
  Surface surface_ = Surface::cylinder_plane;
  std::vector<std::vector<Dart>> rotations_;
  std::vector<int8_t> edge_signs_;
  std::vector<VertexId> dart_vertex_;  // tail of each dart
  std::vector<int> dart_index_;        // position within its rotation
};

// buildMap per the module contract: loops are an input error.
SurfaceMap buildMap(int n, std::vector<std::vector<Dart>> rotations,
                    std::vector<int8_t> edge_signs, Surface surface);

// One boundary walk of a face. `orient[i]` is the accumulated sign when
// dart `darts[i]` is traversed; it only differs from +1 on walks that pass
// through negative edges.
struct FaceCycle {
  std::vector<Dart> darts;
  std::vector<int8_t> orient;
  bool simple = false;  // no vertex occurs twice among the corners

  int degree() const { return static_cast<int>(darts.size()); }
};

struct FaceSet {
  std::vector<FaceCycle> faces;

  int size() const { return static_cast<int>(faces.size()); }
};

// Sign-aware face traversal. From dart d the walk continues at the rotation
// successor of twin(d) while the accumulated sign is +1 and at the rotation
// predecessor while it is -1; the sign flips on each negative edge. Faces
// are orbit pairs of this walk over (dart, sign) states: each face is traced
// once in each direction and one representative per pair is returned.
FaceSet faceCycles(const SurfaceMap& map);

// n - m + f with f from faceCycles.
int eulerCharacteristic(const SurfaceMap& map);

// Low-point articulation test on the underlying graph. Throws Disconnected
// when the graph is not connected.
bool isTwoConnected(const SurfaceMap& map);

// Face index of every dart for all-positive maps (each dart lies on exactly
// one representative cycle there). Values may repeat a dart across faces on
// signed maps; callers that rely on the partition must hold orientable maps.
std::vector<int> faceOfDart(const SurfaceMap& map, const FaceSet& faces);

}  // namespace torvis
