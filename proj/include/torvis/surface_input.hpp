#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "torvis/map_core.hpp"

namespace torvis {

// A surface map together with its cut data: the edges crossing the bottom
// side of the fundamental rectangle, left to right. Each entry is the dart
// oriented so that its head is the endpoint reached going upward from the
// bottom side (the s_i endpoint).
struct FlatInput {
  SurfaceMap map;
  std::vector<Dart> bottom;  // updarts, left to right

  int d() const { return static_cast<int>(bottom.size()); }

  // Enforces: no edge crossed twice, signs -1 exactly on crossing edges for
  // klein and all +1 otherwise, bottom darts well formed.
  void validate() const;
};

// Text format:
//   surface torus|klein
//   vertices <n>
//   edges <m>
//   rot <v>: <dart>...      one line per vertex, dart = "<edge>+"|"<edge>-"
//   bottom: <updart>...
// '#' starts a comment. Edge signs are derived from the surface and the
// bottom list.
FlatInput parseInput(const std::string& text);
FlatInput loadInputFile(const std::string& path);
std::string serializeInput(const FlatInput& input);

// The planar graph obtained by severing all bottom crossings and attaching
// their half-edges to new terminals s (below) and t (above). The s-side
// half of crossing i keeps the original edge id; the t-side half gets a
// fresh id. Rotation positions of all surviving darts are unchanged, so
// uncut() is exact.
struct CutGraph {
  SurfaceMap plane;  // surface tag cylinder_plane, all signs +1
  VertexId s = -1;
  VertexId t = -1;
  int d = 0;
  Surface origin_surface = Surface::torus;

  std::vector<VertexId> s_vertices;   // s_i = head of updart i
  std::vector<VertexId> t_vertices;   // t_j, counter-clockwise at t
  std::vector<EdgeId> stub_s;         // plane edge (s, s_i)
  std::vector<EdgeId> stub_t;         // plane edge (t_j, t)
  std::vector<int> pair_of_s_stub;    // s-stub i meets t-stub pair_of_s_stub[i]

  std::vector<EdgeId> origin;         // plane edge -> input edge id
  std::vector<char> augmented;        // plane edge added by augmentFaces?

  int inputEdgeCount() const { return static_cast<int>(augment_base_); }

  // bookkeeping filled by buildCutGraph
  int augment_base_ = 0;  // edges >= this in the *input* map were chords
};

// Adds chord edges until every face of the cut graph is a simple cycle
// (equivalently, until the cut graph is 2-connected). Chords are inserted
// inside faces, never touch s or t, never cross the bottom boundary, and
// carry sign +1. Returns the augmented input plus the ids of added edges.
// For d = 0 the map itself is augmented (plane case).
std::pair<FlatInput, std::vector<EdgeId>> augmentFaces(const FlatInput& input);

// Severs the crossings and verifies the result: a plane map (Euler
// characteristic 2) that is 2-connected. Requires d >= 1.
CutGraph buildCutGraph(const FlatInput& input);

// Internal variant without the 2-connectivity requirement; augmentFaces
// uses it to look at the raw cut faces.
CutGraph buildCutGraphRaw(const FlatInput& input);

// Exact inverse of buildCutGraph (edge ids compacted; rotation positions
// preserved).
FlatInput uncut(const CutGraph& cut);

// Builds a FlatInput from an arbitrary plane map with designated terminals:
// every edge at s pairs with one at t per the surface pairing and becomes a
// bottom crossing. s and t must have equal degree >= 1, must not be
// adjacent to each other, and paired neighbors must differ. The terminals
// must be the two highest-numbered vertices.
FlatInput uncutPlaneMap(const SurfaceMap& plane, VertexId s, VertexId t,
                        Surface target_surface);

}  // namespace torvis
