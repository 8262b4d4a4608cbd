#pragma once

#include <vector>

#include "torvis/surface_input.hpp"

namespace torvis {

// Result of splitting a map at a simple path whose endpoints survive:
// interior vertices and all path edges are duplicated, opening a new face
// bounded by the two copies. Left copies keep the original ids; right
// copies are appended.
struct SplitResult {
  SurfaceMap map;
  VertexId path_s = -1, path_t = -1;
  std::vector<VertexId> right_of;   // original vertex -> right copy, -1 if not split
  std::vector<VertexId> orig_vertex;  // split-map vertex -> original vertex
  std::vector<EdgeId> orig_edge;      // split-map edge -> original edge
  std::vector<Dart> left_path;        // the surviving-id copy, s -> t
  std::vector<Dart> right_path;       // the appended copy, s -> t
};

SplitResult splitAtPath(const SurfaceMap& map, const std::vector<Dart>& path);

// Undoes a split; used to validate the surgery round-trip.
SurfaceMap mergeSplit(const SplitResult& split);

// The arc of the wrap face boundary that leaves s via (s,s_1); it must be
// simple and end with (t_1,t). The wrap face is the face in the corner
// between (s,s_d) and (s,s_1). When that face does not reach t, the
// shortest simple path with the same first and last darts is returned
// instead.
std::vector<Dart> wrapFacePath(const CutGraph& cut);

// All simple paths that start with (s,s_1) and end with (t_1,t): the wrap
// face arc first (when it exists), the rest ordered by length. The choice
// of this spine decides whether the split-and-peel construction admits a
// respecting orientation, so callers retry along this list.
std::vector<std::vector<Dart>> spineCandidates(const CutGraph& cut,
                                               size_t limit);

// Edge-capacity-respecting s->t paths: a maximum flow of one unit per start
// stub is computed, directed cycles in its support are cancelled, and the
// flow is peeled into paths by matching every in-unit with its nearest
// clockwise out-unit around each vertex (the planar pairing realizes the
// rightmost-turn rule per unit). The family is then simple and pairwise
// non-crossing by construction. Lane k of an edge lies at slot position k
// on the flow's tail side and mirrored on the head side; `lanes_out`, when
// given, receives the lane index of every step. Fails with FlowDeficit when
// the flow value falls short.
std::vector<std::vector<Dart>> rightFirstPaths(
    const SurfaceMap& map, VertexId t, const std::vector<int>& capacities,
    const std::vector<Dart>& start_order,
    std::vector<std::vector<int>>* lanes_out = nullptr);

// The supergraph Ghat (parallel copies materialized, embedded consecutively)
// together with the d simple edge-disjoint non-crossing s->t paths, path i
// starting with a copy of (s,s_i) and ending with a copy of (t_i,t).
struct PathSystem {
  SurfaceMap ghat;
  VertexId s = -1, t = -1;
  int d = 0;
  std::vector<EdgeId> copy_origin;       // ghat edge -> cut-plane edge
  std::vector<int> used_by_path;         // ghat edge -> path index or -1
  std::vector<std::vector<Dart>> paths;  // dart sequences in ghat

  std::vector<VertexId> pathVertices(int i) const;
};

PathSystem buildPathSystem(const CutGraph& cut);
PathSystem buildPathSystem(const CutGraph& cut, const std::vector<Dart>& spine);

// The non-crossing predicate: at every vertex interior to two paths the
// four path darts are consecutive as pi,pi,pi',pi' in the rotation.
// Throws NonCrossingViolation with a witness otherwise.
void verifyNonCrossing(const SurfaceMap& map,
                       const std::vector<std::vector<Dart>>& paths);

}  // namespace torvis
