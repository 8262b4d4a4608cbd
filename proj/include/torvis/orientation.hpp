#pragma once

#include <vector>

#include "torvis/path_system.hpp"

namespace torvis {

// Vertex order v_1..v_N with v_1 = s and v_N = t; directing every edge from
// the lower to the higher index yields a bipolar orientation.
struct StOrder {
  std::vector<VertexId> order;
  std::vector<int> index;  // vertex -> position in order

  int rank(VertexId v) const { return index[v]; }
  bool forward(const SurfaceMap& map, Dart d) const {
    return index[map.tail(d)] < index[map.head(d)];
  }
};

// Map split at every path of the system, with enough bookkeeping to pull an
// orientation of the split map back onto the original.
struct MultiSplit {
  SurfaceMap map;
  std::vector<VertexId> orig_vertex;  // split vertex -> original vertex
  std::vector<EdgeId> orig_edge;      // split edge -> original edge
};

MultiSplit splitAtAllPaths(const SurfaceMap& map,
                           const std::vector<std::vector<Dart>>& paths);

// st-order of a 2-connected graph via incremental open-ear insertion.
// `attempt` perturbs the ear scan order; attempt 0 is the canonical result.
StOrder stNumber(const SurfaceMap& map, VertexId s, VertexId t,
                 int attempt = 0);

// Verifies in-degree/out-degree >= 1 for every vertex except s (source) and
// t (sink) and that every edge joins distinct ranks.
bool isBipolar(const SurfaceMap& map, const StOrder& order, VertexId s,
               VertexId t);

// Verifies that every face of a plane map has exactly one local source and
// one local sink under the order. Throws FaceSourceSinkViolation.
void verifyFaceLaw(const SurfaceMap& map, const StOrder& order);

// Lemma-style orientation of ghat that respects the path system: st-number
// the fully split map, check the face law, merge the splits back, verify the
// merged orientation is acyclic and bipolar (retrying with perturbed ear
// orders on a merge cycle), and return its topological order.
StOrder respectingOrientation(const PathSystem& ps);

}  // namespace torvis
