#include "torvis/map_core.hpp"

#include <algorithm>
#include <string>

namespace torvis {

const char* errorCodeName(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateDart: return "DuplicateDart";
    case ErrorCode::MissingDart: return "MissingDart";
    case ErrorCode::LoopPresent: return "LoopPresent";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Condition2Violation: return "Condition2Violation";
    case ErrorCode::SignMismatch: return "SignMismatch";
    case ErrorCode::NotCellular: return "NotCellular";
    case ErrorCode::NotPlanarAfterCut: return "NotPlanarAfterCut";
    case ErrorCode::NotTwoConnected: return "NotTwoConnected";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::WrapFaceNotFound: return "WrapFaceNotFound";
    case ErrorCode::PathNotSimple: return "PathNotSimple";
    case ErrorCode::FlowDeficit: return "FlowDeficit";
    case ErrorCode::NonCrossingViolation: return "NonCrossingViolation";
    case ErrorCode::FaceSourceSinkViolation: return "FaceSourceSinkViolation";
    case ErrorCode::MergedCycle: return "MergedCycle";
    case ErrorCode::BlockNotConsecutive: return "BlockNotConsecutive";
    case ErrorCode::ExclusivityViolation: return "ExclusivityViolation";
    case ErrorCode::StubMismatch: return "StubMismatch";
    case ErrorCode::AlignmentFailure: return "AlignmentFailure";
  }
  return "UnknownError";
}

bool isInternalError(ErrorCode c) {
  switch (c) {
    case ErrorCode::WrapFaceNotFound:
    case ErrorCode::PathNotSimple:
    case ErrorCode::FlowDeficit:
    case ErrorCode::NonCrossingViolation:
    case ErrorCode::FaceSourceSinkViolation:
    case ErrorCode::MergedCycle:
    case ErrorCode::BlockNotConsecutive:
    case ErrorCode::ExclusivityViolation:
    case ErrorCode::StubMismatch:
    case ErrorCode::AlignmentFailure:
      return true;
    default:
      return false;
  }
}

const char* surfaceName(Surface s) {
  switch (s) {
    case Surface::torus: return "torus";
    case Surface::klein: return "klein";
    case Surface::cylinder_plane: return "cylinder_plane";
  }
  return "?";
}

SurfaceMap SurfaceMap::buildImpl(int n, std::vector<std::vector<Dart>> rotations,
                                 std::vector<int8_t> edge_signs, Surface surface,
                                 bool allow_loops) {
  require(n >= 0 && static_cast<int>(rotations.size()) == n,
          ErrorCode::SyntaxError, "rotation list count must equal vertex count");
  const int m = static_cast<int>(edge_signs.size());

  SurfaceMap map;
  map.n_ = n;
  map.m_ = m;
  map.surface_ = surface;
  map.edge_signs_ = std::move(edge_signs);
  map.dart_vertex_.assign(2 * m, -1);
  map.dart_index_.assign(2 * m, -1);

  for (VertexId v = 0; v < n; ++v) {
    const auto& rot = rotations[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      Dart d = rot[i];
      require(d.valid() && d.id < 2 * m, ErrorCode::MissingDart,
              "rotation at vertex " + std::to_string(v) +
                  " references undeclared dart " + std::to_string(d.id));
      require(map.dart_vertex_[d.id] < 0, ErrorCode::DuplicateDart,
              "dart " + std::to_string(d.edge()) +
                  (d.isForward() ? "+" : "-") + " listed twice");
      map.dart_vertex_[d.id] = v;
      map.dart_index_[d.id] = i;
    }
  }
  for (int d = 0; d < 2 * m; ++d) {
    require(map.dart_vertex_[d] >= 0, ErrorCode::MissingDart,
            "dart of edge " + std::to_string(d >> 1) +
                " missing from all rotations");
  }
  for (EdgeId e = 0; e < m; ++e) {
    require(map.edge_signs_[e] == 1 || map.edge_signs_[e] == -1,
            ErrorCode::SignMismatch,
            "edge " + std::to_string(e) + " has sign outside {+1,-1}");
    if (!allow_loops) {
      require(map.dart_vertex_[2 * e] != map.dart_vertex_[2 * e + 1],
              ErrorCode::LoopPresent,
              "edge " + std::to_string(e) +
                  " is a loop; loopless input is required");
    }
  }
  map.rotations_ = std::move(rotations);
  return map;
}

SurfaceMap SurfaceMap::build(int n, std::vector<std::vector<Dart>> rotations,
                             std::vector<int8_t> edge_signs, Surface surface) {
  return buildImpl(n, std::move(rotations), std::move(edge_signs), surface,
                   /*allow_loops=*/false);
}

SurfaceMap SurfaceMap::buildAllowLoops(int n,
                                       std::vector<std::vector<Dart>> rotations,
                                       std::vector<int8_t> edge_signs,
                                       Surface surface) {
  return buildImpl(n, std::move(rotations), std::move(edge_signs), surface,
                   /*allow_loops=*/true);
}

SurfaceMap buildMap(int n, std::vector<std::vector<Dart>> rotations,
                    std::vector<int8_t> edge_signs, Surface surface) {
  return SurfaceMap::build(n, std::move(rotations), std::move(edge_signs),
                           surface);
}

bool SurfaceMap::hasNegativeSigns() const {
  return std::any_of(edge_signs_.begin(), edge_signs_.end(),
                     [](int8_t s) { return s < 0; });
}

namespace {

// State of the face walk: dart plus accumulated sign, packed as 2*dart+bit.
inline int packState(Dart d, int sigma) { return 2 * d.id + (sigma < 0 ? 1 : 0); }
inline Dart stateDart(int s) { return Dart(s >> 1); }
inline int stateSigma(int s) { return (s & 1) ? -1 : 1; }

inline int walkNext(const SurfaceMap& map, int state) {
  Dart d = stateDart(state);
  int sigma = stateSigma(state) * map.sign(d.edge());
  Dart next = sigma > 0 ? map.rotationSucc(d.twin()) : map.rotationPred(d.twin());
  return packState(next, sigma);
}

// Reverse traversal of the same edge side; pairs each orbit with the orbit
// that walks the same face boundary in the opposite direction.
inline int mirrorState(const SurfaceMap& map, int state) {
  Dart d = stateDart(state);
  int sigma = -stateSigma(state) * map.sign(d.edge());
  return packState(d.twin(), sigma);
}

}  // namespace

FaceSet faceCycles(const SurfaceMap& map) {
  const int states = 4 * map.edgeCount();
  std::vector<int> orbit_of(states, -1);
  std::vector<std::vector<int>> orbits;

  for (int s0 = 0; s0 < states; ++s0) {
    if (orbit_of[s0] >= 0) continue;
    std::vector<int> orbit;
    int s = s0;
    do {
      orbit_of[s] = static_cast<int>(orbits.size());
      orbit.push_back(s);
      s = walkNext(map, s);
    } while (s != s0);
    orbits.push_back(std::move(orbit));
  }

  // Pick one representative per mirror pair: the orbit with more +1 states,
  // ties broken toward the orbit holding the smallest packed state. On
  // all-positive maps this selects exactly the sigma=+1 orbits.
  std::vector<char> emit(orbits.size(), 0);
  std::vector<char> seen(orbits.size(), 0);
  auto plusCount = [](const std::vector<int>& orbit) {
    int c = 0;
    for (int st : orbit) c += (st & 1) == 0;
    return c;
  };
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (seen[i]) continue;
    size_t mirror = orbit_of[mirrorState(map, orbits[i][0])];
    seen[i] = 1;
    seen[mirror] = 1;
    if (mirror == i) {
      emit[i] = 1;
      continue;
    }
    int pi = plusCount(orbits[i]);
    int pm = plusCount(orbits[mirror]);
    size_t pick;
    if (pi != pm) {
      pick = pi > pm ? i : mirror;
    } else {
      pick = *std::min_element(orbits[i].begin(), orbits[i].end()) <
                     *std::min_element(orbits[mirror].begin(),
                                       orbits[mirror].end())
                 ? i
                 : mirror;
    }
    emit[pick] = 1;
  }

  FaceSet out;
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (!emit[i]) continue;
    FaceCycle f;
    f.darts.reserve(orbits[i].size());
    f.orient.reserve(orbits[i].size());
    for (int st : orbits[i]) {
      f.darts.push_back(stateDart(st));
      f.orient.push_back(static_cast<int8_t>(stateSigma(st)));
    }
    std::vector<VertexId> corners;
    corners.reserve(f.darts.size());
    for (Dart d : f.darts) corners.push_back(map.tail(d));
    std::sort(corners.begin(), corners.end());
    f.simple = std::adjacent_find(corners.begin(), corners.end()) == corners.end();
    out.faces.push_back(std::move(f));
  }
  return out;
}

int eulerCharacteristic(const SurfaceMap& map) {
  return map.vertexCount() - map.edgeCount() + faceCycles(map).size();
}

std::vector<int> faceOfDart(const SurfaceMap& map, const FaceSet& faces) {
  std::vector<int> owner(map.dartCount(), -1);
  for (int i = 0; i < faces.size(); ++i) {
    for (Dart d : faces.faces[i].darts) owner[d.id] = i;
  }
  return owner;
}

bool isTwoConnected(const SurfaceMap& map) {
  const int n = map.vertexCount();
  if (n < 3) return n == 2 && map.edgeCount() >= 2;

  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1);
  int timer = 0;
  int visited = 0;
  bool has_cut = false;

  // iterative DFS over darts; parallel edges count as distinct
  std::vector<std::pair<VertexId, int>> stack;  // (vertex, rotation position)
  disc[0] = low[0] = timer++;
  ++visited;
  stack.push_back({0, 0});
  int root_children = 0;

  while (!stack.empty()) {
    auto& [v, idx] = stack.back();
    if (idx >= map.degree(v)) {
      stack.pop_back();
      if (!stack.empty()) {
        VertexId u = stack.back().first;
        low[u] = std::min(low[u], low[v]);
        if (u != 0 && low[v] >= disc[u]) has_cut = true;
      }
      continue;
    }
    Dart d = map.rotation(v)[idx];
    ++idx;
    if (d.id == parent_edge[v]) continue;  // skip the dart we came in on
    VertexId w = map.head(d);
    if (w == v) continue;  // loop edge, irrelevant to connectivity
    if (disc[w] < 0) {
      disc[w] = low[w] = timer++;
      ++visited;
      parent_edge[w] = d.twin().id;
      if (v == 0) ++root_children;
      stack.push_back({w, 0});
    } else {
      low[v] = std::min(low[v], disc[w]);
    }
  }

  require(visited == n, ErrorCode::Disconnected,
          "graph is not connected (" + std::to_string(visited) + " of " +
              std::to_string(n) + " vertices reachable)");
  if (root_children > 1) has_cut = true;
  return !has_cut;
}

}  // namespace torvis
