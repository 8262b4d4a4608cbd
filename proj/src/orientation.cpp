#include "torvis/orientation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>
#include <string>

namespace torvis {

MultiSplit splitAtAllPaths(const SurfaceMap& map,
                           const std::vector<std::vector<Dart>>& paths) {
  MultiSplit ms;
  ms.map = map;
  ms.orig_vertex.resize(map.vertexCount());
  std::iota(ms.orig_vertex.begin(), ms.orig_vertex.end(), 0);
  ms.orig_edge.resize(map.edgeCount());
  std::iota(ms.orig_edge.begin(), ms.orig_edge.end(), 0);

  // Paths are edge-disjoint, so later splits never duplicate an earlier
  // path's darts; dart ids stay valid throughout.
  for (const auto& path : paths) {
    SplitResult sr = splitAtPath(ms.map, path);
    std::vector<VertexId> ov(sr.map.vertexCount());
    for (VertexId v = 0; v < sr.map.vertexCount(); ++v)
      ov[v] = ms.orig_vertex[sr.orig_vertex[v]];
    std::vector<EdgeId> oe(sr.map.edgeCount());
    for (EdgeId e = 0; e < sr.map.edgeCount(); ++e)
      oe[e] = ms.orig_edge[sr.orig_edge[e]];
    ms.map = std::move(sr.map);
    ms.orig_vertex = std::move(ov);
    ms.orig_edge = std::move(oe);
  }
  return ms;
}

namespace {

// Extends a partial order (a seeded skeleton in which every non-terminal
// vertex already has an in- and an out-edge) to a full st-order by
// inserting open ears. `attempt` perturbs the scan order.
StOrder growEars(const SurfaceMap& map, std::vector<VertexId> seq,
                 std::vector<char> v_marked, std::vector<char> e_marked,
                 int attempt);

}  // namespace

// Public variant used by the path-respecting orientation: the seed is the
// topologically ordered path skeleton.
StOrder growEarsSeeded(const SurfaceMap& map, std::vector<VertexId> seq,
                       std::vector<char> v_marked, std::vector<char> e_marked);

StOrder stNumber(const SurfaceMap& map, VertexId s, VertexId t, int attempt) {
  require(s != t, ErrorCode::NotTwoConnected, "source equals sink");
  require(isTwoConnected(map), ErrorCode::NotTwoConnected,
          "st-order requires a 2-connected graph");
  const int n = map.vertexCount();

  std::vector<char> v_marked(n, 0);
  std::vector<char> e_marked(map.edgeCount(), 0);
  std::vector<VertexId> seq;

  // initial ear: a DFS path from s to t, scanning rotations from an
  // attempt-dependent offset for the retry policy
  {
    std::vector<Dart> via(n, Dart());
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack = {s};
    seen[s] = 1;
    while (!stack.empty() && !seen[t]) {
      VertexId v = stack.back();
      stack.pop_back();
      const auto& r = map.rotation(v);
      const int deg = static_cast<int>(r.size());
      for (int i = 0; i < deg; ++i) {
        Dart dd = r[(i + attempt) % deg];
        VertexId w = map.head(dd);
        if (!seen[w]) {
          seen[w] = 1;
          via[w] = dd;
          stack.push_back(w);
        }
      }
    }
    require(seen[t], ErrorCode::Disconnected, "sink unreachable");
    std::vector<VertexId> rev;
    for (VertexId v = t; v != s; v = map.tail(via[v])) rev.push_back(v);
    rev.push_back(s);
    seq.assign(rev.rbegin(), rev.rend());
    for (VertexId v : seq) v_marked[v] = 1;
    for (VertexId v = t; v != s; v = map.tail(via[v]))
      e_marked[via[v].edge()] = 1;
  }
  return growEars(map, std::move(seq), std::move(v_marked),
                  std::move(e_marked), attempt);
}

namespace {

StOrder growEars(const SurfaceMap& map, std::vector<VertexId> seq,
                 std::vector<char> v_marked, std::vector<char> e_marked,
                 int attempt) {
  const int n = map.vertexCount();

  // insert open ears until every edge is placed
  int remaining = map.edgeCount() -
                  static_cast<int>(std::count(e_marked.begin(), e_marked.end(), 1));
  while (remaining > 0) {
    // find an unmarked edge leaving a marked vertex, scanning seq in order
    VertexId a = -1;
    Dart first;
    for (VertexId v : seq) {
      const auto& r = map.rotation(v);
      const int deg = static_cast<int>(r.size());
      for (int i = 0; i < deg; ++i) {
        Dart dd = r[(i + attempt) % deg];
        if (!e_marked[dd.edge()]) {
          a = v;
          first = dd;
          break;
        }
      }
      if (a >= 0) break;
    }
    require(a >= 0, ErrorCode::NotTwoConnected, "unreached edges remain");

    // walk through unmarked vertices until hitting a marked vertex != a;
    // BFS through the unmarked region, forbidding a as re-entry
    std::vector<Dart> ear = {first};
    VertexId cur = map.head(first);
    if (v_marked[cur]) {
      require(cur != a, ErrorCode::LoopPresent, "loop edge in ear search");
    } else {
      std::vector<Dart> via(map.vertexCount(), Dart());
      std::deque<VertexId> q = {cur};
      std::vector<char> seen(map.vertexCount(), 0);
      seen[cur] = 1;
      VertexId hit = -1;
      while (!q.empty() && hit < 0) {
        VertexId v = q.front();
        q.pop_front();
        const auto& r = map.rotation(v);
        const int deg = static_cast<int>(r.size());
        for (int i = 0; i < deg && hit < 0; ++i) {
          Dart dd = r[(i + attempt) % deg];
          if (e_marked[dd.edge()] || dd.edge() == first.edge()) continue;
          VertexId w = map.head(dd);
          if (v_marked[w]) {
            if (w == a) continue;  // would close the ear; 2-connectivity
                                   // guarantees another exit
            via[w] = dd;
            hit = w;
            break;
          }
          if (!seen[w]) {
            seen[w] = 1;
            via[w] = dd;
            q.push_back(w);
          }
        }
      }
      require(hit >= 0, ErrorCode::NotTwoConnected,
              "ear from vertex " + std::to_string(a) + " cannot reach a "
              "second anchor");
      std::vector<Dart> tail_rev;
      for (VertexId v = hit; v != cur; v = map.tail(via[v]))
        tail_rev.push_back(via[v]);
      ear.insert(ear.end(), tail_rev.rbegin(), tail_rev.rend());
    }

    // ear runs a -> ... -> b; direct it from the earlier endpoint and insert
    // the interior right after that endpoint
    VertexId b = map.head(ear.back());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) pos[seq[i]] = i;
    std::vector<VertexId> interior;
    for (size_t i = 0; i + 1 < ear.size(); ++i) interior.push_back(map.head(ear[i]));
    VertexId lo = pos[a] < pos[b] ? a : b;
    if (lo == b) std::reverse(interior.begin(), interior.end());
    seq.insert(seq.begin() + pos[lo] + 1, interior.begin(), interior.end());
    for (Dart dd : ear) e_marked[dd.edge()] = 1;
    for (VertexId v : interior) v_marked[v] = 1;
    remaining -= static_cast<int>(ear.size());
  }

  StOrder out;
  out.order = std::move(seq);
  out.index.assign(n, -1);
  for (int i = 0; i < n; ++i) out.index[out.order[i]] = i;
  return out;
}

}  // namespace

StOrder growEarsSeeded(const SurfaceMap& map, std::vector<VertexId> seq,
                       std::vector<char> v_marked,
                       std::vector<char> e_marked) {
  return growEars(map, std::move(seq), std::move(v_marked),
                  std::move(e_marked), 0);
}

bool isBipolar(const SurfaceMap& map, const StOrder& order, VertexId s,
               VertexId t) {
  const int n = map.vertexCount();
  if (order.index[s] != 0 || order.index[t] != n - 1) return false;
  for (VertexId v = 0; v < n; ++v) {
    bool has_in = false, has_out = false;
    for (Dart d : map.rotation(v)) {
      int dv = order.index[map.head(d)] - order.index[v];
      if (dv == 0) return false;
      (dv > 0 ? has_out : has_in) = true;
    }
    if (v != s && !has_in) return false;
    if (v != t && !has_out) return false;
  }
  return true;
}

void verifyFaceLaw(const SurfaceMap& map, const StOrder& order) {
  FaceSet fs = faceCycles(map);
  for (const FaceCycle& f : fs.faces) {
    int sources = 0, sinks = 0;
    const int L = f.degree();
    for (int k = 0; k < L; ++k) {
      Dart in = f.darts[(k + L - 1) % L];
      Dart out = f.darts[k];
      VertexId v = map.tail(out);
      bool in_fwd = order.index[map.tail(in)] < order.index[v];
      bool out_fwd = order.index[v] < order.index[map.head(out)];
      if (!in_fwd && out_fwd) ++sources;
      if (in_fwd && !out_fwd) ++sinks;
    }
    require(sources == 1 && sinks == 1, ErrorCode::FaceSourceSinkViolation,
            "face has " + std::to_string(sources) + " sources and " +
                std::to_string(sinks) + " sinks");
  }
}

namespace {

// Topological order of the merged orientation; empty on a cycle.
std::vector<VertexId> topoOrder(int n,
                                const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : arcs) {
    out[a].push_back(b);
    indeg[b]++;
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<VertexId> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n) order.clear();
  return order;
}

}  // namespace

StOrder respectingOrientation(const PathSystem& ps) {
  if (ps.d == 0) {
    StOrder out = stNumber(ps.ghat, ps.s, ps.t, 0);
    require(isBipolar(ps.ghat, out, ps.s, ps.t), ErrorCode::MergedCycle,
            "st-order is not bipolar");
    verifyFaceLaw(ps.ghat, out);
    return out;
  }

  // Lemma route artifacts: the fully split map must be a 2-connected plane
  // map (every face a simple cycle).
  MultiSplit ms = splitAtAllPaths(ps.ghat, ps.paths);
  require(eulerCharacteristic(ms.map) == 2, ErrorCode::FaceSourceSinkViolation,
          "split map is not plane");
  require(isTwoConnected(ms.map), ErrorCode::NotTwoConnected,
          "split map is not 2-connected");

  // Directing every path from s to t must itself be acyclic; also one
  // underlying edge must not be traversed in both directions. This can fail
  // for a badly chosen spine; callers then retry with another spine.
  const int n = ps.ghat.vertexCount();
  std::vector<char> v_marked(n, 0);
  std::vector<char> e_marked(ps.ghat.edgeCount(), 0);
  std::vector<std::pair<int, int>> skeleton_arcs;
  for (const auto& path : ps.paths) {
    for (Dart d : path) {
      skeleton_arcs.push_back({ps.ghat.tail(d), ps.ghat.head(d)});
      e_marked[d.edge()] = 1;
      v_marked[ps.ghat.tail(d)] = 1;
      v_marked[ps.ghat.head(d)] = 1;
    }
  }
  std::vector<VertexId> skeleton;
  {
    std::vector<std::vector<int>> out_arcs(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : skeleton_arcs) {
      out_arcs[a].push_back(b);
      indeg[b]++;
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (VertexId v = 0; v < n; ++v)
      if (v_marked[v] && indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
      int v = ready.top();
      ready.pop();
      skeleton.push_back(v);
      for (int w : out_arcs[v]) {
        if (--indeg[w] == 0) ready.push(w);
      }
    }
    int marked = static_cast<int>(std::count(v_marked.begin(), v_marked.end(), 1));
    require(static_cast<int>(skeleton.size()) == marked, ErrorCode::MergedCycle,
            "directing the path system from s to t creates a cycle");
    require(skeleton.front() == ps.s && skeleton.back() == ps.t,
            ErrorCode::MergedCycle, "path skeleton poles are not s and t");
  }

  // Grow the skeleton to a full st-order by open-ear insertion; every path
  // stays increasing because its arcs are already forward in the seed.
  StOrder out = growEarsSeeded(ps.ghat, skeleton, v_marked, e_marked);

  require(isBipolar(ps.ghat, out, ps.s, ps.t), ErrorCode::MergedCycle,
          "extended orientation is not bipolar");
  for (int p = 0; p < ps.d; ++p) {
    auto seq = ps.pathVertices(p);
    for (size_t i = 0; i + 1 < seq.size(); ++i)
      require(out.index[seq[i]] < out.index[seq[i + 1]], ErrorCode::MergedCycle,
              "path " + std::to_string(p) + " is not increasing");
  }
  verifyFaceLaw(ps.ghat, out);
  return out;
}

}  // namespace torvis
