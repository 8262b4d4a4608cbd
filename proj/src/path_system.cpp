#include "torvis/path_system.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <array>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

namespace torvis {

namespace {

std::vector<VertexId> pathVertexSeq(const SurfaceMap& map,
                                    const std::vector<Dart>& path) {
  std::vector<VertexId> seq;
  seq.reserve(path.size() + 1);
  seq.push_back(map.tail(path.front()));
  for (Dart d : path) seq.push_back(map.head(d));
  return seq;
}

void requireSimplePath(const SurfaceMap& map, const std::vector<Dart>& path) {
  require(!path.empty(), ErrorCode::PathNotSimple, "empty path");
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    require(map.head(path[i]) == map.tail(path[i + 1]),
            ErrorCode::PathNotSimple, "dart sequence is not a walk");
  }
  auto sorted = pathVertexSeq(map, path);
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          ErrorCode::PathNotSimple, "path revisits a vertex");
}

}  // namespace

std::vector<VertexId> PathSystem::pathVertices(int i) const {
  return pathVertexSeq(ghat, paths[i]);
}

SplitResult splitAtPath(const SurfaceMap& g, const std::vector<Dart>& path) {
  requireSimplePath(g, path);
  const int n = g.vertexCount();
  const int m = g.edgeCount();
  const int k = static_cast<int>(path.size());
  auto seq = pathVertexSeq(g, path);

  SplitResult out;
  out.path_s = seq.front();
  out.path_t = seq.back();
  out.right_of.assign(n, -1);
  for (int i = 1; i < k; ++i) out.right_of[seq[i]] = n + i - 1;

  out.orig_vertex.resize(n + k - 1);
  std::iota(out.orig_vertex.begin(), out.orig_vertex.begin() + n, 0);
  for (int i = 1; i < k; ++i) out.orig_vertex[n + i - 1] = seq[i];

  out.orig_edge.resize(m + k);
  std::iota(out.orig_edge.begin(), out.orig_edge.begin() + m, 0);
  for (int i = 0; i < k; ++i) out.orig_edge[m + i] = path[i].edge();

  out.left_path = path;
  out.right_path.resize(k);
  for (int i = 0; i < k; ++i) out.right_path[i] = Dart::forward(m + i);

  std::vector<std::vector<Dart>> rot(n + k - 1);
  for (VertexId v = 0; v < n; ++v)
    if (out.right_of[v] < 0) rot[v] = g.rotation(v);

  // Interior vertices: enumerate the rotation from the incoming path dart.
  // Darts strictly before the outgoing dart stay on the left copy, darts
  // after it move to the right copy.
  for (int i = 1; i < k; ++i) {
    VertexId v = seq[i];
    Dart in_at_v = path[i - 1].twin();
    Dart out_at_v = path[i];
    const auto& r = g.rotation(v);
    const int deg = static_cast<int>(r.size());
    int start = g.rotationIndex(in_at_v);
    std::vector<Dart> left = {in_at_v};
    std::vector<Dart> right_block;
    bool after_out = false;
    for (int s = 1; s < deg; ++s) {
      Dart d = r[(start + s) % deg];
      if (d == out_at_v) {
        after_out = true;
        continue;
      }
      (after_out ? right_block : left).push_back(d);
    }
    require(after_out, ErrorCode::PathNotSimple,
            "outgoing path dart missing from rotation");
    left.push_back(out_at_v);
    std::vector<Dart> right = {Dart::forward(m + i)};
    right.insert(right.end(), right_block.begin(), right_block.end());
    right.push_back(Dart::backward(m + i - 1));
    rot[v] = std::move(left);
    rot[n + i - 1] = std::move(right);
  }

  // Endpoints: expand the terminal path-edge slots into copy pairs so the
  // new face lies between the copies: clockwise (left,right) at the source
  // and (right,left) at the sink.
  {
    auto& rs = rot[seq.front()];
    int pos = g.rotationIndex(path.front());
    rs.insert(rs.begin() + pos + 1, Dart::forward(m + 0));

    auto& rt = rot[seq.back()];
    Dart in_at_t = path.back().twin();
    auto it = std::find(rt.begin(), rt.end(), in_at_t);
    require(it != rt.end(), ErrorCode::PathNotSimple, "sink dart missing");
    rt.insert(it, Dart::backward(m + k - 1));
  }

  std::vector<int8_t> signs(m + k, 1);
  for (EdgeId e = 0; e < m; ++e) signs[e] = static_cast<int8_t>(g.sign(e));
  for (int i = 0; i < k; ++i)
    signs[m + i] = static_cast<int8_t>(g.sign(path[i].edge()));

  out.map = SurfaceMap::build(n + k - 1, std::move(rot), std::move(signs),
                              g.surface());
  return out;
}

SurfaceMap mergeSplit(const SplitResult& split) {
  const SurfaceMap& h = split.map;
  const int k = static_cast<int>(split.left_path.size());
  const int m = h.edgeCount() - k;
  const int n = h.vertexCount() - (k - 1);

  std::vector<std::vector<Dart>> rot(n);
  for (VertexId v = 0; v < n; ++v) {
    if (split.right_of[v] < 0) {
      rot[v] = h.rotation(v);
      continue;
    }
    const auto& l = h.rotation(v);
    const auto& r = h.rotation(split.right_of[v]);
    rot[v].assign(l.begin(), l.end());
    rot[v].insert(rot[v].end(), r.begin() + 1, r.end() - 1);
  }
  auto strip = [&](VertexId v) {
    auto& rv = rot[v];
    rv.erase(std::remove_if(rv.begin(), rv.end(),
                            [&](Dart d) { return d.edge() >= m; }),
             rv.end());
  };
  strip(split.path_s);
  strip(split.path_t);

  std::vector<int8_t> signs(h.edgeSigns().begin(), h.edgeSigns().begin() + m);
  return SurfaceMap::build(n, std::move(rot), std::move(signs), h.surface());
}

namespace {

// The arc of the face in the corner between (s,s_d) and (s,s_1), when it
// runs simply from s to (t_1,t).
std::optional<std::vector<Dart>> wrapFaceArc(const CutGraph& cut) {
  const SurfaceMap& p = cut.plane;
  Dart d = p.rotation(cut.s)[0];
  std::vector<Dart> arc;
  for (int guard = 0; guard <= 2 * p.edgeCount() + 1; ++guard) {
    arc.push_back(d);
    VertexId v = p.head(d);
    if (v == cut.t) {
      if (d.edge() != cut.stub_t[0]) return std::nullopt;
      std::vector<VertexId> seq;
      seq.push_back(p.tail(arc.front()));
      for (Dart dd : arc) seq.push_back(p.head(dd));
      std::sort(seq.begin(), seq.end());
      if (std::adjacent_find(seq.begin(), seq.end()) != seq.end())
        return std::nullopt;
      return arc;
    }
    if (v == cut.s) return std::nullopt;
    d = p.rotationSucc(d.twin());
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::vector<Dart>> spineCandidates(const CutGraph& cut,
                                               size_t limit) {
  const SurfaceMap& p = cut.plane;
  require(cut.d >= 1, ErrorCode::WrapFaceNotFound, "no bottom crossings");
  Dart first = p.rotation(cut.s)[0];
  EdgeId last_edge = cut.stub_t[0];

  std::vector<std::vector<Dart>> all;
  std::vector<char> visited(p.vertexCount(), 0);
  visited[cut.s] = 1;
  std::vector<Dart> stack = {first};
  std::function<void()> dfs = [&]() {
    if (all.size() >= 4 * limit + 4096) return;  // enumeration budget
    VertexId v = p.head(stack.back());
    if (v == cut.t) {
      if (stack.back().edge() == last_edge) all.push_back(stack);
      return;
    }
    if (visited[v]) return;
    visited[v] = 1;
    for (Dart cand : p.rotation(v)) {
      if (cand.edge() == stack.back().edge()) continue;
      VertexId w = p.head(cand);
      if (w != cut.t && visited[w]) continue;
      if (w == cut.t && cand.edge() != last_edge) continue;
      stack.push_back(cand);
      dfs();
      stack.pop_back();
    }
    visited[v] = 0;
  };
  dfs();
  require(!all.empty(), ErrorCode::WrapFaceNotFound,
          "no simple path from (s,s_1) to (t_1,t) exists in the cut graph");

  std::sort(all.begin(), all.end(),
            [](const std::vector<Dart>& a, const std::vector<Dart>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
              return false;
            });
  if (auto arc = wrapFaceArc(cut)) {
    auto it = std::find(all.begin(), all.end(), *arc);
    if (it != all.end()) all.erase(it);
    all.insert(all.begin(), *arc);
  }
  if (all.size() > limit) all.resize(limit);
  return all;
}

std::vector<Dart> wrapFacePath(const CutGraph& cut) {
  return spineCandidates(cut, 1).front();
}

namespace {

// A lane of an edge carrying one unit of flow. Lane k of an edge runs in
// slot order k at the flow tail and mirrored at the flow head, which keeps
// the parallel bundle planar.
struct FlowUnit {
  bool out;     // leaves the vertex
  EdgeId edge;
  int lane;
};

}  // namespace

std::vector<std::vector<Dart>> rightFirstPaths(
    const SurfaceMap& map, VertexId t, const std::vector<int>& capacities,
    const std::vector<Dart>& start_order,
    std::vector<std::vector<int>>* lanes_out) {
  require(!start_order.empty(), ErrorCode::FlowDeficit, "no start darts");
  const VertexId s = map.tail(start_order[0]);
  const int want = static_cast<int>(start_order.size());

  // max flow by shortest augmenting paths; deterministic rotation-order BFS
  std::vector<int> flow(map.dartCount(), 0);
  auto residual = [&](Dart d) { return capacities[d.edge()] - flow[d.id]; };
  int value = 0;
  while (value < want) {
    std::vector<Dart> via(map.vertexCount(), Dart());
    std::vector<char> seen(map.vertexCount(), 0);
    seen[s] = 1;
    std::vector<VertexId> queue = {s};
    for (size_t qi = 0; qi < queue.size() && !seen[t]; ++qi) {
      VertexId v = queue[qi];
      for (Dart d : map.rotation(v)) {
        VertexId w = map.head(d);
        if (seen[w] || residual(d) <= 0) continue;
        seen[w] = 1;
        via[w] = d;
        queue.push_back(w);
        if (w == t) break;
      }
    }
    require(seen[t], ErrorCode::FlowDeficit,
            "flow value " + std::to_string(value) + " of " +
                std::to_string(want));
    for (VertexId v = t; v != s; v = map.tail(via[v])) {
      flow[via[v].id] += 1;
      flow[via[v].twin().id] -= 1;
    }
    ++value;
  }

  // cancel directed cycles in the flow support so that every decomposed
  // path is automatically simple
  {
    // iterative DFS marking; on a back arc, subtract one unit around the
    // cycle and restart
    bool changed = true;
    long guard = 0;
    while (changed) {
      require(++guard < 100000, ErrorCode::FlowDeficit,
              "cycle cancellation does not terminate");
      changed = false;
      std::vector<int> state(map.vertexCount(), 0);  // 0 new 1 open 2 done
      std::vector<Dart> via(map.vertexCount(), Dart());
      std::function<bool(VertexId)> dfs = [&](VertexId v) -> bool {
        state[v] = 1;
        for (Dart d : map.rotation(v)) {
          if (flow[d.id] <= 0) continue;
          VertexId w = map.head(d);
          if (state[w] == 1) {
            // cycle w -> ... -> v -> w
            flow[d.id] -= 1;
            flow[d.twin().id] += 1;
            for (VertexId x = v; x != w; x = map.tail(via[x])) {
              flow[via[x].id] -= 1;
              flow[via[x].twin().id] += 1;
            }
            return true;
          }
          if (state[w] == 0) {
            via[w] = d;
            if (dfs(w)) return true;
          }
        }
        state[v] = 2;
        return false;
      };
      for (VertexId v = 0; v < map.vertexCount() && !changed; ++v)
        if (state[v] == 0 && dfs(v)) changed = true;
    }
  }

  // per-vertex circular unit sequences and the nearest-clockwise pairing
  // of in-units to out-units; this is the planar (non-crossing) matching
  const int m = map.edgeCount();
  auto laneCount = [&](EdgeId e) {
    return std::abs(flow[Dart::forward(e).id]);
  };
  auto flowDart = [&](EdgeId e) {
    return flow[Dart::forward(e).id] > 0 ? Dart::forward(e)
                                         : Dart::backward(e);
  };
  // pairing[e][lane] = (edge', lane') taken when arriving on lane of e
  std::vector<std::vector<std::pair<EdgeId, int>>> pairing(m);
  for (EdgeId e = 0; e < m; ++e)
    pairing[e].assign(laneCount(e), {-1, -1});

  for (VertexId v = 0; v < map.vertexCount(); ++v) {
    if (v == s || v == t) continue;
    std::vector<FlowUnit> units;
    for (Dart d : map.rotation(v)) {
      EdgeId e = d.edge();
      int lanes = laneCount(e);
      if (lanes == 0) continue;
      bool outgoing = flowDart(e) == d;
      if (outgoing) {
        for (int k = 0; k < lanes; ++k) units.push_back({true, e, k});
      } else {
        for (int k = lanes - 1; k >= 0; --k) units.push_back({false, e, k});
      }
    }
    if (units.empty()) continue;
    const int U = static_cast<int>(units.size());
    std::vector<char> used(U, 0);
    int remaining = U;
    long guard = 0;
    while (remaining > 0) {
      require(++guard < 100000, ErrorCode::FlowDeficit, "pairing stuck");
      for (int i = 0; i < U; ++i) {
        if (used[i] || units[i].out) continue;
        // next unmatched unit clockwise must be an out-unit
        int j = (i + 1) % U;
        while (used[j]) j = (j + 1) % U;
        if (!units[j].out) continue;
        pairing[units[i].edge][units[i].lane] = {units[j].edge,
                                                 units[j].lane};
        used[i] = used[j] = 1;
        remaining -= 2;
      }
    }
  }

  // peel one path per start stub, following lanes through the pairing
  std::vector<std::vector<Dart>> paths;
  if (lanes_out) lanes_out->assign(want, {});
  for (int j = 0; j < want; ++j) {
    Dart d0 = start_order[j];
    require(laneCount(d0.edge()) == 1 && flowDart(d0.edge()) == d0,
            ErrorCode::FlowDeficit,
            "start stub " + std::to_string(j) + " carries no forward flow");
    std::vector<Dart> path = {d0};
    std::vector<int> lanes = {0};
    EdgeId e = d0.edge();
    int lane = 0;
    long guard = 0;
    while (map.head(path.back()) != t) {
      require(++guard < 1000000, ErrorCode::FlowDeficit,
              "lane walk does not terminate");
      auto [ne, nl] = pairing[e][lane];
      require(ne >= 0, ErrorCode::FlowDeficit,
              "unpaired in-unit at vertex " +
                  std::to_string(map.head(path.back())));
      path.push_back(flowDart(ne));
      lanes.push_back(nl);
      e = ne;
      lane = nl;
    }
    requireSimplePath(map, path);
    paths.push_back(std::move(path));
    if (lanes_out) (*lanes_out)[j] = std::move(lanes);
  }
  return paths;
}

void verifyNonCrossing(const SurfaceMap& map,
                       const std::vector<std::vector<Dart>>& paths) {
  std::vector<std::vector<std::array<int, 3>>> visits(map.vertexCount());
  for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
    const auto& path = paths[p];
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      VertexId v = map.head(path[i]);
      visits[v].push_back({p, path[i].twin().id, path[i + 1].id});
    }
  }
  for (VertexId v = 0; v < map.vertexCount(); ++v) {
    const auto& vis = visits[v];
    for (size_t a = 0; a < vis.size(); ++a) {
      for (size_t b = a + 1; b < vis.size(); ++b) {
        std::array<std::pair<int, int>, 4> ds = {
            std::make_pair(map.rotationIndex(Dart(vis[a][1])), 0),
            std::make_pair(map.rotationIndex(Dart(vis[a][2])), 0),
            std::make_pair(map.rotationIndex(Dart(vis[b][1])), 1),
            std::make_pair(map.rotationIndex(Dart(vis[b][2])), 1)};
        std::sort(ds.begin(), ds.end());
        bool ok =
            (ds[0].second == ds[1].second && ds[2].second == ds[3].second) ||
            (ds[1].second == ds[2].second && ds[3].second == ds[0].second);
        require(ok, ErrorCode::NonCrossingViolation,
                "paths " + std::to_string(vis[a][0]) + " and " +
                    std::to_string(vis[b][0]) + " cross at vertex " +
                    std::to_string(v));
      }
    }
  }
}

PathSystem buildPathSystem(const CutGraph& cut) {
  return buildPathSystem(cut, wrapFacePath(cut));
}

PathSystem buildPathSystem(const CutGraph& cut, const std::vector<Dart>& spine) {
  const SurfaceMap& plane = cut.plane;
  const int d = cut.d;

  const std::vector<Dart>& pi = spine;
  SplitResult split = splitAtPath(plane, pi);
  const SurfaceMap& g2 = split.map;

  std::vector<int> caps(g2.edgeCount(), d + 1);
  for (EdgeId e = 0; e < g2.edgeCount(); ++e) {
    if (g2.tail(Dart::forward(e)) == cut.s || g2.tail(Dart::forward(e)) == cut.t ||
        g2.tail(Dart::backward(e)) == cut.s || g2.tail(Dart::backward(e)) == cut.t)
      caps[e] = 1;
  }

  // launch order: s's rotation starting at the right copy of (s,s_1), i.e.
  // beginning just after the corner of the new face
  const auto& rs = g2.rotation(cut.s);
  int start_pos = g2.rotationIndex(split.right_path.front());
  std::vector<Dart> starts(d + 1);
  for (int j = 0; j <= d; ++j)
    starts[j] = rs[(start_pos + j) % rs.size()];

  std::vector<std::vector<int>> lanes;
  auto walks = rightFirstPaths(g2, cut.t, caps, starts, &lanes);

  // drop the last walk: it uses the left copies of (s,s_1) and (t_1,t),
  // which do not survive recombination
  walks.pop_back();
  lanes.pop_back();
  for (int i = 0; i < d; ++i) {
    EdgeId first_orig = split.orig_edge[walks[i].front().edge()];
    EdgeId last_orig = split.orig_edge[walks[i].back().edge()];
    require(first_orig == cut.stub_s[i], ErrorCode::FlowDeficit,
            "path " + std::to_string(i) + " starts at stub edge " +
                std::to_string(first_orig));
    require(last_orig == cut.stub_t[i], ErrorCode::FlowDeficit,
            "path " + std::to_string(i) + " ends at stub edge " +
                std::to_string(last_orig));
  }

  // ghat copies: one per kept lane plus a plain copy for untraversed cut
  // edges. Lane k of a g2 edge sits at slot position k on the flow tail
  // side and mirrored on the head side, so the bundles stay planar.
  struct LaneRef {
    EdgeId g2_edge;
    int lane;
  };
  std::vector<std::vector<int>> kept(g2.edgeCount());  // lane -> path or -1
  for (int p = 0; p < d; ++p) {
    for (size_t i = 0; i < walks[p].size(); ++i) {
      EdgeId e2 = walks[p][i].edge();
      int lane = lanes[p][i];
      if (static_cast<int>(kept[e2].size()) <= lane)
        kept[e2].resize(lane + 1, -1);
      kept[e2][lane] = p;
    }
  }

  PathSystem ps;
  ps.s = cut.s;
  ps.t = cut.t;
  ps.d = d;

  // assign ghat ids: per cut edge, lane copies of its g2 copies (left copy
  // first), then a plain copy when nothing was kept
  std::vector<std::vector<EdgeId>> g2_copies_of(plane.edgeCount());
  for (EdgeId e2 = 0; e2 < g2.edgeCount(); ++e2)
    g2_copies_of[split.orig_edge[e2]].push_back(e2);
  // ghat dart id of lane k of g2 edge: lane_gid[e2][k]; plain copies:
  // plain_gid[cut_edge]
  std::vector<std::vector<EdgeId>> lane_gid(g2.edgeCount());
  std::vector<EdgeId> plain_gid(plane.edgeCount(), -1);
  int mhat = 0;
  for (EdgeId ce = 0; ce < plane.edgeCount(); ++ce) {
    bool any = false;
    for (EdgeId e2 : g2_copies_of[ce]) {
      lane_gid[e2].assign(kept[e2].size(), -1);
      for (size_t k = 0; k < kept[e2].size(); ++k) {
        if (kept[e2][k] < 0) continue;
        lane_gid[e2][k] = mhat++;
        any = true;
      }
    }
    if (!any) plain_gid[ce] = mhat++;
  }

  ps.copy_origin.assign(mhat, -1);
  ps.used_by_path.assign(mhat, -1);
  for (EdgeId ce = 0; ce < plane.edgeCount(); ++ce) {
    for (EdgeId e2 : g2_copies_of[ce]) {
      for (size_t k = 0; k < lane_gid[e2].size(); ++k) {
        if (lane_gid[e2][k] < 0) continue;
        ps.copy_origin[lane_gid[e2][k]] = ce;
        ps.used_by_path[lane_gid[e2][k]] = kept[e2][k];
      }
    }
    if (plain_gid[ce] >= 0) ps.copy_origin[plain_gid[ce]] = ce;
  }

  // ghat rotations: walk each class's merged dart cycle and expand slots
  // into lane fans. For a split interior vertex the merged cycle glues the
  // left rotation (in^l .. out^l) to the right rotation (out^r .. in^r).
  auto spineIndexOf = [&](VertexId v) {
    for (size_t i = 1; i < split.left_path.size(); ++i)
      if (plane.head(split.left_path[i - 1]) == v &&
          split.right_of[v] >= 0)
        return static_cast<int>(i);
    return -1;
  };
  // flow orientation of each ghat copy: forward dart tails at the class of
  // the g2 flow tail
  std::vector<VertexId> fwd_tail_class(mhat, -1);

  std::vector<std::vector<Dart>> rot(plane.vertexCount());
  auto emitSlot = [&](VertexId u, Dart dd) {
    // dd: g2 dart with class(tail) == u
    EdgeId e2 = dd.edge();
    EdgeId ce = split.orig_edge[e2];
    if (plain_gid[ce] >= 0) {
      // untraversed cut edge: emit only from its designated g2 copy (the
      // lowest id; a fully unused spine edge has two copies)
      if (e2 != g2_copies_of[ce].front()) return;
      EdgeId gid = plain_gid[ce];
      bool is_fwd_end = dd.isForward();
      Dart out = is_fwd_end ? Dart::forward(gid) : Dart::backward(gid);
      if (getenv("TORVIS_TRACE")) fprintf(stderr, "emit plain gid=%d dart=%d u=%d from e2=%d dd=%d\n", gid, out.id, u, e2, dd.id);
      rot[u].push_back(out);
      if (is_fwd_end) fwd_tail_class[gid] = u;
      return;
    }
    if (lane_gid[e2].empty()) return;  // dropped copy, nothing kept
    // direction of flow on this g2 edge
    bool tail_side = false;
    for (int p = 0; p < d && !tail_side; ++p)
      for (size_t i = 0; i < walks[p].size(); ++i)
        if (walks[p][i].edge() == e2 && walks[p][i] == dd) tail_side = true;
    // more robust: the flow dart is the one the walks traverse
    Dart flow_dart;
    for (int p = 0; p < d && !flow_dart.valid(); ++p)
      for (Dart wd : walks[p])
        if (wd.edge() == e2) {
          flow_dart = wd;
          break;
        }
    if (!flow_dart.valid()) return;  // only dropped lanes
    tail_side = dd == flow_dart;
    const int L = static_cast<int>(lane_gid[e2].size());
    if (tail_side) {
      for (int k = 0; k < L; ++k) {
        if (lane_gid[e2][k] < 0) continue;
        if (getenv("TORVIS_TRACE")) fprintf(stderr, "emit lane gid=%d F u=%d e2=%d k=%d\n", lane_gid[e2][k], u, e2, k);
        rot[u].push_back(Dart::forward(lane_gid[e2][k]));
        fwd_tail_class[lane_gid[e2][k]] = u;
      }
    } else {
      for (int k = L - 1; k >= 0; --k) {
        if (lane_gid[e2][k] < 0) continue;
        rot[u].push_back(Dart::backward(lane_gid[e2][k]));
      }
    }
  };

  for (VertexId u = 0; u < plane.vertexCount(); ++u) {
    int idx = spineIndexOf(u);
    if (idx < 0) {
      for (Dart dd : g2.rotation(u)) emitSlot(u, dd);
    } else {
      // left rotation rotated to start at in^l, then right rotation rotated
      // to start at out^r
      Dart in_l = split.left_path[idx - 1].twin();
      Dart out_r = split.right_path[idx];
      const auto& rl = g2.rotation(u);
      int pl = g2.rotationIndex(in_l);
      for (size_t k = 0; k < rl.size(); ++k)
        emitSlot(u, rl[(pl + k) % rl.size()]);
      VertexId vr = split.right_of[u];
      const auto& rr = g2.rotation(vr);
      int pr = g2.rotationIndex(out_r);
      for (size_t k = 0; k < rr.size(); ++k)
        emitSlot(u, rr[(pr + k) % rr.size()]);
    }
  }

  std::vector<int8_t> signs(mhat, 1);
  ps.ghat = SurfaceMap::build(plane.vertexCount(), std::move(rot),
                              std::move(signs), Surface::cylinder_plane);

  // path dart sequences in ghat
  ps.paths.assign(d, {});
  for (int p = 0; p < d; ++p) {
    for (size_t i = 0; i < walks[p].size(); ++i) {
      EdgeId gid = lane_gid[walks[p][i].edge()][lanes[p][i]];
      VertexId tail_class = split.orig_vertex[g2.tail(walks[p][i])];
      Dart gd = fwd_tail_class[gid] == tail_class ? Dart::forward(gid)
                                                  : Dart::backward(gid);
      ps.paths[p].push_back(gd);
    }
  }

  for (const auto& path : ps.paths) requireSimplePath(ps.ghat, path);
  verifyNonCrossing(ps.ghat, ps.paths);
  return ps;
}

}  // namespace torvis
