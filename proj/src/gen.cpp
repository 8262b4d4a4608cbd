#include "torvis/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace torvis::gen {

namespace {

int pairEdgeId(int n, int a, int b) {
  if (a > b) std::swap(a, b);
  int id = 0;
  for (int i = 0; i < a; ++i) id += n - 1 - i;
  return id + (b - a - 1);
}

SurfaceMap circulant(int n, const std::vector<int>& clockwise_offsets) {
  const int m = n * (n - 1) / 2;
  std::vector<std::vector<Dart>> rot(n);
  for (int v = 0; v < n; ++v) {
    for (int o : clockwise_offsets) {
      int w = (v + o) % n;
      int e = pairEdgeId(n, v, w);
      rot[v].push_back(v < w ? Dart::forward(e) : Dart::backward(e));
    }
  }
  return buildMap(n, rot, std::vector<int8_t>(m, 1), Surface::torus);
}

}  // namespace

SurfaceMap k7Rotation() { return circulant(7, {2, 3, 1, 5, 4, 6}); }

SurfaceMap k5Rotation() { return circulant(5, {2, 1, 3, 4}); }

std::vector<std::pair<int, int>> petersenEdges() {
  // outer cycle 0..4, spokes to 5..9, pentagram 5..9 with step 2
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) e.push_back({i, 5 + i});
  for (int i = 0; i < 5; ++i) e.push_back({5 + i, 5 + (i + 2) % 5});
  return e;
}

void forEachTorusCut(const SurfaceMap& map, int max_d,
                     const std::function<bool(const FlatInput&)>& cb) {
  FaceSet fs = faceCycles(map);
  const int F = fs.size();
  std::vector<int> owner = faceOfDart(map, fs);

  // candidate cuts = simple dual cycles; the up-dart of each crossing is the
  // dart whose own face is the previous face of the cycle
  struct Frame {
    std::vector<int> face_seq;
    std::vector<EdgeId> edge_seq;
  };

  auto tryCycle = [&](const std::vector<EdgeId>& edges,
                      const std::vector<int>& faces_before) -> bool {
    const int k = static_cast<int>(edges.size());
    for (int rot = 0; rot < k; ++rot) {
      std::vector<Dart> bottom(k);
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        EdgeId e = edges[(rot + i) % k];
        int fprev = faces_before[(rot + i) % k];
        Dart fwd = Dart::forward(e), bwd = Dart::backward(e);
        if (owner[fwd.id] == fprev) bottom[i] = fwd;
        else if (owner[bwd.id] == fprev) bottom[i] = bwd;
        else ok = false;
      }
      if (!ok) continue;
      FlatInput cand{map, bottom};
      try {
        cand.validate();
        CutGraph cut = buildCutGraphRaw(cand);
        if (!isTwoConnected(cut.plane)) continue;
      } catch (const Error&) {
        continue;
      }
      if (!cb(cand)) return false;
    }
    return true;
  };

  // DFS over simple dual cycles, enumerated by increasing length
  for (int target = 2; target <= std::min(max_d, 2 * map.edgeCount()); ++target) {
    for (int f0 = 0; f0 < F; ++f0) {
      std::vector<char> face_used(F, 0);
      std::vector<EdgeId> edges;
      std::vector<int> faces_before;
      std::function<bool(int, int)> dfs = [&](int f, int depth) -> bool {
        if (depth == target) {
          // close the cycle back to f0
          for (EdgeId e = 0; e < map.edgeCount(); ++e) {
            int fa = owner[Dart::forward(e).id];
            int fb = owner[Dart::backward(e).id];
            if (!((fa == f && fb == f0) || (fb == f && fa == f0))) continue;
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
              continue;
            edges.push_back(e);
            faces_before.push_back(f);
            if (!tryCycle(edges, faces_before)) return false;
            edges.pop_back();
            faces_before.pop_back();
          }
          return true;
        }
        for (EdgeId e = 0; e < map.edgeCount(); ++e) {
          int fa = owner[Dart::forward(e).id];
          int fb = owner[Dart::backward(e).id];
          int g = fa == f ? fb : (fb == f ? fa : -1);
          if (g < 0 || g == f) continue;
          if (g != f0 && face_used[g]) continue;
          if (g == f0) continue;  // closing handled at full depth
          if (g <= f0) continue;  // canonical: f0 is the smallest face
          if (std::find(edges.begin(), edges.end(), e) != edges.end())
            continue;
          face_used[g] = 1;
          edges.push_back(e);
          faces_before.push_back(f);
          bool go_on = dfs(g, depth + 1);
          edges.pop_back();
          faces_before.pop_back();
          face_used[g] = 0;
          if (!go_on) return false;
        }
        return true;
      };
      face_used[f0] = 1;
      if (!dfs(f0, 1)) return;
    }
  }
}

std::optional<FlatInput> findTorusCut(const SurfaceMap& map) {
  std::optional<FlatInput> out;
  forEachTorusCut(map, map.edgeCount(), [&](const FlatInput& in) {
    out = in;
    return false;
  });
  return out;
}

void forEachRotationSystem(int n, const std::vector<std::pair<int, int>>& ends,
                           const std::vector<int8_t>& signs, Surface surface,
                           const std::function<bool(const SurfaceMap&)>& cb) {
  const int m = static_cast<int>(ends.size());
  std::vector<std::vector<Dart>> incident(n);
  for (int e = 0; e < m; ++e) {
    incident[ends[e].first].push_back(Dart::forward(e));
    incident[ends[e].second].push_back(Dart::backward(e));
  }
  // cyclic orders: pin the first dart, permute the rest lexicographically
  std::vector<std::vector<Dart>> rot = incident;
  std::function<bool(int)> enumerate = [&](int v) -> bool {
    if (v == n) {
      return cb(SurfaceMap::build(n, rot, signs, surface));
    }
    auto& r = rot[v];
    std::vector<Dart> tail(incident[v].begin() + 1, incident[v].end());
    std::sort(tail.begin(), tail.end());
    do {
      r.resize(1);
      r[0] = incident[v][0];
      r.insert(r.end(), tail.begin(), tail.end());
      if (!enumerate(v + 1)) return false;
    } while (std::next_permutation(tail.begin(), tail.end()));
    return true;
  };
  if (n > 0) enumerate(0);
}

std::optional<FlatInput> searchKleinInput(
    int n, const std::vector<std::pair<int, int>>& edges, int d) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> comb(d);
  std::iota(comb.begin(), comb.end(), 0);

  std::optional<FlatInput> found;
  auto trySystem = [&](const SurfaceMap& map) -> bool {
    if (eulerCharacteristic(map) != 0) return true;
    std::vector<int8_t> want = map.edgeSigns();
    std::vector<EdgeId> cross;
    for (EdgeId e = 0; e < m; ++e)
      if (want[e] < 0) cross.push_back(e);
    std::sort(cross.begin(), cross.end());
    do {
      for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<Dart> bottom(d);
        for (int i = 0; i < d; ++i)
          bottom[i] = (mask >> i) & 1 ? Dart::backward(cross[i])
                                      : Dart::forward(cross[i]);
        FlatInput cand{map, bottom};
        try {
          cand.validate();
          CutGraph cut = buildCutGraphRaw(cand);
          if (!isTwoConnected(cut.plane)) continue;
        } catch (const Error&) {
          continue;
        }
        found = cand;
        return false;
      }
    } while (std::next_permutation(cross.begin(), cross.end()));
    return true;
  };

  // iterate crossing sets (outer) and rotation systems (inner)
  while (true) {
    std::vector<int8_t> signs(m, 1);
    for (int i : comb) signs[i] = -1;
    forEachRotationSystem(n, edges, signs, Surface::klein, trySystem);
    if (found) return found;
    // next combination
    int i = d - 1;
    while (i >= 0 && comb[i] == m - d + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
  }
  return std::nullopt;
}

namespace {

// random 2-connected plane map: a fan of d internally-disjoint s-t paths
// (each with >= 2 interior vertices) plus random ears avoiding the
// terminals
SurfaceMap randomTerminalFan(std::mt19937_64& rng, int d, int target_n,
                             int ears) {
  auto rnd = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };
  std::vector<int> len(d);
  int interiors = 0;
  for (int i = 0; i < d; ++i) {
    len[i] = rnd(3, 4);  // edges per path; >= 2 interior vertices
    interiors += len[i] - 1;
  }
  while (interiors < target_n) {
    ++len[rnd(0, d - 1)];
    ++interiors;
  }
  const int s = interiors, t = interiors + 1;

  std::vector<std::vector<Dart>> rot(interiors + 2);
  std::vector<std::pair<int, int>> ends;
  int next_v = 0;
  std::vector<Dart> at_t;
  for (int i = 0; i < d; ++i) {
    int prev = s;
    for (int k = 0; k + 1 < len[i]; ++k) {
      int v = next_v++;
      int e = static_cast<int>(ends.size());
      ends.push_back({prev, v});
      if (prev == s) rot[s].push_back(Dart::forward(e));
      else rot[prev].push_back(Dart::forward(e));
      rot[v].push_back(Dart::backward(e));
      prev = v;
    }
    int e = static_cast<int>(ends.size());
    ends.push_back({prev, t});
    rot[prev].push_back(Dart::forward(e));
    at_t.push_back(Dart::backward(e));
  }
  // clockwise at t = reverse path order
  for (int i = d - 1; i >= 0; --i) rot[t].push_back(at_t[i]);
  // interior rotations currently [in(backward of prev edge), out]: fine for
  // degree 2; fix ordering: each interior v has first its in-dart then its
  // out-dart appended above
  std::vector<int8_t> signs(ends.size(), 1);
  SurfaceMap map = buildMap(interiors + 2, rot, signs, Surface::cylinder_plane);

  for (int round = 0; round < ears; ++round) {
    FaceSet fs = faceCycles(map);
    // collect candidate corners per face, excluding terminals
    std::uniform_int_distribution<int> pick_face(0, fs.size() - 1);
    const FaceCycle& f = fs.faces[pick_face(rng)];
    const int L = f.degree();
    std::vector<int> corners;
    for (int k = 0; k < L; ++k)
      if (map.tail(f.darts[k]) < interiors) corners.push_back(k);
    if (corners.size() < 2) continue;
    int a = corners[rng() % corners.size()];
    int b = corners[rng() % corners.size()];
    if (a == b || map.tail(f.darts[a]) == map.tail(f.darts[b])) continue;

    int extra = rnd(0, 2);  // interior vertices of the ear
    const int old_n = map.vertexCount();
    const int old_m = map.edgeCount();
    std::vector<std::vector<Dart>> r = map.rotations();
    // chain u = x0 - x1 - ... - x_extra - w with fresh edges
    VertexId u = map.tail(f.darts[a]);
    VertexId w = map.tail(f.darts[b]);
    r.resize(old_n + extra);
    int prev = u;
    for (int k = 0; k <= extra; ++k) {
      int e = old_m + k;
      if (k == 0) {
        auto& ru = r[u];
        ru.insert(ru.begin() + map.rotationIndex(f.darts[a]),
                  Dart::forward(e));
      } else {
        r[prev].push_back(Dart::forward(e));
      }
      if (k == extra) {
        auto& rw = r[w];
        rw.insert(rw.begin() + map.rotationIndex(f.darts[b]),
                  Dart::backward(e));
      } else {
        int v = old_n + k;
        r[v].push_back(Dart::backward(e));
        prev = v;
      }
    }
    std::vector<int8_t> sg = map.edgeSigns();
    sg.insert(sg.end(), extra + 1, 1);
    SurfaceMap cand = SurfaceMap::build(old_n + extra, std::move(r),
                                        std::move(sg), Surface::cylinder_plane);
    if (eulerCharacteristic(cand) != 2) continue;  // corner bookkeeping slip
    map = std::move(cand);
  }

  // terminals must be the two highest ids: they are (interiors, interiors+1)
  // only if no ear vertices were added after them; renumber so s,t move last
  const int total = map.vertexCount();
  if (total > interiors + 2) {
    std::vector<VertexId> perm(total);
    int fresh = 0;
    for (VertexId v = 0; v < total; ++v) {
      if (v == s) perm[v] = total - 2;
      else if (v == t) perm[v] = total - 1;
      else perm[v] = fresh++;
    }
    std::vector<std::vector<Dart>> r(total);
    for (VertexId v = 0; v < total; ++v) r[perm[v]] = map.rotation(v);
    map = SurfaceMap::build(total, std::move(r), map.edgeSigns(),
                            Surface::cylinder_plane);
  }
  return map;
}

}  // namespace

namespace {

bool isConnectedGraph(const SurfaceMap& map) {
  if (map.vertexCount() == 0) return true;
  std::vector<char> seen(map.vertexCount(), 0);
  std::vector<VertexId> stack = {0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (Dart d : map.rotation(v)) {
      VertexId w = map.head(d);
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == map.vertexCount();
}

}  // namespace

FlatInput randomFlatInput(std::uint64_t seed, Surface surface) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    int d = 2 + static_cast<int>(rng() % 3);
    int target_n = 4 + static_cast<int>(rng() % 6);
    // ears are what connect the path interiors once the terminals vanish
    int ears = 2 + static_cast<int>(rng() % 5);
    SurfaceMap plane = randomTerminalFan(rng, d, target_n, ears);
    VertexId s = plane.vertexCount() - 2, t = plane.vertexCount() - 1;
    try {
      FlatInput in = uncutPlaneMap(plane, s, t, surface);
      if (!isConnectedGraph(in.map)) continue;
      if (eulerCharacteristic(in.map) != 0) continue;
      CutGraph cut = buildCutGraphRaw(in);
      if (!isTwoConnected(cut.plane)) continue;
      return in;
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::SyntaxError, "random input generation failed");
}

}  // namespace torvis::gen
