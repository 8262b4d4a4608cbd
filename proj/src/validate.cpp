#include "torvis/validate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace torvis {

bool ValidationReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.pass && !c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  return out.str();
}

namespace {

// one rectangle piece of an edge segment: a column interval of rows
struct Piece {
  int x;
  int y0, y1;  // inclusive
  int seg;     // index into drawing.edges
  bool lower_end_open;  // y0 continues through the boundary
  bool upper_end_open;
};

std::vector<Piece> edgePieces(const SurfaceDrawing& dr) {
  std::vector<Piece> ps;
  for (int i = 0; i < static_cast<int>(dr.edges.size()); ++i) {
    const auto& es = dr.edges[i];
    if (!es.crosses) {
      ps.push_back({es.x, es.y_lo, es.y_hi, i, false, false});
    } else {
      ps.push_back({es.x, 0, es.y_lo, i, true, false});
      ps.push_back({dr.mirrorColumn(es.x), es.y_hi, dr.h - 1, i, false, true});
    }
  }
  return ps;
}

// cyclic x-interval of a vertex segment as 1-2 linear intervals
std::vector<std::pair<int, int>> vxIntervals(const SurfaceDrawing& dr,
                                             const SurfVertexSeg& vs) {
  if (!vs.wraps_x) return {{vs.x_lo, vs.x_hi}};
  return {{vs.x_lo, dr.w - 1}, {0, vs.x_hi}};
}

bool coversCol(const SurfaceDrawing& dr, const SurfVertexSeg& vs, int x) {
  return dr.coversColumn(vs, x);
}

std::string segName(const SurfaceDrawing& dr, int seg) {
  const auto& es = dr.edges[seg];
  return "edge " + std::to_string(es.edge) + "@x" + std::to_string(es.x);
}

}  // namespace

std::vector<std::vector<EdgeId>> recoverRotation(const SurfaceDrawing& dr,
                                                 const SurfaceMap& g) {
  std::vector<int> row_of(g.vertexCount(), -1);
  for (const auto& vs : dr.vertices) row_of[vs.v] = vs.y;

  struct Att {
    EdgeId edge;
    int x;
    bool top;
  };
  std::vector<std::vector<Att>> at(g.vertexCount());
  for (const auto& es : dr.edges) {
    VertexId a = g.tail(Dart::forward(es.edge));
    VertexId b = g.tail(Dart::backward(es.edge));
    VertexId lo = row_of[a] == es.y_lo ? a : b;
    VertexId hi = lo == a ? b : a;
    require(row_of[lo] == es.y_lo && row_of[hi] == es.y_hi,
            ErrorCode::DanglingEdge,
            "edge " + std::to_string(es.edge) + " has no vertex at its rows");
    if (!es.crosses) {
      at[lo].push_back({es.edge, es.x, true});
      at[hi].push_back({es.edge, es.x, false});
    } else {
      at[lo].push_back({es.edge, es.x, false});
      at[hi].push_back({es.edge, dr.mirrorColumn(es.x), true});
    }
  }

  std::vector<std::vector<EdgeId>> rot(g.vertexCount());
  for (const auto& vs : dr.vertices) {
    auto& a = at[vs.v];
    auto seg_pos = [&](int x) {
      int k = x - vs.x_lo;
      if (k < 0) k += dr.w;
      return k;
    };
    std::stable_sort(a.begin(), a.end(), [&](const Att& p, const Att& q) {
      if (p.top != q.top) return p.top;  // tops first
      int pp = seg_pos(p.x), qq = seg_pos(q.x);
      return p.top ? pp < qq : pp > qq;
    });
    for (const auto& att : a) rot[vs.v].push_back(att.edge);
  }
  return rot;
}

namespace {

bool cyclicEqual(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  if (n == 0) return true;
  for (int s = 0; s < n; ++s) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = a[i] == b[(s + i) % n];
    if (ok) return true;
  }
  return false;
}

// Face-set comparison fallback for the Klein bottle: reconstruct a signed
// map from the recovered rotations (orienting each edge as in the input)
// and require equal face dart-sets.
bool faceSetsMatch(const SurfaceMap& input,
                   const std::vector<std::vector<EdgeId>>& recovered) {
  std::vector<int> placed(input.edgeCount(), 0);
  std::vector<std::vector<Dart>> rot(input.vertexCount());
  for (VertexId v = 0; v < input.vertexCount(); ++v) {
    for (EdgeId e : recovered[v]) {
      Dart fwd = Dart::forward(e);
      Dart d;
      if (input.tail(fwd) == v && placed[e] == 0) d = fwd;
      else d = Dart::backward(e);
      placed[e]++;
      rot[v].push_back(d);
    }
  }
  SurfaceMap rec;
  try {
    rec = SurfaceMap::buildAllowLoops(input.vertexCount(), rot,
                                      input.edgeSigns(), input.surface());
  } catch (const Error&) {
    return false;
  }
  auto canon = [](const SurfaceMap& m) {
    std::set<std::vector<int>> faces;
    for (const auto& f : faceCycles(m).faces) {
      std::vector<int> ds;
      for (Dart d : f.darts) ds.push_back(d.id);
      std::sort(ds.begin(), ds.end());
      faces.insert(ds);
    }
    return faces;
  };
  return canon(input) == canon(rec);
}

}  // namespace

ValidationReport validateDrawing(const SurfaceDrawing& dr,
                                 const FlatInput& original) {
  const SurfaceMap& g = original.map;
  ValidationReport rep;
  rep.w = dr.w;
  rep.h = dr.h;
  rep.shared_vertices = dr.shared_vertices;
  auto check = [&](const std::string& name) -> CheckResult& {
    rep.checks.push_back({name, true, ""});
    return rep.checks.back();
  };
  auto failWith = [](CheckResult& c, const std::string& witness) {
    if (c.pass) {
      c.pass = false;
      c.witness = witness;
    }
  };

  // check 7 runs first: the remaining checks look endpoints up by edge id
  auto& c7 = check("edge and vertex sets match the input");
  {
    std::vector<int> seen(g.edgeCount(), 0);
    bool extra = false;
    for (const auto& es : dr.edges) {
      if (es.edge < 0 || es.edge >= g.edgeCount()) extra = true;
      else seen[es.edge]++;
    }
    if (extra) failWith(c7, "edge id outside the input range");
    for (EdgeId e = 0; e < g.edgeCount(); ++e)
      if (seen[e] != 1)
        failWith(c7, "edge " + std::to_string(e) + " drawn " +
                         std::to_string(seen[e]) + " times");
    std::vector<int> vseen(g.vertexCount(), 0);
    for (const auto& vs : dr.vertices)
      if (vs.v >= 0 && vs.v < g.vertexCount()) vseen[vs.v]++;
      else failWith(c7, "vertex id outside the input range");
    for (VertexId v = 0; v < g.vertexCount(); ++v)
      if (vseen[v] != 1)
        failWith(c7, "vertex " + std::to_string(v) + " drawn " +
                         std::to_string(vseen[v]) + " times");
  }
  if (!c7.pass) {
    // structure is broken; the remaining checks assume the sets match
    check("vertex segments pairwise disjoint").pass = false;
    check("edge segments pairwise disjoint").pass = false;
    check("edge endpoints lie on their vertex segments").pass = false;
    check("edge interiors avoid vertex segments").pass = false;
    check("path columns are exclusive").pass = false;
    check("recovered rotation system matches the input").pass = false;
    return rep;
  }

  std::vector<int> row_of(g.vertexCount(), -1);
  for (const auto& vs : dr.vertices) row_of[vs.v] = vs.y;

  // 1: vertex segments pairwise disjoint
  auto& c1 = check("vertex segments pairwise disjoint");
  for (size_t i = 0; i < dr.vertices.size(); ++i) {
    for (size_t j = i + 1; j < dr.vertices.size(); ++j) {
      const auto& a = dr.vertices[i];
      const auto& b = dr.vertices[j];
      if (a.y != b.y) continue;
      for (auto [al, ah] : vxIntervals(dr, a))
        for (auto [bl, bh] : vxIntervals(dr, b))
          if (al <= bh && bl <= ah)
            failWith(c1, "vertices " + std::to_string(a.v) + " and " +
                             std::to_string(b.v) + " overlap on row " +
                             std::to_string(a.y));
    }
  }

  // 2: edge segments pairwise disjoint (contact at a shared endpoint on a
  // common vertex segment is allowed)
  auto& c2 = check("edge segments pairwise disjoint");
  {
    auto pieces = edgePieces(dr);
    for (size_t i = 0; i < pieces.size(); ++i) {
      for (size_t j = i + 1; j < pieces.size(); ++j) {
        const Piece& p = pieces[i];
        const Piece& q = pieces[j];
        if (p.seg == q.seg) continue;
        if (p.x != q.x) continue;
        int lo = std::max(p.y0, q.y0);
        int hi = std::min(p.y1, q.y1);
        if (lo > hi) continue;
        if (lo < hi) {
          failWith(c2, segName(dr, p.seg) + " overlaps " + segName(dr, q.seg));
          continue;
        }
        // single shared row: legal only as endpoint contact on a common
        // vertex segment at this column
        auto endpointAt = [&](const Piece& pc, int row) {
          bool at_y0 = pc.y0 == row && !pc.lower_end_open;
          bool at_y1 = pc.y1 == row && !pc.upper_end_open;
          return at_y0 || at_y1;
        };
        bool ok = endpointAt(p, lo) && endpointAt(q, lo);
        if (ok) {
          bool vertex_here = false;
          for (const auto& vs : dr.vertices)
            if (vs.y == lo && coversCol(dr, vs, p.x)) vertex_here = true;
          ok = vertex_here;
        }
        if (!ok)
          failWith(c2, segName(dr, p.seg) + " touches " + segName(dr, q.seg) +
                           " at row " + std::to_string(lo));
      }
    }
  }

  // 3: endpoint contacts
  auto& c3 = check("edge endpoints lie on their vertex segments");
  for (const auto& es : dr.edges) {
    VertexId a = g.tail(Dart::forward(es.edge));
    VertexId b = g.tail(Dart::backward(es.edge));
    VertexId lo = row_of[a] == es.y_lo ? a : b;
    VertexId hi = lo == a ? b : a;
    if (row_of[lo] != es.y_lo || row_of[hi] != es.y_hi) {
      failWith(c3, "edge " + std::to_string(es.edge) +
                       " endpoints are not at its end rows");
      continue;
    }
    int x_lo_att = es.x;
    int x_hi_att = es.crosses ? dr.mirrorColumn(es.x) : es.x;
    const SurfVertexSeg* vlo = nullptr;
    const SurfVertexSeg* vhi = nullptr;
    for (const auto& vs : dr.vertices) {
      if (vs.v == lo) vlo = &vs;
      if (vs.v == hi) vhi = &vs;
    }
    if (!coversCol(dr, *vlo, x_lo_att))
      failWith(c3, "edge " + std::to_string(es.edge) + " misses vertex " +
                       std::to_string(lo));
    if (!coversCol(dr, *vhi, x_hi_att))
      failWith(c3, "edge " + std::to_string(es.edge) + " misses vertex " +
                       std::to_string(hi));
    if (!es.crosses && es.y_lo > es.y_hi)
      failWith(c3, "edge " + std::to_string(es.edge) + " has inverted rows");
  }

  // 4: interiors avoid vertex segments
  auto& c4 = check("edge interiors avoid vertex segments");
  for (const auto& pc : edgePieces(dr)) {
    int int_lo = pc.y0 + (pc.lower_end_open ? 0 : 1);
    int int_hi = pc.y1 - (pc.upper_end_open ? 0 : 1);
    for (const auto& vs : dr.vertices) {
      if (vs.y < int_lo || vs.y > int_hi) continue;
      if (coversCol(dr, vs, pc.x))
        failWith(c4, segName(dr, pc.seg) + " pierces vertex " +
                         std::to_string(vs.v) + " at row " +
                         std::to_string(vs.y));
    }
  }

  // 5: exclusive path columns (metadata optional)
  auto& c5 = check("path columns are exclusive");
  for (size_t p = 0; p < dr.path_x.size(); ++p) {
    int x = dr.path_x[p];
    if (x < 0) continue;
    std::set<VertexId> pv(dr.path_vertices[p].begin(),
                          dr.path_vertices[p].end());
    std::set<EdgeId> pe(dr.path_edges[p].begin(), dr.path_edges[p].end());
    for (const auto& vs : dr.vertices)
      if (coversCol(dr, vs, x) && !pv.count(vs.v))
        failWith(c5, "vertex " + std::to_string(vs.v) + " intrudes on column " +
                         std::to_string(x));
    for (const auto& pc : edgePieces(dr))
      if (pc.x == x && !pe.count(dr.edges[pc.seg].edge))
        failWith(c5, segName(dr, pc.seg) + " intrudes on column " +
                         std::to_string(x));
  }

  // 6: rotation recovery
  auto& c6 = check("recovered rotation system matches the input");
  try {
    rep.recovered_rotation = recoverRotation(dr, g);
    bool exact = true;
    VertexId bad = -1;
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
      std::vector<EdgeId> want;
      for (Dart d : g.rotation(v)) want.push_back(d.edge());
      if (!cyclicEqual(rep.recovered_rotation[v], want)) {
        exact = false;
        bad = v;
        break;
      }
    }
    if (!exact) {
      bool fallback_ok = dr.surface == Surface::klein &&
                         faceSetsMatch(g, rep.recovered_rotation);
      if (!fallback_ok)
        failWith(c6, "rotation differs at vertex " + std::to_string(bad));
    }
  } catch (const Error& e) {
    failWith(c6, e.what());
  }

  return rep;
}

ValidationReport validateOrtho(const OrthoDrawing& dr,
                               const FlatInput& original) {
  const SurfaceMap& g = original.map;
  ValidationReport rep;
  rep.w = dr.w;
  rep.h = dr.h;
  auto check = [&](const std::string& name) -> CheckResult& {
    rep.checks.push_back({name, true, ""});
    return rep.checks.back();
  };
  auto failWith = [](CheckResult& c, const std::string& witness) {
    if (c.pass) {
      c.pass = false;
      c.witness = witness;
    }
  };

  struct Seg {
    int x0, y0, x1, y1;  // axis-parallel, endpoint order normalized
    EdgeId edge;
    bool at_a_end, at_b_end;  // segment touches a vertex point end
  };
  std::vector<Seg> segs;
  auto addChain = [&](const std::vector<std::pair<int, int>>& chain, EdgeId e,
                      bool first_is_vertex, bool last_is_vertex) {
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      auto [x0, y0] = chain[i];
      auto [x1, y1] = chain[i + 1];
      Seg s{std::min(x0, x1), std::min(y0, y1), std::max(x0, x1),
            std::max(y0, y1), e, false, false};
      s.at_a_end = first_is_vertex && i == 0;
      s.at_b_end = last_is_vertex && i + 2 == chain.size();
      segs.push_back(s);
    }
  };

  auto& c_sets = check("edge and vertex sets match the input");
  {
    std::vector<int> seen(g.edgeCount(), 0);
    for (const auto& oe : dr.edges)
      if (oe.edge >= 0 && oe.edge < g.edgeCount()) seen[oe.edge]++;
    for (EdgeId e = 0; e < g.edgeCount(); ++e)
      if (seen[e] != 1)
        failWith(c_sets, "edge " + std::to_string(e) + " drawn " +
                             std::to_string(seen[e]) + " times");
    if (static_cast<int>(dr.points.size()) != g.vertexCount())
      failWith(c_sets, "vertex point count mismatch");
  }
  if (!c_sets.pass) return rep;

  auto& c_wrap = check("boundary-crossing chains meet their mirror column");
  for (const auto& oe : dr.edges) {
    if (!oe.crosses) {
      addChain(oe.chain_a, oe.edge, true, true);
      continue;
    }
    addChain(oe.chain_a, oe.edge, true, false);
    addChain(oe.chain_b, oe.edge, false, true);
    if (oe.chain_a.back().second != 0 || oe.chain_b.front().second != dr.h - 1)
      failWith(c_wrap, "edge " + std::to_string(oe.edge) +
                           " does not reach the boundary");
    if (oe.chain_b.front().first !=
        dr.mirrorColumn(oe.chain_a.back().first))
      failWith(c_wrap, "edge " + std::to_string(oe.edge) +
                           " re-enters on the wrong column");
  }

  auto& c_pts = check("vertex points distinct");
  for (size_t i = 0; i < dr.points.size(); ++i)
    for (size_t j = i + 1; j < dr.points.size(); ++j)
      if (dr.points[i] == dr.points[j])
        failWith(c_pts, "vertices " + std::to_string(i) + " and " +
                            std::to_string(j) + " coincide");

  auto& c_dis = check("edges pairwise disjoint and clear of vertices");
  {
    auto overlap1d = [](int a0, int a1, int b0, int b1) {
      return std::max(a0, b0) <= std::min(a1, b1);
    };
    for (size_t i = 0; i < segs.size(); ++i) {
      for (size_t j = i + 1; j < segs.size(); ++j) {
        const Seg& p = segs[i];
        const Seg& q = segs[j];
        if (!overlap1d(p.x0, p.x1, q.x0, q.x1) ||
            !overlap1d(p.y0, p.y1, q.y0, q.y1))
          continue;
        if (p.edge == q.edge) continue;  // consecutive pieces share bends
        // allowed: both touch at a single shared vertex-end point
        int ix0 = std::max(p.x0, q.x0), ix1 = std::min(p.x1, q.x1);
        int iy0 = std::max(p.y0, q.y0), iy1 = std::min(p.y1, q.y1);
        bool point = ix0 == ix1 && iy0 == iy1;
        bool at_vertex = false;
        if (point) {
          for (const auto& pt : dr.points)
            if (pt.first == ix0 && pt.second == iy0) at_vertex = true;
        }
        if (!(point && at_vertex))
          failWith(c_dis, "edges " + std::to_string(p.edge) + " and " +
                              std::to_string(q.edge) + " intersect");
      }
    }
    // vertex points only on their own edges' end segments
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
      auto [px, py] = dr.points[v];
      for (const Seg& s : segs) {
        if (px < s.x0 || px > s.x1 || py < s.y0 || py > s.y1) continue;
        bool incident = g.tail(Dart::forward(s.edge)) == v ||
                        g.tail(Dart::backward(s.edge)) == v;
        bool at_end = (s.at_a_end || s.at_b_end);
        if (!incident || !at_end)
          failWith(c_dis, "edge " + std::to_string(s.edge) +
                              " passes through vertex " + std::to_string(v));
      }
    }
  }

  auto& c_rot = check("recovered rotation system matches the input");
  try {
    std::vector<std::vector<std::pair<int, EdgeId>>> around(g.vertexCount());
    auto firstDir = [&](VertexId v, const std::vector<std::pair<int, int>>& ch,
                        bool from_front) -> int {
      auto [px, py] = dr.points[v];
      std::pair<int, int> a = from_front ? ch[0] : ch.back();
      std::pair<int, int> b = from_front ? ch[1] : ch[ch.size() - 2];
      require(a == std::make_pair(px, py), ErrorCode::DanglingEdge,
              "chain does not start at its vertex");
      int dx = b.first - a.first, dy = b.second - a.second;
      if (dx == 0 && dy > 0) return 0;  // N
      if (dx > 0) return 1;             // E
      if (dx == 0 && dy < 0) return 2;  // S
      return 3;                         // W
    };
    for (const auto& oe : dr.edges) {
      VertexId a = g.tail(Dart::forward(oe.edge));
      VertexId b = g.tail(Dart::backward(oe.edge));
      // identify which endpoint owns which chain end by the points
      const auto& front = oe.chain_a.front();
      VertexId va = dr.points[a] == front ? a : b;
      VertexId vb = va == a ? b : a;
      around[va].push_back({firstDir(va, oe.chain_a, true), oe.edge});
      const auto& tail_chain = oe.crosses ? oe.chain_b : oe.chain_a;
      around[vb].push_back({firstDir(vb, tail_chain, false), oe.edge});
    }
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
      auto& lst = around[v];
      std::stable_sort(lst.begin(), lst.end(),
                       [](const auto& p, const auto& q) {
                         return p.first < q.first;
                       });
      std::vector<EdgeId> got;
      for (auto& [dir, e] : lst) got.push_back(e);
      std::vector<EdgeId> want;
      for (Dart d : g.rotation(v)) want.push_back(d.edge());
      if (!cyclicEqual(got, want)) {
        bool fallback_ok = dr.surface == Surface::klein;
        if (fallback_ok) {
          std::vector<std::vector<EdgeId>> rec(g.vertexCount());
          for (VertexId u = 0; u < g.vertexCount(); ++u) {
            auto lst2 = around[u];
            std::stable_sort(lst2.begin(), lst2.end(),
                             [](const auto& p, const auto& q) {
                               return p.first < q.first;
                             });
            for (auto& [dir, e] : lst2) rec[u].push_back(e);
          }
          fallback_ok = faceSetsMatch(g, rec);
        }
        if (!fallback_ok)
          failWith(c_rot, "rotation differs at vertex " + std::to_string(v));
      }
    }
  } catch (const Error& e) {
    failWith(c_rot, e.what());
  }

  return rep;
}

}  // namespace torvis
