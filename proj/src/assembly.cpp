#include "torvis/assembly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace torvis {

namespace {

struct StubSeg {
  int x = -1;
  int row_end = -1;  // the row of the graph-vertex endpoint
};

// Shared base conversion: every ghat segment becomes a surface segment.
// Stub segments (d >= 1) are returned separately for reconnection.
struct BaseConversion {
  SurfaceDrawing dr;
  std::vector<StubSeg> s_stub;  // by crossing index
  std::vector<StubSeg> t_stub;  // by t-stub index
};

BaseConversion convertBase(const CylinderDrawing& cyl, const PathSystem& ps,
                           const CutGraph* cut, Surface surface) {
  BaseConversion out;
  SurfaceDrawing& dr = out.dr;
  dr.surface = surface;
  dr.w = cyl.width;
  dr.h = cyl.height;

  const int d = cut ? cut->d : 0;
  out.s_stub.resize(d);
  out.t_stub.resize(d);
  std::vector<int> s_stub_of(cut ? cut->plane.edgeCount() : 0, -1);
  std::vector<int> t_stub_of(cut ? cut->plane.edgeCount() : 0, -1);
  if (cut) {
    for (int i = 0; i < d; ++i) {
      s_stub_of[cut->stub_s[i]] = i;
      t_stub_of[cut->stub_t[i]] = i;
    }
  }

  const int n = cut ? cut->plane.vertexCount() - 2 : ps.ghat.vertexCount();
  for (VertexId v = 0; v < n; ++v) {
    const auto& cs = cyl.vseg[v];
    SurfVertexSeg vs;
    vs.v = v;
    vs.y = cs.row;
    vs.x_lo = cs.x_lo;
    vs.x_hi = cs.x_hi;
    vs.wraps_x = cs.wraps_x;
    dr.vertices.push_back(vs);
  }

  int copy_tag = 0;
  for (EdgeId e = 0; e < ps.ghat.edgeCount(); ++e) {
    const auto& es = cyl.eseg[e];
    EdgeId cut_edge = ps.copy_origin[e];
    if (cut) {
      if (int i = s_stub_of[cut_edge]; i >= 0) {
        require(es.row_lo == 0, ErrorCode::StubMismatch, "s-stub not at s");
        out.s_stub[i] = {es.x, es.row_hi};
        continue;
      }
      if (int j = t_stub_of[cut_edge]; j >= 0) {
        require(es.row_hi == cyl.height - 1, ErrorCode::StubMismatch,
                "t-stub not at t");
        out.t_stub[j] = {es.x, es.row_lo};
        continue;
      }
    }
    SurfEdgeSeg ss;
    ss.edge = cut ? cut->origin[cut_edge] : cut_edge;
    ss.x = es.x;
    ss.y_lo = es.row_lo;
    ss.y_hi = es.row_hi;
    ss.crosses = false;
    ss.path = ps.used_by_path[e];
    ss.copy_tag = copy_tag++;
    dr.edges.push_back(ss);
  }

  // path metadata (original ids)
  dr.path_x = cyl.path_x;
  dr.path_vertices.resize(ps.d);
  dr.path_edges.resize(ps.d);
  for (int p = 0; p < ps.d; ++p) {
    for (VertexId v : ps.pathVertices(p))
      if (v < n) dr.path_vertices[p].push_back(v);
    for (Dart dd : ps.paths[p]) {
      EdgeId cut_edge = ps.copy_origin[dd.edge()];
      dr.path_edges[p].push_back(cut ? cut->origin[cut_edge] : cut_edge);
    }
  }
  return out;
}

void insertEmptyColumn(SurfaceDrawing& dr, int p) {
  for (auto& es : dr.edges)
    if (es.x >= p) ++es.x;
  for (auto& vs : dr.vertices) {
    if (vs.x_lo >= p) ++vs.x_lo;
    if (vs.x_hi >= p) ++vs.x_hi;
  }
  for (auto& x : dr.path_x)
    if (x >= p) ++x;
  ++dr.w;
}

}  // namespace

SurfaceDrawing reconnectTorus(const CylinderDrawing& cyl, const PathSystem& ps,
                              const CutGraph& cut) {
  require(cut.origin_surface != Surface::klein, ErrorCode::StubMismatch,
          "torus reconnection on a klein cut");
  BaseConversion base = convertBase(cyl, ps, &cut, Surface::torus);
  SurfaceDrawing& dr = base.dr;

  for (int i = 0; i < cut.d; ++i) {
    const StubSeg& lo = base.s_stub[i];
    const StubSeg& hi = base.t_stub[cut.pair_of_s_stub[i]];
    require(lo.x == hi.x, ErrorCode::StubMismatch,
            "stub pair " + std::to_string(i) + " sits on columns " +
                std::to_string(lo.x) + " and " + std::to_string(hi.x));
    SurfEdgeSeg ss;
    ss.edge = cut.origin[cut.stub_s[i]];
    ss.x = lo.x;
    ss.y_lo = lo.row_end;
    ss.y_hi = hi.row_end;
    ss.crosses = true;
    ss.path = i;
    dr.edges.push_back(ss);
  }
  return dr;
}

SurfaceDrawing alignKlein(const CylinderDrawing& cyl, const PathSystem& ps,
                          const CutGraph& cut) {
  require(cut.origin_surface == Surface::klein, ErrorCode::StubMismatch,
          "klein alignment on a torus cut");
  BaseConversion base = convertBase(cyl, ps, &cut, Surface::klein);
  SurfaceDrawing& dr = base.dr;
  const int d = cut.d;

  // stubs sit on their path's column; alignment shifts are applied to
  // path_x, so verify now and read the columns back after the loop
  for (int i = 0; i < d; ++i) {
    require(base.s_stub[i].x == dr.path_x[i], ErrorCode::StubMismatch,
            "s-stub " + std::to_string(i) + " left its path column");
    require(base.t_stub[i].x == dr.path_x[i], ErrorCode::StubMismatch,
            "t-stub " + std::to_string(i) + " left its path column");
  }
  auto sum_gap = [&](int i) {
    // pair (l_i, l_{d-1-i}) must satisfy x + x' = w - 1
    return dr.path_x[i] + dr.path_x[d - 1 - i] - (dr.w - 1);
  };
  for (int i = 0; i < d / 2; ++i) {
    int guard = 0;
    while (sum_gap(i) < 0) {
      insertEmptyColumn(dr, dr.path_x[i]);  // left of l_i
      require(++guard < 4 * dr.w + 4, ErrorCode::AlignmentFailure, "stuck");
    }
    while (sum_gap(i) > 0) {
      insertEmptyColumn(dr, dr.path_x[d - 1 - i] + 1);  // right of l_{d-1-i}
      require(++guard < 4 * dr.w + 4, ErrorCode::AlignmentFailure, "stuck");
    }
  }
  if (d % 2 == 1) {
    int m = d / 2;
    int guard = 0;
    while (2 * dr.path_x[m] - (dr.w - 1) < 0) {
      insertEmptyColumn(dr, dr.path_x[m]);
      require(++guard < 4 * dr.w + 4, ErrorCode::AlignmentFailure, "stuck");
    }
    while (2 * dr.path_x[m] - (dr.w - 1) > 0) {
      insertEmptyColumn(dr, dr.path_x[m] + 1);
      require(++guard < 4 * dr.w + 4, ErrorCode::AlignmentFailure, "stuck");
    }
  }
  for (int i = 0; i < d; ++i) {
    require(dr.path_x[i] + dr.path_x[d - 1 - i] == dr.w - 1,
            ErrorCode::AlignmentFailure,
            "pair " + std::to_string(i) + " misaligned after insertion");
  }

  // merge stubs across the mirror: crossing i leaves the bottom on l_i and
  // re-enters from the top on l_{d-1-i}
  for (int i = 0; i < d; ++i) {
    int j = cut.pair_of_s_stub[i];
    require(dr.path_x[j] == dr.w - 1 - dr.path_x[i],
            ErrorCode::AlignmentFailure,
            "crossing " + std::to_string(i) + " does not meet its mirror");
    SurfEdgeSeg ss;
    ss.edge = cut.origin[cut.stub_s[i]];
    ss.x = dr.path_x[i];
    ss.y_lo = base.s_stub[i].row_end;
    ss.y_hi = base.t_stub[j].row_end;
    ss.crosses = true;
    ss.path = i;
    dr.edges.push_back(ss);
  }
  return dr;
}

SurfaceDrawing adoptCylinder(const CylinderDrawing& cyl, const PathSystem& ps,
                             Surface target) {
  BaseConversion base = convertBase(cyl, ps, nullptr, target);
  return base.dr;
}

namespace {

struct Attachment {
  EdgeId edge;
  int x;
  bool top;       // edge continues upward from the vertex row
  int seg_index;  // into drawing.edges
};

// attachments of every vertex, unordered
std::vector<std::vector<Attachment>> collectAttachments(
    const SurfaceDrawing& dr, const SurfaceMap& g) {
  std::vector<int> row_of(g.vertexCount(), -1);
  std::vector<VertexId> vertex_at;
  for (const auto& vs : dr.vertices) row_of[vs.v] = vs.y;

  std::vector<std::vector<Attachment>> at(g.vertexCount());
  for (int si = 0; si < static_cast<int>(dr.edges.size()); ++si) {
    const auto& es = dr.edges[si];
    VertexId a = g.tail(Dart::forward(es.edge));
    VertexId b = g.tail(Dart::backward(es.edge));
    if (!es.crosses) {
      VertexId lo = row_of[a] == es.y_lo ? a : b;
      VertexId hi = lo == a ? b : a;
      require(row_of[lo] == es.y_lo && row_of[hi] == es.y_hi,
              ErrorCode::DanglingEdge,
              "edge " + std::to_string(es.edge) + " endpoints off-row");
      at[lo].push_back({es.edge, es.x, true, si});
      at[hi].push_back({es.edge, es.x, false, si});
    } else {
      VertexId lo = row_of[a] == es.y_lo ? a : b;
      VertexId hi = lo == a ? b : a;
      require(row_of[lo] == es.y_lo && row_of[hi] == es.y_hi,
              ErrorCode::DanglingEdge,
              "crossing edge " + std::to_string(es.edge) + " endpoints off-row");
      at[lo].push_back({es.edge, es.x, false, si});  // continues downward
      at[hi].push_back({es.edge, dr.surface == Surface::klein
                                     ? dr.w - 1 - es.x
                                     : es.x,
                        true, si});                  // continues upward
    }
  }
  return at;
}

}  // namespace

SurfaceDrawing cleanAndCompact(const SurfaceDrawing& in, const SurfaceMap& g,
                               const CompactOptions& opt) {
  SurfaceDrawing dr = in;

  // (a) one segment per original edge: prefer the crossing segment, then
  // the lowest-index path copy, then leftmost-lowest
  {
    std::map<EdgeId, int> keep;
    for (int i = 0; i < static_cast<int>(dr.edges.size()); ++i) {
      const auto& es = dr.edges[i];
      auto it = keep.find(es.edge);
      if (it == keep.end()) {
        keep[es.edge] = i;
        continue;
      }
      const auto& cur = dr.edges[it->second];
      auto rank = [](const SurfEdgeSeg& s) {
        return std::tuple(!s.crosses, s.path < 0 ? 1 : 0,
                          s.path < 0 ? 0 : s.path, s.x, s.y_lo, s.copy_tag);
      };
      if (rank(es) < rank(cur)) it->second = i;
    }
    std::vector<SurfEdgeSeg> kept;
    for (int i = 0; i < static_cast<int>(dr.edges.size()); ++i) {
      // (b) augmentation edges vanish entirely
      if (dr.edges[i].augmented) continue;
      if (keep[dr.edges[i].edge] == i) kept.push_back(dr.edges[i]);
    }
    dr.edges = std::move(kept);
  }

  // (c) shrink vertex segments onto their attachment span
  {
    auto at = collectAttachments(dr, g);
    for (auto& vs : dr.vertices) {
      const auto& a = at[vs.v];
      require(!a.empty(), ErrorCode::DanglingEdge,
              "vertex " + std::to_string(vs.v) + " lost all attachments");
      // walk the old interval left to right, record first/last attachment
      std::set<int> cols;
      for (const auto& att : a) cols.insert(att.x);
      int len = vs.wraps_x ? vs.x_hi + dr.w - vs.x_lo : vs.x_hi - vs.x_lo;
      int first = -1, last = -1;
      for (int k = 0; k <= len; ++k) {
        int x = (vs.x_lo + k) % dr.w;
        if (!cols.count(x)) continue;
        if (first < 0) first = x;
        last = x;
      }
      require(first >= 0, ErrorCode::DanglingEdge, "attachments off-segment");
      vs.x_lo = first;
      vs.x_hi = last;
      vs.wraps_x = vs.x_lo > vs.x_hi;
    }
  }

  if (opt.compact) {
    // (d) drop empty rows
    {
      std::vector<char> used(dr.h, 0);
      for (const auto& vs : dr.vertices) used[vs.y] = 1;
      std::vector<int> remap(dr.h, -1);
      int y = 0;
      for (int r = 0; r < dr.h; ++r)
        if (used[r]) remap[r] = y++;
      for (auto& vs : dr.vertices) vs.y = remap[vs.y];
      for (auto& es : dr.edges) {
        es.y_lo = remap[es.y_lo];
        es.y_hi = remap[es.y_hi];
      }
      dr.h = y;
    }
    // (e) drop empty columns
    {
      auto occupied = [&]() {
        std::vector<char> occ(dr.w, 0);
        for (const auto& es : dr.edges) {
          occ[es.x] = 1;
          if (es.crosses) occ[dr.mirrorColumn(es.x)] = 1;
        }
        return occ;
      };
      bool has_crossing_mirror =
          dr.surface == Surface::klein &&
          std::any_of(dr.edges.begin(), dr.edges.end(),
                      [](const SurfEdgeSeg& e) { return e.crosses; });
      auto removeColumn = [&](int p) {
        for (auto& es : dr.edges)
          if (es.x > p) --es.x;
        for (auto& vs : dr.vertices) {
          if (vs.x_lo > p) --vs.x_lo;
          if (vs.x_hi > p) --vs.x_hi;
          vs.wraps_x = vs.x_lo > vs.x_hi;
        }
        for (auto& x : dr.path_x)
          if (x > p) --x;
        --dr.w;
      };
      if (!has_crossing_mirror) {
        std::vector<char> occ = occupied();
        for (int p = dr.w - 1; p >= 0; --p)
          if (!occ[p] && dr.w > 1) removeColumn(p);
      } else {
        // removal must keep every crossing pair mirrored
        bool progress = true;
        while (progress) {
          progress = false;
          std::vector<char> occ = occupied();
          for (int p = 0; p < dr.w && !progress; ++p) {
            if (occ[p]) continue;
            bool ok = true;
            for (const auto& es : dr.edges) {
              if (!es.crosses) continue;
              int bot = es.x - (es.x > p ? 1 : 0);
              int top_old = dr.w - 1 - es.x;
              int top = top_old - (top_old > p ? 1 : 0);
              if (top != (dr.w - 1 - 1) - bot) ok = false;
            }
            if (ok) {
              removeColumn(p);
              progress = true;
            }
          }
        }
      }
    }
  }

  // stats: a vertex shares when one of its columns carries two of its
  // own attachments
  {
    auto at = collectAttachments(dr, g);
    dr.shared_vertices = 0;
    for (VertexId v = 0; v < g.vertexCount(); ++v) {
      std::map<int, int> per_col;
      for (const auto& a : at[v]) per_col[a.x]++;
      for (auto& [x, c] : per_col)
        if (c >= 2) {
          dr.shared_vertices++;
          break;
        }
    }
  }
  return dr;
}

namespace {

const int kPortN = 0, kPortE = 1, kPortS = 2, kPortW = 3;

struct PortPlan {
  int port[4];  // attachment index -> port (N,E,S,W), -1 unused slots
};

}  // namespace

OrthoDrawing toOrthogonal(const SurfaceDrawing& dr, const SurfaceMap& g) {
  for (VertexId v = 0; v < g.vertexCount(); ++v)
    require(g.degree(v) <= 4, ErrorCode::DegreeTooHigh,
            "vertex " + std::to_string(v) + " has degree " +
                std::to_string(g.degree(v)));

  auto raw_at = collectAttachments(dr, g);
  std::vector<int> row_of(g.vertexCount());
  for (const auto& vs : dr.vertices) row_of[vs.v] = vs.y;

  OrthoDrawing out;
  out.surface = dr.surface;
  out.w = dr.w;
  out.h = 3 * dr.h;

  // cyclic attachment order per vertex: top attachments left to right along
  // the segment, then bottom attachments right to left
  std::vector<std::vector<Attachment>> ordered(g.vertexCount());
  for (const auto& vs : dr.vertices) {
    auto& a = raw_at[vs.v];
    int len = vs.wraps_x ? vs.x_hi + dr.w - vs.x_lo : vs.x_hi - vs.x_lo;
    auto seg_pos = [&](int x) {
      int k = x - vs.x_lo;
      if (k < 0) k += dr.w;
      require(k <= len, ErrorCode::DanglingEdge, "attachment off segment");
      return k;
    };
    std::vector<Attachment> tops, bots;
    for (const auto& att : a) (att.top ? tops : bots).push_back(att);
    std::sort(tops.begin(), tops.end(), [&](const auto& p, const auto& q) {
      return seg_pos(p.x) < seg_pos(q.x);
    });
    std::sort(bots.begin(), bots.end(), [&](const auto& p, const auto& q) {
      return seg_pos(p.x) > seg_pos(q.x);
    });
    ordered[vs.v] = tops;
    ordered[vs.v].insert(ordered[vs.v].end(), bots.begin(), bots.end());
  }

  // choose a point and a cyclic-order-preserving port assignment per vertex
  std::vector<int> px(g.vertexCount(), -1);
  std::vector<std::vector<int>> port_of(g.vertexCount());
  for (const auto& vs : dr.vertices) {
    VertexId v = vs.v;
    const auto& a = ordered[v];
    const int k = static_cast<int>(a.size());
    require(k >= 1 && k <= 4, ErrorCode::DegreeTooHigh, "attachment count");

    std::vector<int> candidates;  // x* candidates
    {
      std::set<int> seen;
      auto add = [&](int x) {
        if (seen.insert(x).second) candidates.push_back(x);
      };
      // prefer columns attached from both sides, then path columns
      std::map<int, std::pair<bool, bool>> sides;
      for (const auto& att : a) {
        auto& s = sides[att.x];
        (att.top ? s.first : s.second) = true;
      }
      for (const auto& [x, s] : sides)
        if (s.first && s.second) add(x);
      for (int x : dr.path_x)
        if (sides.count(x)) add(x);
      for (const auto& att : a) add(att.x);
    }

    int best_score = -1;
    for (int xstar : candidates) {
      // enumerate cyclic-order-preserving injections into (N,E,S,W)
      for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> ports;
        for (int p = 0; p < 4; ++p)
          if (mask & (1 << p)) ports.push_back(p);
        for (int rotn = 0; rotn < k; ++rotn) {
          bool ok = true;
          int straight = 0;
          std::vector<int> assign(k);
          for (int i = 0; i < k && ok; ++i) {
            int port = ports[(i + rotn) % k];
            const auto& att = a[i];
            assign[i] = port;
            switch (port) {
              case kPortN:
                ok = att.top;
                straight += att.x == xstar;
                break;
              case kPortS:
                ok = !att.top;
                straight += att.x == xstar;
                break;
              case kPortE:
                ok = att.x > xstar;
                break;
              case kPortW:
                ok = att.x < xstar;
                break;
            }
          }
          if (!ok) continue;
          int score = 1 + straight;
          if (score > best_score) {
            best_score = score;
            px[v] = xstar;
            port_of[v] = assign;
          }
        }
      }
      if (best_score >= 1 + 2) break;  // cannot beat two straights
    }
    require(best_score >= 0, ErrorCode::DegreeTooHigh,
            "no feasible port assignment at vertex " + std::to_string(v));
  }

  out.points.resize(g.vertexCount());
  for (const auto& vs : dr.vertices)
    out.points[vs.v] = {px[vs.v], 3 * vs.y + 1};

  // route every edge: end chains meet the edge's vertical
  auto endChain = [&](VertexId v, const Attachment& att, int port,
                      bool upward) {
    // returns points from the vertex point to the junction on att.x
    int y = 3 * row_of[v] + 1;
    std::vector<std::pair<int, int>> pts = {{px[v], y}};
    switch (port) {
      case kPortN:
        if (att.x != px[v]) {
          pts.push_back({px[v], y + 1});
          pts.push_back({att.x, y + 1});
        }
        break;
      case kPortS:
        if (att.x != px[v]) {
          pts.push_back({px[v], y - 1});
          pts.push_back({att.x, y - 1});
        }
        break;
      case kPortE:
      case kPortW:
        pts.push_back({att.x, y});
        break;
    }
    (void)upward;
    return pts;
  };

  std::map<std::pair<EdgeId, bool>, std::pair<VertexId, int>> end_info;
  for (const auto& vs : dr.vertices) {
    VertexId v = vs.v;
    for (int i = 0; i < static_cast<int>(ordered[v].size()); ++i) {
      const auto& att = ordered[v][i];
      end_info[{att.edge, att.top}] = {v, i};
    }
  }

  for (const auto& es : dr.edges) {
    OrthoEdge oe;
    oe.edge = es.edge;
    oe.crosses = es.crosses;
    if (!es.crosses) {
      auto [va, ia] = end_info.at({es.edge, true});   // lower end, goes up
      auto [vb, ib] = end_info.at({es.edge, false});  // upper end
      auto ca = endChain(va, ordered[va][ia], port_of[va][ia], true);
      auto cb = endChain(vb, ordered[vb][ib], port_of[vb][ib], false);
      oe.chain_a = ca;
      oe.chain_a.push_back({es.x, cb.back().second});
      for (auto it = cb.rbegin(); it != cb.rend(); ++it)
        oe.chain_a.push_back(*it);
    } else {
      auto [va, ia] = end_info.at({es.edge, false});  // bottom end, goes down
      auto [vb, ib] = end_info.at({es.edge, true});   // top end, goes up
      auto ca = endChain(va, ordered[va][ia], port_of[va][ia], false);
      oe.chain_a = ca;
      oe.chain_a.push_back({es.x, 0});
      auto cb = endChain(vb, ordered[vb][ib], port_of[vb][ib], true);
      int topx = out.mirrorColumn(es.x);
      require(cb.size() == 1 ? out.points[vb].first == topx
                             : cb.back().first == topx,
              ErrorCode::AlignmentFailure, "wrap columns disagree");
      oe.chain_b = {{topx, out.h - 1}};
      for (auto it = cb.rbegin(); it != cb.rend(); ++it)
        oe.chain_b.push_back(*it);
    }
    out.edges.push_back(oe);
  }

  // drop duplicate consecutive points
  for (auto& oe : out.edges) {
    for (auto* chain : {&oe.chain_a, &oe.chain_b}) {
      chain->erase(std::unique(chain->begin(), chain->end()), chain->end());
    }
  }
  return out;
}

}  // namespace torvis
