#include "torvis/cylinder_vr.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace torvis {

int ColumnRegistry::createFirst() {
  require(col_.empty(), ErrorCode::BlockNotConsecutive,
          "registry already seeded");
  col_.push_back(Column{});
  col_[0].next = col_[0].prev = 0;
  return 0;
}

int ColumnRegistry::insertAfter(int h) {
  int id = static_cast<int>(col_.size());
  Column c;
  c.prev = h;
  c.next = col_[h].next;
  col_.push_back(c);
  col_[col_[id].prev].next = id;
  col_[col_[id].next].prev = id;
  return id;
}

std::vector<int> ColumnRegistry::pendingCycle(int anchor) const {
  std::vector<int> out;
  int h = anchor;
  do {
    if (col_[h].pending >= 0) out.push_back(h);
    h = col_[h].next;
  } while (h != anchor);
  return out;
}

namespace {

struct Builder {
  const PathSystem& ps;
  const StOrder& order;
  CylinderDrawing dr;

  std::vector<int> open_col;  // ghat edge -> column handle while pending
  std::vector<int> open_row;  // ghat edge -> row of its placed endpoint

  explicit Builder(const PathSystem& ps_, const StOrder& order_)
      : ps(ps_), order(order_) {
    const SurfaceMap& g = ps.ghat;
    dr.vseg.resize(g.vertexCount());
    dr.eseg.resize(g.edgeCount());
    dr.path_hcol.assign(ps.d, -1);
    open_col.assign(g.edgeCount(), -1);
    open_row.assign(g.edgeCount(), -1);
  }

  bool edgeForwardFrom(Dart d) const {
    return order.index[ps.ghat.tail(d)] < order.index[ps.ghat.head(d)];
  }

  void placeSource() {
    const SurfaceMap& g = ps.ghat;
    VertexId s = order.order[0];
    const auto& rot = g.rotation(s);
    require(!rot.empty(), ErrorCode::BlockNotConsecutive, "isolated source");
    int first = dr.registry.createFirst();
    int cur = first;
    for (size_t i = 0; i < rot.size(); ++i) {
      if (i > 0) cur = dr.registry.insertAfter(cur);
      Dart d = rot[i];
      require(edgeForwardFrom(d), ErrorCode::BlockNotConsecutive,
              "source has an incoming edge");
      openEdge(d.edge(), cur, 0);
    }
    auto& vs = dr.vseg[s];
    vs.v = s;
    vs.row = 0;
    vs.hcol_lo = first;
    vs.hcol_hi = dr.registry.prev(first);
    vs.full_circle = true;
  }

  void openEdge(EdgeId e, int hcol, int row) {
    auto& col = dr.registry.at(hcol);
    require(col.pending < 0, ErrorCode::BlockNotConsecutive,
            "column already carries a pending edge");
    require(col.top_row <= row, ErrorCode::BlockNotConsecutive,
            "column is not empty above the placed endpoint");
    col.pending = e;
    col.top_row = row;
    int p = ps.used_by_path[e];
    if (p >= 0) {
      if (dr.path_hcol[p] < 0) {
        dr.path_hcol[p] = hcol;
        col.path = p;
      }
      require(dr.path_hcol[p] == hcol, ErrorCode::ExclusivityViolation,
              "path " + std::to_string(p) + " leaves its column");
    }
    open_col[e] = hcol;
    open_row[e] = row;
  }

  void placeVertex(int rank) {
    const SurfaceMap& g = ps.ghat;
    VertexId v = order.order[rank];
    const auto& rot = g.rotation(v);
    const int deg = static_cast<int>(rot.size());

    // incoming darts form one contiguous arc of the rotation; find where
    // the outgoing block starts
    int first_out = -1;
    int in_count = 0;
    for (int i = 0; i < deg; ++i) {
      bool in = !edgeForwardFrom(rot[i]);
      if (in) ++in_count;
      else if (!edgeForwardFrom(rot[(i + deg - 1) % deg])) first_out = i;
    }
    require(in_count > 0, ErrorCode::BlockNotConsecutive,
            "vertex " + std::to_string(v) + " has no incoming edge");
    if (in_count == deg) first_out = 0;  // sink: arbitrary anchor
    require(first_out >= 0, ErrorCode::BlockNotConsecutive,
            "incoming edges of vertex " + std::to_string(v) +
                " are not consecutive in the rotation");
    for (int i = 0; i < deg; ++i) {
      bool in = !edgeForwardFrom(rot[(first_out + i) % deg]);
      bool expect_in = i >= deg - in_count;
      require(in == expect_in, ErrorCode::BlockNotConsecutive,
              "incoming edges of vertex " + std::to_string(v) +
                  " are not consecutive in the rotation");
    }

    // in-block left to right = reverse of the incoming rotation arc
    std::vector<Dart> in_l2r(in_count);
    for (int i = 0; i < in_count; ++i)
      in_l2r[in_count - 1 - i] = rot[(first_out + deg - in_count + i) % deg];
    std::vector<Dart> out_l2r(rot.begin(), rot.end());
    {
      std::vector<Dart> tmp(deg);
      for (int i = 0; i < deg; ++i) tmp[i] = rot[(first_out + i) % deg];
      tmp.resize(deg - in_count);
      out_l2r = std::move(tmp);
    }

    // locate the pending run of the in-block columns
    std::vector<int> want(in_count);
    for (int i = 0; i < in_count; ++i) {
      EdgeId e = in_l2r[i].edge();
      require(open_col[e] >= 0, ErrorCode::BlockNotConsecutive,
              "incoming edge has no pending column");
      want[i] = open_col[e];
    }
    int run_start = want.front();
    auto pending = dr.registry.pendingCycle(run_start);
    const int P = static_cast<int>(pending.size());
    require(P >= in_count, ErrorCode::BlockNotConsecutive, "run too large");
    // pending starts at run_start == want[0]; the run must read exactly
    // want[0..in_count)
    bool full_circle = P == in_count;
    for (int i = 0; i < in_count; ++i) {
      require(pending[i] == want[i], ErrorCode::BlockNotConsecutive,
              "cut columns of vertex " + std::to_string(v) +
                  " do not form a consecutive block in the pending order");
    }
    int run_end = want.back();

    // place the vertex and close the incoming edges
    auto& vs = dr.vseg[v];
    vs.v = v;
    vs.row = rank;
    vs.hcol_lo = run_start;
    vs.hcol_hi = run_end;
    vs.full_circle = full_circle;
    for (Dart d : in_l2r) {
      EdgeId e = d.edge();
      auto& es = dr.eseg[e];
      es.ghat_edge = e;
      es.hcol = open_col[e];
      es.row_lo = open_row[e];
      es.row_hi = rank;
      auto& col = dr.registry.at(open_col[e]);
      col.pending = -1;
      col.top_row = rank;
      open_col[e] = -1;
    }

    if (out_l2r.empty()) return;  // sink

    // reused columns: outgoing path edges continue their path's column;
    // without any path through v the leftmost outgoing edge reuses the
    // leftmost incoming column
    std::vector<int> reuse_col(out_l2r.size(), -1);
    std::vector<int> reused_handles;
    for (size_t i = 0; i < out_l2r.size(); ++i) {
      int p = ps.used_by_path[out_l2r[i].edge()];
      if (p < 0) continue;
      require(dr.path_hcol[p] >= 0, ErrorCode::ExclusivityViolation,
              "outgoing path edge before its path opened");
      reuse_col[i] = dr.path_hcol[p];
      reused_handles.push_back(dr.path_hcol[p]);
    }
    if (reused_handles.empty()) {
      reuse_col[0] = run_start;
      reused_handles.push_back(run_start);
    }

    // the reused handles must appear left-to-right in the same order as the
    // outgoing block, or two paths through v would cross
    {
      std::vector<int> order_in_run;
      for (int h : want)
        if (std::find(reused_handles.begin(), reused_handles.end(), h) !=
            reused_handles.end())
          order_in_run.push_back(h);
      require(order_in_run == reused_handles, ErrorCode::NonCrossingViolation,
              "column reuse order at vertex " + std::to_string(v) +
                  " conflicts with the rotation");
    }

    // insert fresh columns around the reused anchors, in rotation order
    int anchor = -1;
    int first_reused = reused_handles.front();
    std::vector<std::pair<EdgeId, int>> to_open;  // (edge, handle)
    for (size_t i = 0; i < out_l2r.size(); ++i) {
      EdgeId e = out_l2r[i].edge();
      if (reuse_col[i] >= 0) {
        anchor = reuse_col[i];
        to_open.push_back({e, anchor});
        continue;
      }
      int h = anchor < 0 ? dr.registry.insertBefore(first_reused)
                         : (anchor = dr.registry.insertAfter(anchor));
      if (anchor < 0) {
        // keep pre-anchor inserts in order: subsequent ones go after this
        anchor = h;
      }
      to_open.push_back({e, h});
    }
    for (auto [e, h] : to_open) openEdge(e, h, rank);

    // extend the vertex segment over columns inserted beyond the run edges
    while (true) {
      int p = dr.registry.prev(vs.hcol_lo);
      bool ours = false;
      for (auto [e, h] : to_open) ours = ours || h == p;
      if (!ours) break;
      vs.hcol_lo = p;
    }
    while (true) {
      int nx = dr.registry.next(vs.hcol_hi);
      bool ours = false;
      for (auto [e, h] : to_open) ours = ours || h == nx;
      if (!ours) break;
      vs.hcol_hi = nx;
    }
  }
};

}  // namespace

CylinderDrawing drawCylinder(const PathSystem& ps, const StOrder& order) {
  Builder b(ps, order);
  const int N = ps.ghat.vertexCount();
  require(order.order[0] == ps.s && order.order[N - 1] == ps.t,
          ErrorCode::BlockNotConsecutive, "order does not run from s to t");
  b.placeSource();
  for (int rank = 1; rank < N; ++rank) b.placeVertex(rank);
  for (EdgeId e = 0; e < ps.ghat.edgeCount(); ++e)
    require(b.open_col[e] < 0, ErrorCode::BlockNotConsecutive,
            "edge left pending after the sink");
  b.dr.height = N;
  linearizeColumns(b.dr);

  // exclusivity: every segment on a path column belongs to that path
  CylinderDrawing& dr = b.dr;
  for (int p = 0; p < ps.d; ++p) {
    int x = dr.path_x[p];
    std::set<VertexId> on_path;
    for (VertexId v : ps.pathVertices(p)) on_path.insert(v);
    for (const auto& es : dr.eseg) {
      if (es.x == x)
        require(ps.used_by_path[es.ghat_edge] == p,
                ErrorCode::ExclusivityViolation,
                "foreign edge on path column " + std::to_string(p));
    }
    for (const auto& vs : dr.vseg) {
      bool covers = vs.full_circle ||
                    (!vs.wraps_x ? (vs.x_lo <= x && x <= vs.x_hi)
                                 : (x >= vs.x_lo || x <= vs.x_hi));
      if (covers)
        require(on_path.count(vs.v) > 0, ErrorCode::ExclusivityViolation,
                "foreign vertex " + std::to_string(vs.v) +
                    " on path column " + std::to_string(p));
    }
  }
  return b.dr;
}

void linearizeColumns(CylinderDrawing& dr) {
  auto& reg = dr.registry;
  require(reg.size() > 0, ErrorCode::BlockNotConsecutive, "no columns");
  int start;
  if (!dr.path_hcol.empty()) {
    // cut directly after the last path column
    start = reg.next(dr.path_hcol.back());
  } else {
    start = 0;
  }
  dr.col_x.assign(reg.size(), -1);
  int x = 0;
  int h = start;
  do {
    dr.col_x[h] = x++;
    h = reg.next(h);
  } while (h != start);
  dr.width = x;

  dr.path_x.assign(dr.path_hcol.size(), -1);
  for (size_t p = 0; p < dr.path_hcol.size(); ++p)
    dr.path_x[p] = dr.col_x[dr.path_hcol[p]];
  for (size_t p = 0; p + 1 < dr.path_x.size(); ++p)
    require(dr.path_x[p] < dr.path_x[p + 1], ErrorCode::ExclusivityViolation,
            "path columns are not in increasing order");

  for (auto& es : dr.eseg)
    if (es.hcol >= 0) es.x = dr.col_x[es.hcol];
  for (auto& vs : dr.vseg) {
    if (vs.row < 0) continue;
    if (vs.full_circle) {
      vs.x_lo = 0;
      vs.x_hi = dr.width - 1;
      vs.wraps_x = dr.width > 1;
      continue;
    }
    vs.x_lo = dr.col_x[vs.hcol_lo];
    vs.x_hi = dr.col_x[vs.hcol_hi];
    vs.wraps_x = vs.x_lo > vs.x_hi;
  }
}

}  // namespace torvis
