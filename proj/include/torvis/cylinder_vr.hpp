#pragma once

#include <vector>

#include "torvis/orientation.hpp"
#include "torvis/path_system.hpp"

namespace torvis {

// Cyclic order-maintenance structure for columns. Coordinates do not exist
// until linearize(); construction only manipulates neighbor links.
class ColumnRegistry {
 public:
  struct Column {
    int next = -1, prev = -1;
    EdgeId pending = -1;  // open cut edge on this column, -1 if retired
    int path = -1;        // exclusive path tag
    int top_row = -1;     // highest row with content
  };

  int createFirst();
  int insertAfter(int h);
  int insertBefore(int h) { return insertAfter(col_[h].prev); }

  Column& at(int h) { return col_[h]; }
  const Column& at(int h) const { return col_[h]; }
  int next(int h) const { return col_[h].next; }
  int prev(int h) const { return col_[h].prev; }
  int size() const { return static_cast<int>(col_.size()); }

  // all pending handles in cyclic order starting from `anchor`
  std::vector<int> pendingCycle(int anchor) const;

 private:
  std::vector<Column> col_;
};

struct CylVertexSeg {
  VertexId v = -1;
  int row = -1;
  int hcol_lo = -1, hcol_hi = -1;  // registry handles
  bool full_circle = false;
  int x_lo = -1, x_hi = -1;        // filled by linearization
  bool wraps_x = false;
};

struct CylEdgeSeg {
  EdgeId ghat_edge = -1;
  int hcol = -1;
  int row_lo = -1, row_hi = -1;
  int x = -1;  // filled by linearization
};

struct CylinderDrawing {
  int width = 0;
  int height = 0;                      // one row per vertex
  std::vector<CylVertexSeg> vseg;      // indexed by ghat vertex
  std::vector<CylEdgeSeg> eseg;        // indexed by ghat edge
  std::vector<int> path_hcol;          // path index -> column handle
  std::vector<int> path_x;             // path index -> column x
  ColumnRegistry registry;
  std::vector<int> col_x;              // handle -> x
};

// The incremental construction: vertices are placed one row at a time in
// st-order; every incoming edge closes on its associated column, every
// outgoing path edge reuses its path's column, and other outgoing edges get
// fresh columns inserted in rotation order. At vertices carrying no path
// column, the leftmost outgoing edge reuses the leftmost incoming column.
// Construction invariants are asserted after every placement.
CylinderDrawing drawCylinder(const PathSystem& ps, const StOrder& order);

// Assigns integer x coordinates: the cyclic order is cut directly after the
// last path column (so path columns come out in increasing x), or at the
// first column when there are no paths.
void linearizeColumns(CylinderDrawing& drawing);

}  // namespace torvis
