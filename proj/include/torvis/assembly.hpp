#pragma once

#include <vector>

#include "torvis/cylinder_vr.hpp"

namespace torvis {

// Final drawing on the rectangular flat surface. Columns are integers
// 0..w-1; the horizontal boundary identifies column x with x on the torus
// and with w-1-x on the Klein bottle. A boundary-crossing edge segment
// occupies rows [0..y_lo] on column x plus rows [y_hi..h-1] on the partner
// column; a plain segment occupies [y_lo..y_hi] on column x.
struct SurfEdgeSeg {
  EdgeId edge = -1;  // original input edge id
  int x = -1;
  int y_lo = -1, y_hi = -1;
  bool crosses = false;
  int path = -1;        // path copy provenance (-1 none)
  bool augmented = false;
  int copy_tag = 0;     // disambiguates parallel copies before dedup
};

struct SurfVertexSeg {
  VertexId v = -1;
  int y = -1;
  int x_lo = -1, x_hi = -1;
  bool wraps_x = false;
};

struct SurfaceDrawing {
  Surface surface = Surface::torus;
  int w = 0, h = 0;
  std::vector<SurfVertexSeg> vertices;
  std::vector<SurfEdgeSeg> edges;

  // path metadata for the exclusivity check; empty after columns vanish
  std::vector<int> path_x;                          // column of l_i
  std::vector<std::vector<VertexId>> path_vertices; // original vertex ids
  std::vector<std::vector<EdgeId>> path_edges;      // original edge ids on l_i

  int shared_vertices = 0;

  bool coversColumn(const SurfVertexSeg& vs, int x) const {
    return vs.wraps_x ? (x >= vs.x_lo || x <= vs.x_hi)
                      : (x >= vs.x_lo && x <= vs.x_hi);
  }
  int mirrorColumn(int x) const {
    return surface == Surface::klein ? w - 1 - x : x;
  }
};

// Removes the terminal segments and completes each severed edge through the
// horizontal boundary along its exclusive column (torus pairing i<->i).
SurfaceDrawing reconnectTorus(const CylinderDrawing& cyl, const PathSystem& ps,
                              const CutGraph& cut);

// Klein variant: inserts empty columns until x(l_i) + x(l_{d+1-i}) = w-1 for
// every pair (and 2 x(l_mid) = w-1 for odd d), then merges the stub pairs
// across the mirror identification.
SurfaceDrawing alignKlein(const CylinderDrawing& cyl, const PathSystem& ps,
                          const CutGraph& cut);

// Plane fallback for d = 0: the cylinder drawing reinterpreted on the
// target surface, no terminals to trim.
SurfaceDrawing adoptCylinder(const CylinderDrawing& cyl, const PathSystem& ps,
                             Surface target);

struct CompactOptions {
  bool compact = true;  // false: dedup and augmentation cleanup only
};

// (a) drops duplicate parallel copies, preferring the copy on a path
// column; (b) drops augmentation edges; (c) shrinks vertex segments to the
// span of their remaining attachments; (d) removes empty rows; (e) removes
// empty columns, on the Klein bottle only where the mirror pairing of every
// crossing edge survives. Recomputes grid stats.
SurfaceDrawing cleanAndCompact(const SurfaceDrawing& in, const SurfaceMap& g,
                               const CompactOptions& opt = {});

// Orthogonal point-drawing: every vertex becomes a grid point, every edge an
// axis-parallel polyline with at most two bends per end, wrap-aware in both
// directions. A horizontal piece runs eastward from a to b (cyclically, so
// a > b crosses the vertical seam); a vertical piece spans rows a..b.
struct OrthoPiece {
  bool horizontal = false;
  int c = 0;  // row of a horizontal piece, column of a vertical one
  int a = 0, b = 0;
};

enum class Port { N = 0, E = 1, S = 2, W = 3 };

struct OrthoEdge {
  EdgeId edge = -1;
  std::vector<OrthoPiece> pieces;
  bool crosses = false;           // through the horizontal boundary
  VertexId va = -1, vb = -1;      // endpoints (vb is the top side when
                                  // crossing)
  Port port_a = Port::N, port_b = Port::N;
};

struct OrthoDrawing {
  Surface surface = Surface::torus;
  int w = 0, h = 0;
  std::vector<std::pair<int, int>> points;  // vertex -> (x, y)
  std::vector<OrthoEdge> edges;
  int mirrorColumn(int x) const {
    return surface == Surface::klein ? w - 1 - x : x;
  }
};

OrthoDrawing toOrthogonal(const SurfaceDrawing& dr, const SurfaceMap& g);

}  // namespace torvis
