#pragma once

#include <string>
#include <vector>

#include "torvis/assembly.hpp"
#include "torvis/surface_input.hpp"

namespace torvis {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // first offending pair / vertex, empty when passing
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  std::vector<std::vector<EdgeId>> recovered_rotation;  // per vertex
  int w = 0, h = 0, shared_vertices = 0;

  bool allPass() const;
  std::string summary() const;
};

// All checks are wrap-aware and use integer arithmetic only:
//  1 vertex segments pairwise disjoint
//  2 edge segments pairwise disjoint (touching endpoints on a shared
//    vertex segment are contacts, not overlaps)
//  3 every edge segment ends on its endpoints' vertex segments, with the
//    mirror continuation on the Klein bottle
//  4 no edge segment interior meets a vertex segment
//  5 path columns are exclusive (when path metadata is present)
//  6 the recovered rotation system equals the input's
//  7 the drawn edge and vertex sets equal the input's
ValidationReport validateDrawing(const SurfaceDrawing& dr,
                                 const FlatInput& original);

// Attachment order per vertex: top attachments left to right along the
// segment, then bottom attachments right to left, as a clockwise cycle.
std::vector<std::vector<EdgeId>> recoverRotation(const SurfaceDrawing& dr,
                                                 const SurfaceMap& g);

// Orthogonal-drawing oracle: polyline disjointness, endpoint/port structure,
// rotation recovery, wrap consistency, edge-set equality.
ValidationReport validateOrtho(const OrthoDrawing& dr, const FlatInput& original);

}  // namespace torvis
