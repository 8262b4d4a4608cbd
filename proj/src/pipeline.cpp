#include "torvis/pipeline.hpp"

#include <numeric>

namespace torvis {

int errorExitCode(const Error& e) { return isInternalError(e.code()) ? 2 : 1; }

namespace {

// d = 0 fallback: the map is already plane; pick two distinct vertices on a
// common face as the poles and draw directly on the cylinder.
PathSystem planePathSystem(const SurfaceMap& map) {
  FaceSet fs = faceCycles(map);
  require(!fs.faces.empty(), ErrorCode::NotCellular, "empty map");
  VertexId s = -1, t = -1;
  for (const FaceCycle& f : fs.faces) {
    for (Dart d : f.darts) {
      VertexId u = map.tail(d);
      if (s < 0) s = u;
      else if (u != s) {
        t = u;
        break;
      }
    }
    if (t >= 0) break;
    s = -1;
  }
  require(t >= 0, ErrorCode::NotCellular, "no face with two distinct corners");

  PathSystem ps;
  ps.ghat = map;
  ps.s = s;
  ps.t = t;
  ps.d = 0;
  ps.copy_origin.resize(map.edgeCount());
  std::iota(ps.copy_origin.begin(), ps.copy_origin.end(), 0);
  ps.used_by_path.assign(map.edgeCount(), -1);
  return ps;
}

}  // namespace

PipelineResult runPipeline(const FlatInput& input, const PipelineOptions& opt) {
  PipelineResult r;
  r.original = input;

  auto [augmented, added] = augmentFaces(input);
  r.augmented = augmented;
  r.added_edges = added;
  const int original_m = input.map.edgeCount();

  if (augmented.d() == 0) {
    require(opt.allow_planar_fallback, ErrorCode::NotCellular,
            "no bottom crossings: the embedding is planar; rerun with "
            "--allow-planar-fallback to draw it on the cylinder");
    r.paths = planePathSystem(augmented.map);
    r.order = respectingOrientation(r.paths);
    r.cylinder = drawCylinder(r.paths, r.order);
    r.drawing = adoptCylinder(r.cylinder, r.paths, input.map.surface());
  } else {
    CutGraph cut = buildCutGraph(augmented);
    // The split-and-peel construction is only guaranteed for a good spine
    // path; retry along the candidate list when the peeled system admits no
    // respecting orientation.
    auto spines = spineCandidates(cut, 4096);
    bool done = false;
    std::string last_error;
    for (const auto& spine : spines) {
      try {
        PathSystem ps = buildPathSystem(cut, spine);
        StOrder order = respectingOrientation(ps);
        r.paths = std::move(ps);
        r.order = std::move(order);
        done = true;
        break;
      } catch (const Error& e) {
        if (!isInternalError(e.code())) throw;
        last_error = e.what();
      }
    }
    require(done, ErrorCode::MergedCycle,
            "no spine path admits a respecting orientation (" +
                std::to_string(spines.size()) + " candidates tried; last: " +
                last_error + ")");
    r.cylinder = drawCylinder(r.paths, r.order);
    r.drawing = input.map.surface() == Surface::klein
                    ? alignKlein(r.cylinder, r.paths, cut)
                    : reconnectTorus(r.cylinder, r.paths, cut);
  }

  for (auto& es : r.drawing.edges)
    es.augmented = es.edge >= original_m;
  CompactOptions copt;
  copt.compact = opt.compact;
  r.drawing = cleanAndCompact(r.drawing, r.augmented.map, copt);

  if (opt.validate) r.report = validateDrawing(r.drawing, r.original);
  return r;
}

}  // namespace torvis
