#pragma once

#include <optional>
#include <string>

#include "torvis/assembly.hpp"
#include "torvis/cylinder_vr.hpp"
#include "torvis/orientation.hpp"
#include "torvis/path_system.hpp"
#include "torvis/render.hpp"
#include "torvis/validate.hpp"

namespace torvis {

struct PipelineOptions {
  bool allow_planar_fallback = false;
  bool compact = true;
  bool validate = true;
};

struct PipelineResult {
  FlatInput original;
  FlatInput augmented;
  std::vector<EdgeId> added_edges;
  PathSystem paths;
  StOrder order;
  CylinderDrawing cylinder;
  SurfaceDrawing drawing;
  ValidationReport report;
};

// parse -> augment -> cut -> paths -> orient -> draw -> assemble -> compact
// -> validate. Throws torvis::Error on any stage failure; a failed
// validation is reported in `report`, not thrown.
PipelineResult runPipeline(const FlatInput& input, const PipelineOptions& opt);

// Exit-code mapping: 0 success, 1 invalid input, 2 internal invariant
// violation, 3 validation failure.
int errorExitCode(const Error& e);

}  // namespace torvis
