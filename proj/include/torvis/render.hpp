#pragma once

#include <string>

#include "torvis/assembly.hpp"

namespace torvis {

// Stable-field-order JSON for a surface drawing. The header records the
// column convention; `paths` carries the exclusivity metadata when present.
std::string drawingToJson(const SurfaceDrawing& dr);
SurfaceDrawing drawingFromJson(const std::string& text);

std::string orthoToJson(const OrthoDrawing& dr);

// Deterministic SVG: 20 px grid cells, vertex segments as thick horizontal
// bars, edge segments as thin vertical bars, boundary-crossing parts drawn
// as two stubs, the fundamental rectangle outlined and its identifications
// annotated.
std::string renderSVG(const SurfaceDrawing& dr);
std::string renderOrthoSVG(const OrthoDrawing& dr);

}  // namespace torvis
