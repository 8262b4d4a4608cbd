#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "torvis/surface_input.hpp"

namespace torvis::gen {

// Classical embeddings used by the shipped example inputs.
SurfaceMap k7Rotation();       // K7 on the torus, 14 triangular faces
SurfaceMap k5Rotation();       // K5 on the torus, 5 quadrilateral faces
std::vector<std::pair<int, int>> petersenEdges();

// Enumerates all valid cut data for a torus rotation system by walking
// simple cycles of the dual graph, shortest first. The callback returns
// false to stop the enumeration.
void forEachTorusCut(const SurfaceMap& map, int max_d,
                     const std::function<bool(const FlatInput&)>& cb);
std::optional<FlatInput> findTorusCut(const SurfaceMap& map);

// Enumerates every rotation system of a fixed multigraph (first incident
// dart pinned per vertex, the rest permuted). The callback returns false to
// stop.
void forEachRotationSystem(int n, const std::vector<std::pair<int, int>>& ends,
                           const std::vector<int8_t>& signs, Surface surface,
                           const std::function<bool(const SurfaceMap&)>& cb);

// Searches for a Klein-bottle input of the given abstract graph with d
// bottom crossings: some rotation system, crossing set, order and
// orientation whose cut graph is a 2-connected plane map.
std::optional<FlatInput> searchKleinInput(
    int n, const std::vector<std::pair<int, int>>& edges, int d);

// Random valid input: a random 2-connected plane map with two terminals of
// equal degree, un-cut onto the requested surface. Valid by construction
// (cellular, loopless, all cut faces simple).
FlatInput randomFlatInput(std::uint64_t seed, Surface surface);

}  // namespace torvis::gen
