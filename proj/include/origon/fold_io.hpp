#pragma once

#include <string>

#include "origon/cp.hpp"

namespace origon {

// Serializes a crease pattern to FOLD 1.1 JSON text. The output is canonical:
// vertices are sorted by quantized coordinates, edges by sorted endpoint
// indices, and object keys alphabetically, so equal patterns produce
// byte-identical files.
std::string to_fold(const CreasePattern& cp);

// Parses FOLD JSON. Files written by to_fold restore labels, vertex rules,
// construction name and parameters. Foreign files get rule None for vertices
// on the coordinate bounding box and Interior elsewhere.
CreasePattern from_fold(const std::string& text);

// Geometric equivalence: same vertex positions (within eps, after canonical
// ordering) and the same crease segments with the same mountain/valley kinds.
bool cp_equivalent(const CreasePattern& a, const CreasePattern& b, double eps = 1e-9);

// SVG 1.1 rendering: mountains solid, valleys dashed.
std::string to_svg(const CreasePattern& cp);

}  // namespace origon
