#pragma once

#include <string>

#include "zariski/surface.hpp"

namespace zariski {

// Surface file format (JSON, UTF-8):
//   { "name": str, "rank": int, "gram": [[int,...],...], "ample": [int,...],
//     "curves": [ { "name": str, "class": [int,...] }, ... ],
//     "basis": [str,...] (optional) }
// Integer fields also accept decimal strings so entries beyond the range of
// JSON numbers stay exact. Curve self-intersections are recomputed on load.

SurfaceModel surface_from_json(const std::string& text);
std::string surface_to_json(const SurfaceModel& x);

// File variants: throw ParseError on unreadable/ill-formed input,
// ValidationError when the parsed model violates its invariants.
SurfaceModel load_surface(const std::string& path);
void save_surface(const SurfaceModel& x, const std::string& path);

}  // namespace zariski
