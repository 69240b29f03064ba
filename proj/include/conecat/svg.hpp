#pragma once

#include "conecat/arrangement.hpp"
#include "conecat/geodesic.hpp"

#include <string>

namespace conecat {

/// The triangles met by a path, developed into the chart of the first one and
/// projected onto the tangent plane at the start, with the path on top.
std::string svg_geodesic(const ConeSurface& s, const GeodesicPath& path);

/// Tiles developed outward from tile 0 across the gluing (a spanning tree),
/// front hemisphere only for κ>0.
std::string svg_tiling(const ConeSurface& s);

/// Real lines of the arrangement in the affine chart z = 1, window [-3, 3]².
std::string svg_arrangement(const Arrangement& a);

}  // namespace conecat
