#pragma once

#include "conecat/cone_surface.hpp"

namespace conecat {

/// Combinatorial CAT(4) test for a κ=4 triangulated sphere: (a) every
/// triangle is large, (b) every vertex has valence ≥ 4, (c) no two vertices
/// share more than one edge, (d) every 3-cycle of the 1-skeleton bounds a face.
/// Valence is required at every vertex, smooth or not.
Certificate grompi4_certify(const ConeSurface& s, double tol = kTol);

}  // namespace conecat
