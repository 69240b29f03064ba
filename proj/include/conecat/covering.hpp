#pragma once

#include "conecat/cone_surface.hpp"

namespace conecat {

struct CoveringResult {
  /// Largest sampled distance to the nearest cone point.
  double max_distance = 0.0;
  /// Mesh spacing; the true supremum lies within this of max_distance.
  double error_bound = 0.0;
  int worst_triangle = 0;
  std::array<double, 3> worst_weights{};
  int nodes = 0;
  /// max_distance + error_bound < π/4.
  bool below_pi_over_4 = false;
};

/// Sup over the surface of the distance to the nearest cone point, estimated by
/// multi-source Dijkstra on a barycentric grid (`subdivisions` per side) whose
/// in-triangle links are exact model chords. Requires κ=4, at least three cone
/// points and every cone angle < 2π; otherwise throws NotApplicable.
CoveringResult covering_radius(const ConeSurface& s, int subdivisions = 24);

}  // namespace conecat
