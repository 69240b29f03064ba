#pragma once

#include "conecat/exec.hpp"
#include "conecat/geodesic.hpp"

#include <limits>
#include <vector>

namespace conecat {

enum class GeodesicKind {
  Smooth,      // closed geodesic avoiding the vertices
  VertexLoop,  // geodesic loop based at a cone point
};

std::string_view to_string(GeodesicKind kind);

struct ClosedGeodesic {
  GeodesicKind kind = GeodesicKind::Smooth;
  double length = 0.0;
  TangentVector start;
  /// Undirected edge ids crossed, in canonical cyclic order.
  std::vector<int> itinerary;
  int vertex = -1;
  /// For loops: the two angles the loop cuts the vertex link into. The loop is
  /// locally geodesic through the vertex only when both are ≥ π.
  double sector_a = 0.0, sector_b = 0.0;
  double position_error = 0.0, direction_error = 0.0;
};

struct SearchGrid {
  int edge_samples = 8;
  int angle_samples = 16;
  int vertex_directions = 32;
};

struct ClosedGeodesicSearch {
  std::vector<ClosedGeodesic> found;        // deduplicated, sorted by length
  std::vector<ClosedGeodesic> below_bound;  // subset strictly shorter than the bound
  double length_bound = 0.0;
  double search_length = 0.0;
  /// Shortest length found; an upper bound for the true systole.
  double systole_estimate = std::numeric_limits<double>::infinity();
  long traces = 0;
};

/// Shoots geodesics from a grid of (edge point, angle) initial conditions and
/// from a fan of directions at each cone point, refines near-returns, and
/// keeps the ones that close up. Absence below the bound is evidence only.
ClosedGeodesicSearch find_closed_geodesics(const ConeSurface& s, double length_bound, const SearchGrid& grid = {},
                                           Exec exec = Exec::Parallel);

/// Default systole bound 2π/√κ (infinite for κ=0).
double default_length_bound(ModelKappa kappa);

/// Local link check, then the systole search, then an exact argument
/// (grompi4 certificate or the smooth round sphere) for a positive verdict.
Certificate global_cat_verdict(const ConeSurface& s, double length_bound, const SearchGrid& grid = {},
                               Exec exec = Exec::Parallel);
Certificate global_cat_verdict(const ConeSurface& s);

}  // namespace conecat
