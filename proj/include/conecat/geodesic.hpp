#pragma once

#include "conecat/cone_surface.hpp"

#include <vector>

namespace conecat {

/// A unit tangent vector on a cone surface, in the chart of triangle `tri`.
/// `edge` names the triangle edge the base point lies on (or -1).
struct TangentVector {
  int tri = 0;
  Vec3 pos = Vec3::Zero();
  Vec3 dir = Vec3::UnitX();
  int edge = -1;
};

/// Point of triangle `tri` with barycentric-style weights (normalised onto the
/// sphere for κ>0).
Vec3 point_in_triangle(const ConeSurface& s, int tri, const std::array<double, 3>& weights);

/// Unit tangent at pos making angle `angle` (counter-clockwise) with the
/// direction of the triangle's edge 0.
Vec3 direction_in_triangle(const ConeSurface& s, int tri, const Vec3& pos, double angle);

/// Base point on edge e of tri at fraction u from its start corner, pointing
/// into tri at angle `angle` ∈ (0, π) from the edge direction.
TangentVector edge_start(const ConeSurface& s, HalfEdge e, double u, double angle);

/// Unit tangent leaving corner `corner` of tri at angle ∈ (0, corner angle)
/// measured from edge `corner`.
TangentVector corner_start(const ConeSurface& s, int tri, int corner, double angle);

enum class PathStatus { Open, Closed, HitVertex };

std::string_view to_string(PathStatus status);

struct GeodesicSegment {
  int tri = 0;
  Vec3 entry = Vec3::Zero(), exit = Vec3::Zero();
  Vec3 entry_dir = Vec3::Zero(), exit_dir = Vec3::Zero();
  double length = 0.0;
  int exit_edge = -1;      // -1 when the path stops inside the triangle
  double exit_param = 0.0; // fraction along exit_edge from its start corner
};

struct GeodesicPath {
  std::vector<GeodesicSegment> segments;
  double length = 0.0;
  PathStatus status = PathStatus::Open;
  int hit_vertex = -1;
  /// Tangent vector at the end of the path (at the closing point for closed
  /// paths).
  TangentVector end;
  /// Closing mismatch in position and direction for closed paths.
  double closure_position_error = 0.0;
  double closure_direction_error = 0.0;
};

struct TraceOptions {
  double closure_tol = 1e-7;
  bool detect_closure = true;
  /// Continue straight through vertices of cone angle 2π.
  bool pass_smooth_vertices = true;
  double vertex_tol = 1e-9;
  /// Guard against runaway traces on degenerate input.
  int max_segments = 100000;
};

/// Develops the triangles met by the geodesic into the model surface and
/// extends it until max_length, closure, or arrival at a cone point.
GeodesicPath trace_geodesic(const ConeSurface& s, const TangentVector& start, double max_length,
                            const TraceOptions& options = {});

/// Signed angle at the vertex between the arriving path and an outgoing ray;
/// used by loop searches. Returns the position of the arrival ray (pointing
/// back along the path) in the vertex's angular coordinate [0, cone angle).
double arrival_link_angle(const ConeSurface& s, const GeodesicPath& path);

/// Angular coordinate in the link of the vertex at `corner` of tri for a ray
/// leaving at local angle `angle` inside that corner.
double link_angle(const ConeSurface& s, int tri, int corner, double angle);

}  // namespace conecat
