#pragma once

#include "conecat/exec.hpp"
#include "conecat/model.hpp"

#include <array>
#include <functional>

namespace conecat {

/// A geodesic triangle of M²_κ stored by its side lengths.
///
/// Vertex i is joined to vertex i+1 (mod 3) by side i, so the angle at vertex
/// i sits between sides i and i+2 and faces side i+1. Construction validates
/// the strict triangle inequality and, for κ>0, perimeter < 2π/√κ.
class TriangleShape {
 public:
  TriangleShape(ModelKappa kappa, std::array<double, 3> sides);

  /// Spherical triangle (κ>0) with the given vertex angles, via the polar
  /// law of cosines. Requires each angle in (0, π) and angle sum > π.
  static TriangleShape from_angles(ModelKappa kappa, std::array<double, 3> angles);

  ModelKappa kappa() const noexcept { return kappa_; }
  const std::array<double, 3>& sides() const noexcept { return sides_; }
  /// Side i, indices taken mod 3.
  double side(int i) const { return sides_[static_cast<std::size_t>(((i % 3) + 3) % 3)]; }
  double perimeter() const noexcept { return sides_[0] + sides_[1] + sides_[2]; }

  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;

 private:
  ModelKappa kappa_;
  std::array<double, 3> sides_;
};

/// Vertex angles of t (angle i at vertex i), each in (0, π).
std::array<double, 3> solve_angles(const TriangleShape& t);

/// Length of the side facing an angle, given the two sides enclosing it.
double opposite_side(ModelKappa kappa, double adjacent1, double adjacent2, double angle);

double triangle_area(const TriangleShape& t);

/// Same side lengths, curvature kappa2. Throws PerimeterTooLarge when the
/// sides do not fit in M²_kappa2.
TriangleShape comparison_triangle(const TriangleShape& t, ModelKappa kappa2);

/// Canonical development of t in the model chart: vertex 0, then vertex 1
/// along the first axis, then vertex 2 on the positive side.
std::array<Vec3, 3> embed_triangle(const TriangleShape& t);

/// Length of a complete circle of geodesic curvature k_geo in M²_κ.
double circle_length(ModelKappa kappa, double k_geo);

struct LargeTest {
  bool large = false;
  double min_altitude = 0.0;
  std::array<double, 3> altitudes{};  // altitude i drops from vertex i
};

/// Distance from each vertex to the opposite side, measured along the
/// perpendicular whose foot lies on the side (the nearer endpoint when no
/// foot does). Only defined for κ=4; large iff every altitude ≥ π/4 − tol.
LargeTest is_large(const TriangleShape& t, double tol = kTol);

/// A point on a side of a geodesic triangle: side index and arc-length
/// fraction t ∈ [0,1] measured from the side's first vertex.
struct SidePoint {
  int side = 0;
  double t = 0.0;
};

/// A geodesic triangle in some metric space, known through its side lengths
/// and a distance oracle between points on its sides.
struct SpaceTriangle {
  std::array<double, 3> sides{};
  std::function<double(const SidePoint&, const SidePoint&)> distance;
};

/// The triangle t seen as a triangle in its own model space.
SpaceTriangle model_space_triangle(const TriangleShape& t);

struct CatSample {
  bool pass = true;
  /// max over sampled pairs of d(x,y) − d(x̃,ỹ); ≤ tol means no violation.
  double worst_margin = 0.0;
  SidePoint worst_x, worst_y;
  long pairs = 0;
};

/// Samples `samples` points per side and compares every pair against the
/// comparison triangle in M²_κ. A triangle that is degenerate in M²_κ, or whose
/// perimeter is too long to have a comparison triangle, passes vacuously.
CatSample cat_sample_test(const SpaceTriangle& tri, ModelKappa kappa, int samples, Exec exec = Exec::Serial,
                          double tol = kTol);

}  // namespace conecat
