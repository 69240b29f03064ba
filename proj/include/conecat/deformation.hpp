#pragma once

#include "conecat/cone_surface.hpp"
#include "conecat/exec.hpp"

#include <vector>

namespace conecat {

/// The surface with the same gluing and side lengths, each triangle replaced by
/// its curvature-κ₂ comparison triangle. Base must have κ=4 and 0 ≤ κ₂ ≤ 4.
ConeSurface comparison_member(const ConeSurface& base, double kappa2);

enum class Trend { NonDecreasing, NonIncreasing, Constant, Mixed };

std::string_view to_string(Trend trend);

struct MonotonicityReport {
  int vertex = 0;
  std::vector<std::pair<double, double>> rows;  // (κ′, cone angle)
  Trend trend = Trend::Constant;
};

/// Cone angle of `vertex` across the family on a κ′ grid (sorted ascending)
/// with the direction actually observed.
MonotonicityReport angle_monotonicity_report(const ConeSurface& base, int vertex, std::vector<double> kappas,
                                             double tol = kTol);

/// Incenter of a triangle in its canonical chart, from two angle bisectors.
Vec3 incenter(const TriangleShape& t);

struct LipschitzEstimate {
  double constant = 1.0;
  int triangle = -1;
  double kappa2 = 4.0;
  int sampling = 0;
};

/// Map from t to its κ₂ comparison triangle that is an arclength isometry on
/// the boundary and sends each segment from the incenter to a boundary point
/// proportionally onto the matching segment. The bi-Lipschitz constant is the
/// largest of ‖dF‖ and ‖dF⁻¹‖ over a sampling × sampling grid.
LipschitzEstimate incenter_bilipschitz(const TriangleShape& t, double kappa2, int sampling = 64,
                                       Exec exec = Exec::Parallel);

/// Largest constant over the triangles of a surface.
LipschitzEstimate surface_bilipschitz(const ConeSurface& base, double kappa2, int sampling = 64,
                                      Exec exec = Exec::Parallel);

/// C = c⁴/(4π): the flat isoperimetric constant weakened by length distortion
/// c and area distortion c². Rejects c < 1.
double isoperimetric_constant(double c_max);

}  // namespace conecat
