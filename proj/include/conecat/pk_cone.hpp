#pragma once

#include "conecat/cone_surface.hpp"

#include <vector>

namespace conecat {

/// A κ=4 sphere read as the S¹-quotient of the unit sphere of a regular PK cone.
/// The cone angle at a quotient point is taken to be the conical angle along
/// the matching singular curve upstairs.
class QuotientSphere {
 public:
  /// Throws NotApplicable unless κ=4 and the surface is a sphere.
  explicit QuotientSphere(ConeSurface surface);

  const ConeSurface& surface() const noexcept { return surface_; }
  /// (vertex, cone angle) for every vertex with angle ≠ 2π.
  std::vector<std::pair<int, double>> cone_points() const;
  /// Length of a generic S¹ fiber: twice the area of the quotient.
  double fiber_length() const noexcept { return 2.0 * surface_.area(); }

 private:
  ConeSurface surface_;
};

double fiber_length(const QuotientSphere& q);

/// Length of a geodesic upstairs at constant angle θ ∈ (0, π/2] to the fibers,
/// given the length of its projection.
double lift_length(double projected_length, double theta);

/// Geodesic curvature 2·cot θ of the projection of such a geodesic.
double projection_curvature(double theta);

/// A disk Ω bounded by the projection of a geodesic.
struct DiskRegion {
  double area = 0.0;
  /// Cone angles of the cone points inside Ω.
  std::vector<double> interior_angles;
  /// Cone points on ∂Ω as (inner sector, outer sector) angles, each ≥ π.
  std::vector<std::pair<double, double>> boundary;
};

struct HolonomyResult {
  double curvature_integral = 0.0;  // ∫_Ω K including cone-point masses
  double integral = 0.0;            // ∫ω₀ along ∂Ω
  double fiber_length = 0.0;
  double residue = 0.0;             // (∫ω₀ + 2·area) mod fiber length, in [0, l)
  bool residue_zero = false;        // within 1e-7·l of 0 modulo l
};

/// Holonomy of the fibration around ∂Ω and the congruence an embedded
/// geodesic projection would have to satisfy. Throws InconsistentRegion when
/// Ω does not fit q.
HolonomyResult holonomy(const QuotientSphere& q, const DiskRegion& region);

/// With every cone angle ≥ 2π the quantity π + ∫_Ω(2 − K/2) stays inside
/// [π, l − π] for every Ω, so no closed geodesic projects injectively.
/// Throws NotApplicable when some cone angle is below 2π.
Certificate embedded_projection_obstruction(const QuotientSphere& q, double tol = kTol);

/// CAT(0) verdict for the 4-cone over the PK sphere from a CAT(4) certificate
/// of its quotient. The certificate must be about q's surface.
Certificate cone_cat0_verdict(const QuotientSphere& q, const Certificate& cat4, double tol = kTol);

/// α_min·⌊n/2⌋ ≥ π: the n-fold cover cannot be locally CAT(0). Assumes the
/// cone is not a product of two 2-cones.
bool noncat_test(double alpha_min, int n, double tol = kTol);

/// True when the points are not contained in any open hemisphere, decided by
/// the linear program max t s.t. ⟨v, p_i⟩ ≥ t, |v_j| ≤ 1.
bool hemisphere_test(const std::vector<Vec3>& points, double tol = 1e-12);

}  // namespace conecat
