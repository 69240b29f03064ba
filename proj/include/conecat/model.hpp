#pragma once

#include <Eigen/Dense>

#include <numbers>

namespace conecat {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default absolute tolerance for angle and length comparisons.
inline constexpr double kTol = 1e-9;

/// Curvature of a model surface M²_κ. Only κ ≥ 0 is supported.
class ModelKappa {
 public:
  explicit ModelKappa(double kappa);

  double value() const noexcept { return kappa_; }
  bool flat() const noexcept { return kappa_ == 0.0; }
  /// √κ; lengths times this are angles on the unit sphere.
  double scale() const noexcept { return scale_; }
  /// 1/√κ, infinite for the flat model.
  double radius() const noexcept;

  friend bool operator==(const ModelKappa&, const ModelKappa&) = default;

 private:
  double kappa_;
  double scale_;
};

/// A point of the model surface. For κ>0 the coordinates lie on the sphere of
/// radius 1/√κ centred at the origin; for κ=0 they lie in the plane z=0.
struct ModelPoint {
  Vec3 coords;
};

bool on_model(ModelKappa kappa, const Vec3& p, double tol = 1e-12);

double model_distance(ModelKappa kappa, const Vec3& p, const Vec3& q);

/// Unit normal of the model surface at p (outward for spheres, +z for the plane).
Vec3 model_normal(ModelKappa kappa, const Vec3& p);

/// Unit tangent at p pointing along the geodesic towards q.
Vec3 tangent_toward(ModelKappa kappa, const Vec3& p, const Vec3& q);

/// Point at distance s from p along the geodesic with unit initial tangent dir.
Vec3 exp_map(ModelKappa kappa, const Vec3& p, const Vec3& dir, double s);

/// Unit tangent of that same geodesic after travelling distance s.
Vec3 transport_direction(ModelKappa kappa, const Vec3& p, const Vec3& dir, double s);

/// Point a fraction t of the way along the geodesic from p to q.
Vec3 model_lerp(ModelKappa kappa, const Vec3& p, const Vec3& q, double t);

/// Orientation-preserving isometry of the model: x -> rotation * x + shift.
/// Spheres always have shift = 0.
struct Isometry {
  Mat3 rotation = Mat3::Identity();
  Vec3 shift = Vec3::Zero();

  Vec3 point(const Vec3& x) const { return rotation * x + shift; }
  Vec3 vector(const Vec3& v) const { return rotation * v; }
};

/// The unique orientation-preserving isometry taking p to p2 and the geodesic
/// direction p->q to the direction p2->q2. When |pq| = |p2q2| it takes q to q2.
Isometry isometry_matching(ModelKappa kappa, const Vec3& p, const Vec3& q, const Vec3& p2, const Vec3& q2);

}  // namespace conecat
