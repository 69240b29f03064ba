#include "conecat/model.hpp"

#include "conecat/error.hpp"
#include "conecat/exec.hpp"

#include <omp.h>

#include <cmath>
#include <limits>

namespace conecat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::PerimeterTooLarge: return "PerimeterTooLarge";
    case ErrorCode::EdgeLengthMismatch: return "EdgeLengthMismatch";
    case ErrorCode::UnmatchedEdge: return "UnmatchedEdge";
    case ErrorCode::NonManifoldGluing: return "NonManifoldGluing";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::InconsistentRegion: return "InconsistentRegion";
    case ErrorCode::DuplicateLines: return "DuplicateLines";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotNamedArrangement: return "NotNamedArrangement";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

int max_threads() { return omp_get_max_threads(); }

ModelKappa::ModelKappa(double kappa) : kappa_(kappa), scale_(0.0) {
  if (!std::isfinite(kappa) || kappa < 0.0) {
    throw Error(ErrorCode::InvalidInput, "model curvature must be finite and non-negative");
  }
  scale_ = std::sqrt(kappa);
}

double ModelKappa::radius() const noexcept {
  return flat() ? std::numeric_limits<double>::infinity() : 1.0 / scale_;
}

bool on_model(ModelKappa kappa, const Vec3& p, double tol) {
  if (kappa.flat()) return std::abs(p.z()) <= tol;
  return std::abs(p.norm() - kappa.radius()) <= tol;
}

double model_distance(ModelKappa kappa, const Vec3& p, const Vec3& q) {
  if (kappa.flat()) return (p - q).norm();
  // atan2 form stays accurate for nearly coincident and nearly antipodal points
  const double angle = std::atan2(p.cross(q).norm(), p.dot(q));
  return angle / kappa.scale();
}

Vec3 model_normal(ModelKappa kappa, const Vec3& p) {
  if (kappa.flat()) return Vec3::UnitZ();
  return p.normalized();
}

Vec3 tangent_toward(ModelKappa kappa, const Vec3& p, const Vec3& q) {
  if (kappa.flat()) return (q - p).normalized();
  const Vec3 n = p.normalized();
  return (q - q.dot(n) * n).normalized();
}

Vec3 exp_map(ModelKappa kappa, const Vec3& p, const Vec3& dir, double s) {
  if (kappa.flat()) return p + s * dir;
  const double a = s * kappa.scale();
  return std::cos(a) * p + std::sin(a) * kappa.radius() * dir;
}

Vec3 transport_direction(ModelKappa kappa, const Vec3& p, const Vec3& dir, double s) {
  if (kappa.flat()) return dir;
  const double a = s * kappa.scale();
  return -std::sin(a) * p * kappa.scale() + std::cos(a) * dir;
}

Vec3 model_lerp(ModelKappa kappa, const Vec3& p, const Vec3& q, double t) {
  if (kappa.flat()) return p + t * (q - p);
  const double d = model_distance(kappa, p, q);
  if (d == 0.0) return p;
  return exp_map(kappa, p, tangent_toward(kappa, p, q), t * d);
}

Isometry isometry_matching(ModelKappa kappa, const Vec3& p, const Vec3& q, const Vec3& p2, const Vec3& q2) {
  auto frame = [&](const Vec3& a, const Vec3& b) {
    const Vec3 n = model_normal(kappa, a);
    const Vec3 u = tangent_toward(kappa, a, b);
    Mat3 f;
    f.col(0) = u;
    f.col(1) = n.cross(u);
    f.col(2) = n;
    return f;
  };
  Isometry iso;
  iso.rotation = frame(p2, q2) * frame(p, q).transpose();
  if (kappa.flat()) iso.shift = p2 - iso.rotation * p;
  return iso;
}

}  // namespace conecat
