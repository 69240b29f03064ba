#include "conecat/pk_cone.hpp"

#include "conecat/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace conecat {

QuotientSphere::QuotientSphere(ConeSurface surface) : surface_(std::move(surface)) {
  if (surface_.kappa().value() != 4.0) throw Error(ErrorCode::NotApplicable, "quotient spheres have kappa = 4");
  if (surface_.euler_characteristic() != 2) throw Error(ErrorCode::NotApplicable, "quotient must be a sphere");
}

std::vector<std::pair<int, double>> QuotientSphere::cone_points() const {
  std::vector<std::pair<int, double>> out;
  for (int v : surface_.cone_points()) out.emplace_back(v, surface_.vertex(v).cone_angle);
  return out;
}

double fiber_length(const QuotientSphere& q) { return q.fiber_length(); }

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2.0 + 1e-15)) throw Error(ErrorCode::InvalidInput, "theta must lie in (0, pi/2]");
}

}  // namespace

double lift_length(double projected_length, double theta) {
  check_theta(theta);
  return projected_length / std::sin(theta);
}

double projection_curvature(double theta) {
  check_theta(theta);
  return 2.0 * std::cos(theta) / std::sin(theta);
}

HolonomyResult holonomy(const QuotientSphere& q, const DiskRegion& region) {
  const double total = q.surface().area();
  if (!(region.area >= -kTol && region.area <= total + kTol)) {
    throw Error(ErrorCode::InconsistentRegion, "region area outside [0, area of the sphere]");
  }
  std::vector<double> available;
  for (const auto& [v, angle] : q.cone_points()) available.push_back(angle);
  auto take = [&](double angle) {
    if (std::abs(angle - kTwoPi) <= kTol) return;  // smooth point
    auto it = std::find_if(available.begin(), available.end(), [&](double a) { return std::abs(a - angle) <= 1e-9; });
    if (it == available.end()) throw Error(ErrorCode::InconsistentRegion, "cone angle not present on the sphere");
    available.erase(it);
  };

  HolonomyResult r;
  r.curvature_integral = 4.0 * region.area;
  for (double angle : region.interior_angles) {
    take(angle);
    r.curvature_integral += kTwoPi - angle;
  }
  for (const auto& [in, out] : region.boundary) {
    if (in < kPi - kTol || out < kPi - kTol) {
      throw Error(ErrorCode::InconsistentRegion, "a geodesic leaves sectors of at least pi on both sides");
    }
    take(in + out);
    r.curvature_integral += kPi * (1.0 - in / kPi);
  }
  r.integral = 0.5 * (kTwoPi - r.curvature_integral);
  r.fiber_length = q.fiber_length();
  r.residue = std::fmod(r.integral + 2.0 * region.area, r.fiber_length);
  if (r.residue < 0.0) r.residue += r.fiber_length;
  r.residue_zero = std::min(r.residue, r.fiber_length - r.residue) < 1e-7 * r.fiber_length;
  return r;
}

Certificate embedded_projection_obstruction(const QuotientSphere& q, double tol) {
  double excess = 0.0;
  for (const auto& [v, angle] : q.cone_points()) {
    if (angle < kTwoPi - tol) throw Error(ErrorCode::NotApplicable, "a cone angle is below 2pi");
    excess += angle - kTwoPi;
  }
  // K ≤ 4 makes the integrand 2 − K/2 non-negative, and its total over the
  // sphere is 2A − 2π by Gauss–Bonnet.
  const double l = q.fiber_length();
  const double lowest = kPi;
  const double highest = l - kPi;
  Certificate c = Certificate::confirmed("embedded_projection_obstruction", q.surface().fingerprint());
  c.margin("fiber_length", l);
  c.margin("min_value_minus_0", lowest);
  c.margin("fiber_length_minus_max_value", l - highest);
  c.margin("cone_angle_excess", excess);
  c.note("every closed geodesic of the PK sphere projects to a curve with a self-intersection");
  return c;
}

Certificate cone_cat0_verdict(const QuotientSphere& q, const Certificate& cat4, double tol) {
  const ConeSurface& s = q.surface();
  if (cat4.subject != s.fingerprint()) throw Error(ErrorCode::InvalidInput, "CAT(4) certificate is about another surface");
  const std::string criterion = "quotient_cat4";
  const std::string dictionary = "quotient cone angle read as the conical angle along the matching singular curve";
  double min_angle = kTwoPi;
  int worst = -1;
  for (const auto& [v, angle] : q.cone_points()) {
    if (angle < min_angle) {
      min_angle = angle;
      worst = v;
    }
  }
  if (min_angle < kTwoPi - tol) {
    Witness w{"small_singular_angle", "a singular curve has conical angle below 2pi",
              {{"vertex", worst}, {"cone_angle", min_angle}}};
    Certificate c = Certificate::not_cat(criterion, std::move(w), s.fingerprint());
    c.margin("min_cone_angle_minus_2pi", min_angle - kTwoPi).note(dictionary);
    return c;
  }
  Certificate c = cat4.confirmed_cat() ? Certificate::confirmed(criterion, s.fingerprint())
                                       : Certificate::undetermined(criterion, s.fingerprint());
  c.margin("min_cone_angle_minus_2pi", min_angle - kTwoPi).note(dictionary);
  c.parts.push_back(cat4);
  return c;
}

bool noncat_test(double alpha_min, int n, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "cover order must be positive");
  return alpha_min * (n / 2) >= kPi - tol;
}

bool hemisphere_test(const std::vector<Vec3>& points, double tol) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "no points");
  if (points.size() > 60) throw Error(ErrorCode::InvalidInput, "at most 60 points");
  // rows a·(v, t) ≤ b
  std::vector<Eigen::Vector4d> rows;
  std::vector<double> rhs;
  for (const Vec3& p : points) {
    const Vec3 u = p.normalized();
    rows.emplace_back(-u.x(), -u.y(), -u.z(), 1.0);
    rhs.push_back(0.0);
  }
  for (int j = 0; j < 3; ++j) {
    for (double sign : {1.0, -1.0}) {
      Eigen::Vector4d a = Eigen::Vector4d::Zero();
      a(j) = sign;
      rows.push_back(a);
      rhs.push_back(1.0);
    }
  }
  const int m = static_cast<int>(rows.size());
  double best = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          Eigen::Matrix4d A;
          Eigen::Vector4d r;
          const int idx[4] = {a, b, c, d};
          for (int k = 0; k < 4; ++k) {
            A.row(k) = rows[static_cast<std::size_t>(idx[k])].transpose();
            r(k) = rhs[static_cast<std::size_t>(idx[k])];
          }
          const Eigen::FullPivLU<Eigen::Matrix4d> lu(A);
          if (!lu.isInvertible()) continue;
          const Eigen::Vector4d x = lu.solve(r);
          bool feasible = true;
          for (int k = 0; k < m && feasible; ++k) {
            feasible = rows[static_cast<std::size_t>(k)].dot(x) <= rhs[static_cast<std::size_t>(k)] + 1e-10;
          }
          if (feasible) best = std::max(best, x(3));
        }
      }
    }
  }
  return best <= tol;
}

}  // namespace conecat
