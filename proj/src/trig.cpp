#include "conecat/trig.hpp"

#include "conecat/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace conecat {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(((i % 3) + 3) % 3); }

// Half-angle law: stable for thin triangles where the plain law of cosines
// loses all digits.
double angle_facing(ModelKappa kappa, double adj1, double adj2, double opposite) {
  // s - x written as differences of nearby inputs, which subtract exactly
  const double s1 = 0.5 * ((adj2 - adj1) + opposite);
  const double s2 = 0.5 * ((adj1 - adj2) + opposite);
  const double s3 = 0.5 * ((adj1 + adj2) - opposite);
  const double s = 0.5 * (adj1 + adj2 + opposite);
  double num, den;
  if (kappa.flat()) {
    num = s1 * s2;
    den = s * s3;
  } else {
    const double k = kappa.scale();
    num = std::sin(k * s1) * std::sin(k * s2);
    den = std::sin(k * s) * std::sin(k * s3);
  }
  return 2.0 * std::atan2(std::sqrt(std::max(num, 0.0)), std::sqrt(std::max(den, 0.0)));
}

double unit_angle(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

}  // namespace

TriangleShape::TriangleShape(ModelKappa kappa, std::array<double, 3> sides) : kappa_(kappa), sides_(sides) {
  for (double s : sides_) {
    if (!std::isfinite(s) || s <= 0.0) {
      throw Error(ErrorCode::DegenerateTriangle, "side lengths must be positive");
    }
  }
  for (int i = 0; i < 3; ++i) {
    const double slack = side(i + 1) + side(i + 2) - side(i);
    if (slack <= kTol) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "triangle inequality fails for side " + std::to_string(i) + " (slack " + std::to_string(slack) + ")");
    }
  }
  if (!kappa_.flat() && perimeter() >= kTwoPi / kappa_.scale() - kTol) {
    throw Error(ErrorCode::PerimeterTooLarge, "perimeter " + std::to_string(perimeter()) +
                                                  " does not fit in the curvature " +
                                                  std::to_string(kappa_.value()) + " model");
  }
}

TriangleShape TriangleShape::from_angles(ModelKappa kappa, std::array<double, 3> angles) {
  if (kappa.flat()) {
    throw Error(ErrorCode::InvalidInput, "angles determine a triangle only for positive curvature");
  }
  double sum = 0.0;
  for (double a : angles) {
    if (!(a > 0.0 && a < kPi)) throw Error(ErrorCode::DegenerateTriangle, "vertex angles must lie in (0, pi)");
    sum += a;
  }
  if (sum <= kPi + kTol) throw Error(ErrorCode::DegenerateTriangle, "spherical angle sum must exceed pi");

  std::array<double, 3> sides{};
  for (int i = 0; i < 3; ++i) {
    const double ai = angles[idx(i)], aj = angles[idx(i + 1)], facing = angles[idx(i + 2)];
    const double c = (std::cos(facing) + std::cos(ai) * std::cos(aj)) / (std::sin(ai) * std::sin(aj));
    sides[idx(i)] = std::acos(std::clamp(c, -1.0, 1.0)) / kappa.scale();
  }
  return TriangleShape(kappa, sides);
}

std::array<double, 3> solve_angles(const TriangleShape& t) {
  std::array<double, 3> angles{};
  for (int i = 0; i < 3; ++i) {
    angles[idx(i)] = angle_facing(t.kappa(), t.side(i), t.side(i + 2), t.side(i + 1));
  }
  return angles;
}

double opposite_side(ModelKappa kappa, double adjacent1, double adjacent2, double angle) {
  if (kappa.flat()) {
    return std::sqrt(std::max(0.0, adjacent1 * adjacent1 + adjacent2 * adjacent2 -
                                       2.0 * adjacent1 * adjacent2 * std::cos(angle)));
  }
  const double k = kappa.scale();
  const double a = k * adjacent1, b = k * adjacent2;
  auto hav = [](double x) { return 0.5 * (1.0 - std::cos(x)); };
  const double h = hav(a - b) + std::sin(a) * std::sin(b) * hav(angle);
  return 2.0 * std::asin(std::sqrt(std::clamp(h, 0.0, 1.0))) / k;
}

double triangle_area(const TriangleShape& t) {
  if (t.kappa().flat()) {
    std::array<double, 3> s = t.sides();
    std::sort(s.begin(), s.end(), std::greater<>());
    const double a = s[0], b = s[1], c = s[2];
    return 0.25 * std::sqrt((a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c)));
  }
  const auto angles = solve_angles(t);
  return (angles[0] + angles[1] + angles[2] - kPi) / t.kappa().value();
}

TriangleShape comparison_triangle(const TriangleShape& t, ModelKappa kappa2) { return TriangleShape(kappa2, t.sides()); }

std::array<Vec3, 3> embed_triangle(const TriangleShape& t) {
  const ModelKappa kappa = t.kappa();
  const double a0 = solve_angles(t)[0];
  if (kappa.flat()) {
    return {Vec3::Zero(), Vec3(t.side(0), 0.0, 0.0), t.side(2) * Vec3(std::cos(a0), std::sin(a0), 0.0)};
  }
  const double r = kappa.radius();
  const double s0 = t.side(0) * kappa.scale();
  const double s2 = t.side(2) * kappa.scale();
  const Vec3 dir(0.0, std::cos(a0), std::sin(a0));
  return {Vec3(r, 0.0, 0.0), r * Vec3(std::cos(s0), std::sin(s0), 0.0),
          r * (std::cos(s2) * Vec3::UnitX() + std::sin(s2) * dir)};
}

double circle_length(ModelKappa kappa, double k_geo) {
  const double q = kappa.value() + k_geo * k_geo;
  if (!(q > 0.0)) throw Error(ErrorCode::InvalidInput, "circle needs kappa + k^2 > 0");
  return kTwoPi / std::sqrt(q);
}

LargeTest is_large(const TriangleShape& t, double tol) {
  if (t.kappa().value() != 4.0) throw Error(ErrorCode::InvalidInput, "largeness is defined for curvature 4 triangles");
  const auto v = embed_triangle(t);
  const double k = t.kappa().scale();
  LargeTest out;
  for (int i = 0; i < 3; ++i) {
    const Vec3 p = v[idx(i)].normalized();
    const Vec3 b = v[idx(i + 1)].normalized();
    const Vec3 c = v[idx(i + 2)].normalized();
    const double side = unit_angle(b, c);
    const Vec3 n = b.cross(c).normalized();
    const Vec3 h = p - p.dot(n) * n;
    double alt;
    if (h.norm() < 1e-12) {
      alt = kPi / 2.0;  // p is a pole of the side's great circle
    } else {
      const Vec3 f = h.normalized();
      auto on_side = [&](const Vec3& x) { return unit_angle(b, x) + unit_angle(x, c) - side <= 1e-9; };
      if (on_side(f)) {
        alt = unit_angle(p, f);
      } else if (on_side(-f)) {
        alt = unit_angle(p, -f);
      } else {
        alt = std::min(unit_angle(p, b), unit_angle(p, c));
      }
    }
    out.altitudes[idx(i)] = alt / k;
  }
  out.min_altitude = *std::min_element(out.altitudes.begin(), out.altitudes.end());
  out.large = out.min_altitude >= kPi / 4.0 - tol;
  return out;
}

SpaceTriangle model_space_triangle(const TriangleShape& t) {
  const auto v = embed_triangle(t);
  const ModelKappa kappa = t.kappa();
  SpaceTriangle tri;
  tri.sides = t.sides();
  tri.distance = [v, kappa](const SidePoint& x, const SidePoint& y) {
    const Vec3 px = model_lerp(kappa, v[idx(x.side)], v[idx(x.side + 1)], x.t);
    const Vec3 py = model_lerp(kappa, v[idx(y.side)], v[idx(y.side + 1)], y.t);
    return model_distance(kappa, px, py);
  };
  return tri;
}

CatSample cat_sample_test(const SpaceTriangle& tri, ModelKappa kappa, int samples, Exec exec, double tol) {
  CatSample out;
  if (samples < 1) throw Error(ErrorCode::InvalidInput, "cat_sample_test needs at least one sample per side");

  std::array<Vec3, 3> v;
  try {
    v = embed_triangle(TriangleShape(kappa, tri.sides));
  } catch (const Error& e) {
    // no comparison triangle: nothing to check
    if (e.code() == ErrorCode::DegenerateTriangle || e.code() == ErrorCode::PerimeterTooLarge) return out;
    throw;
  }

  std::vector<SidePoint> pts;
  std::vector<Vec3> model_pts;
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < samples; ++j) {
      const double t = static_cast<double>(j) / samples;
      pts.push_back({s, t});
      model_pts.push_back(model_lerp(kappa, v[idx(s)], v[idx(s + 1)], t));
    }
  }

  const long n = static_cast<long>(pts.size());
  struct Row {
    double worst = -1e300;
    long arg = -1;
  };
  std::vector<Row> rows(static_cast<std::size_t>(n));

  auto row_kernel = [&](long i) {
    Row r;
    for (long j = i + 1; j < n; ++j) {
      const double d_space = tri.distance(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]);
      const double d_model =
          model_distance(kappa, model_pts[static_cast<std::size_t>(i)], model_pts[static_cast<std::size_t>(j)]);
      const double m = d_space - d_model;
      if (m > r.worst) {
        r.worst = m;
        r.arg = j;
      }
    }
    rows[static_cast<std::size_t>(i)] = r;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) row_kernel(i);
  } else {
    for (long i = 0; i < n; ++i) row_kernel(i);
  }

  out.worst_margin = -1e300;
  for (long i = 0; i < n; ++i) {
    const Row& r = rows[static_cast<std::size_t>(i)];
    if (r.arg >= 0 && r.worst > out.worst_margin) {
      out.worst_margin = r.worst;
      out.worst_x = pts[static_cast<std::size_t>(i)];
      out.worst_y = pts[static_cast<std::size_t>(r.arg)];
    }
  }
  out.pairs = n * (n - 1) / 2;
  if (out.pairs == 0) out.worst_margin = 0.0;
  out.pass = out.worst_margin <= tol;
  return out;
}

}  // namespace conecat
