#include "conecat/deformation.hpp"

#include "conecat/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace conecat {

ConeSurface comparison_member(const ConeSurface& base, double kappa2) {
  if (base.kappa().value() != 4.0) throw Error(ErrorCode::InvalidInput, "comparison family is based at kappa = 4");
  if (!(kappa2 >= 0.0 && kappa2 <= 4.0)) throw Error(ErrorCode::InvalidInput, "kappa2 must lie in [0, 4]");
  SurfaceDescription d = base.description();
  d.kappa = kappa2;
  for (const auto& sides : d.triangles) comparison_triangle(TriangleShape(base.kappa(), sides), ModelKappa(kappa2));
  return ConeSurface::build(d);
}

std::string_view to_string(Trend trend) {
  switch (trend) {
    case Trend::NonDecreasing: return "non-decreasing";
    case Trend::NonIncreasing: return "non-increasing";
    case Trend::Constant: return "constant";
    case Trend::Mixed: return "mixed";
  }
  return "mixed";
}

MonotonicityReport angle_monotonicity_report(const ConeSurface& base, int vertex, std::vector<double> kappas,
                                             double tol) {
  if (vertex < 0 || vertex >= base.vertex_count()) throw Error(ErrorCode::InvalidInput, "no such vertex");
  std::sort(kappas.begin(), kappas.end());
  MonotonicityReport r;
  r.vertex = vertex;
  bool up = false, down = false;
  for (double k : kappas) {
    const double angle = comparison_member(base, k).vertex(vertex).cone_angle;
    if (!r.rows.empty()) {
      const double prev = r.rows.back().second;
      if (angle > prev + tol) up = true;
      if (angle < prev - tol) down = true;
    }
    r.rows.emplace_back(k, angle);
  }
  r.trend = up && down ? Trend::Mixed : up ? Trend::NonDecreasing : down ? Trend::NonIncreasing : Trend::Constant;
  return r;
}

Vec3 incenter(const TriangleShape& t) {
  const ModelKappa k = t.kappa();
  const auto v = embed_triangle(t);
  auto bisector = [&](int i) {
    const Vec3& p = v[static_cast<std::size_t>(i)];
    return (tangent_toward(k, p, v[static_cast<std::size_t>((i + 1) % 3)]) +
            tangent_toward(k, p, v[static_cast<std::size_t>((i + 2) % 3)]))
        .normalized();
  };
  const Vec3 d0 = bisector(0), d1 = bisector(1);
  if (k.flat()) {
    // v0 + a d0 = v1 + b d1 in the plane
    Eigen::Matrix2d A;
    A << d0.x(), -d1.x(), d0.y(), -d1.y();
    const Eigen::Vector2d rhs((v[1] - v[0]).x(), (v[1] - v[0]).y());
    const Eigen::Vector2d ab = A.colPivHouseholderQr().solve(rhs);
    return v[0] + ab(0) * d0;
  }
  const Vec3 n0 = v[0].cross(d0), n1 = v[1].cross(d1);
  Vec3 x = n0.cross(n1).normalized() * k.radius();
  if (x.dot(v[0] + v[1] + v[2]) < 0.0) x = -x;
  return x;
}

namespace {

class RadialChart {
 public:
  explicit RadialChart(const TriangleShape& t) : kappa_(t.kappa()), v_(embed_triangle(t)), sides_(t.sides()) {
    centre_ = incenter(t);
  }

  double perimeter() const { return sides_[0] + sides_[1] + sides_[2]; }

  Vec3 boundary(double sigma) const {
    sigma = std::fmod(sigma, perimeter());
    if (sigma < 0.0) sigma += perimeter();
    for (int e = 0; e < 3; ++e) {
      const double len = sides_[static_cast<std::size_t>(e)];
      if (sigma <= len || e == 2) {
        return model_lerp(kappa_, v_[static_cast<std::size_t>(e)], v_[static_cast<std::size_t>((e + 1) % 3)],
                          std::clamp(sigma / len, 0.0, 1.0));
      }
      sigma -= len;
    }
    return v_[0];
  }

  Vec3 point(double sigma, double s) const { return model_lerp(kappa_, centre_, boundary(sigma), s); }

  /// Columns ∂/∂σ and ∂/∂s in an orthonormal tangent frame at the point.
  Eigen::Matrix2d jacobian(double sigma, double s, double h) const {
    const Vec3 x = point(sigma, s);
    const Vec3 ds = (point(sigma + h, s) - point(sigma - h, s)) / (2 * h);
    const Vec3 dt = (point(sigma, s + h) - point(sigma, s - h)) / (2 * h);
    const Vec3 n = model_normal(kappa_, x);
    Vec3 e1 = ds - ds.dot(n) * n;
    e1.normalize();
    const Vec3 e2 = n.cross(e1);
    Eigen::Matrix2d m;
    m << e1.dot(ds), e1.dot(dt), e2.dot(ds), e2.dot(dt);
    return m;
  }

 private:
  ModelKappa kappa_;
  std::array<Vec3, 3> v_;
  std::array<double, 3> sides_;
  Vec3 centre_;
};

double row_distortion(const RadialChart& from, const RadialChart& to, int i, int n) {
  const double sigma = (i + 0.5) * from.perimeter() / n;
  double worst = 1.0;
  for (int j = 0; j < n; ++j) {
    const double s = (j + 0.5) / n;
    const Eigen::Matrix2d a = from.jacobian(sigma, s, 1e-6);
    const Eigen::Matrix2d b = to.jacobian(sigma, s, 1e-6);
    const Eigen::Matrix2d dF = b * a.inverse();
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(dF);
    const double smax = svd.singularValues()(0), smin = svd.singularValues()(1);
    worst = std::max({worst, smax, 1.0 / smin});
  }
  return worst;
}

}  // namespace

LipschitzEstimate incenter_bilipschitz(const TriangleShape& t, double kappa2, int sampling, Exec exec) {
  if (t.kappa().value() != 4.0) throw Error(ErrorCode::InvalidInput, "bi-Lipschitz estimate starts from kappa = 4");
  if (sampling < 2 || sampling > 1024) throw Error(ErrorCode::InvalidInput, "sampling must be in [2, 1024]");
  const TriangleShape target = comparison_triangle(t, ModelKappa(kappa2));
  LipschitzEstimate est;
  est.kappa2 = kappa2;
  est.sampling = sampling;
  if (kappa2 == 4.0) return est;
  const RadialChart from(t), to(target);
  std::vector<double> rows(static_cast<std::size_t>(sampling), 1.0);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < sampling; ++i) rows[static_cast<std::size_t>(i)] = row_distortion(from, to, i, sampling);
  } else {
    for (int i = 0; i < sampling; ++i) rows[static_cast<std::size_t>(i)] = row_distortion(from, to, i, sampling);
  }
  est.constant = *std::max_element(rows.begin(), rows.end());
  return est;
}

LipschitzEstimate surface_bilipschitz(const ConeSurface& base, double kappa2, int sampling, Exec exec) {
  LipschitzEstimate best;
  best.kappa2 = kappa2;
  best.sampling = sampling;
  best.constant = 1.0;
  for (int t = 0; t < base.triangle_count(); ++t) {
    LipschitzEstimate e = incenter_bilipschitz(base.triangle(t), kappa2, sampling, exec);
    if (best.triangle < 0 || e.constant > best.constant) {
      e.triangle = t;
      best = e;
    }
  }
  return best;
}

double isoperimetric_constant(double c_max) {
  if (!(c_max >= 1.0 - 1e-12)) throw Error(ErrorCode::InvalidInput, "a bi-Lipschitz constant is at least 1");
  return std::pow(c_max, 4) / (4.0 * kPi);
}

}  // namespace conecat
