#include "conecat/geodesic.hpp"

#include "conecat/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conecat {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(((i % 3) + 3) % 3); }

double vec_angle(const Vec3& a, const Vec3& b) { return std::atan2(a.cross(b).norm(), a.dot(b)); }

// Ray at `angle` inside corner c of tri, measured from edge c towards edge c-1.
Vec3 corner_ray(const ConeSurface& s, int tri, int c, double angle) {
  const auto& v = s.chart(tri);
  const Vec3 e = tangent_toward(s.kappa(), v[ix(c)], v[ix(c + 1)]);
  const Vec3 n = model_normal(s.kappa(), v[ix(c)]);
  return std::cos(angle) * e + std::sin(angle) * n.cross(e);
}

double corner_local_angle(const ConeSurface& s, int tri, int c, const Vec3& ray) {
  const auto& v = s.chart(tri);
  const Vec3 e = tangent_toward(s.kappa(), v[ix(c)], v[ix(c + 1)]);
  const Vec3 n = model_normal(s.kappa(), v[ix(c)]);
  double a = std::atan2(n.cross(e).dot(ray), e.dot(ray));
  return std::clamp(a, 0.0, s.angles(tri)[ix(c)]);
}

// Distance along the geodesic (p, d) to where it leaves the half-space of
// edge e, or +inf when it does not leave through that edge.
double exit_distance(const ConeSurface& s, int tri, int e, const Vec3& p, const Vec3& d) {
  const ModelKappa kappa = s.kappa();
  const auto& v = s.chart(tri);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (kappa.flat()) {
    const Vec3 u = (v[ix(e + 1)] - v[ix(e)]).normalized();
    const Vec3 n = Vec3::UnitZ().cross(u);
    const double height = std::max(0.0, n.dot(p - v[ix(e)]));
    const double rate = n.dot(d);
    if (rate >= -1e-15) return inf;
    return height / -rate;
  }
  const Vec3 n = v[ix(e)].cross(v[ix(e + 1)]).normalized();
  const double c = std::max(0.0, n.dot(p) * kappa.scale());
  const double sn = n.dot(d);
  if (c < 1e-13 && sn >= 0.0) return inf;
  double a = std::atan2(sn, c) + kPi / 2.0;
  if (a <= 0.0) a += kTwoPi;
  return a / kappa.scale();
}

}  // namespace

std::string_view to_string(PathStatus status) {
  switch (status) {
    case PathStatus::Open: return "open";
    case PathStatus::Closed: return "closed";
    case PathStatus::HitVertex: return "hit-vertex";
  }
  return "open";
}

Vec3 point_in_triangle(const ConeSurface& s, int tri, const std::array<double, 3>& weights) {
  const auto& v = s.chart(tri);
  Vec3 p = weights[0] * v[0] + weights[1] * v[1] + weights[2] * v[2];
  if (s.kappa().flat()) return p / (weights[0] + weights[1] + weights[2]);
  return p.normalized() * s.kappa().radius();
}

Vec3 direction_in_triangle(const ConeSurface& s, int tri, const Vec3& pos, double angle) {
  const auto& v = s.chart(tri);
  const Vec3 n = model_normal(s.kappa(), pos);
  Vec3 e = v[1] - v[0];
  e = (e - e.dot(n) * n).normalized();
  return std::cos(angle) * e + std::sin(angle) * n.cross(e);
}

TangentVector edge_start(const ConeSurface& s, HalfEdge e, double u, double angle) {
  const auto& v = s.chart(e.tri);
  const Vec3 a = v[ix(e.edge)], b = v[ix(e.edge + 1)];
  TangentVector tv;
  tv.tri = e.tri;
  tv.edge = e.edge;
  tv.pos = model_lerp(s.kappa(), a, b, u);
  Vec3 along = u < 0.5 ? tangent_toward(s.kappa(), tv.pos, b) : Vec3(-tangent_toward(s.kappa(), tv.pos, a));
  const Vec3 n = model_normal(s.kappa(), tv.pos);
  tv.dir = std::cos(angle) * along + std::sin(angle) * n.cross(along);
  return tv;
}

TangentVector corner_start(const ConeSurface& s, int tri, int corner, double angle) {
  TangentVector tv;
  tv.tri = tri;
  tv.pos = s.chart(tri)[ix(corner)];
  tv.dir = corner_ray(s, tri, corner, angle);
  return tv;
}

double link_angle(const ConeSurface& s, int tri, int corner, double angle) {
  const auto& vx = s.vertex(s.vertex_of(tri, corner));
  double psi = 0.0;
  for (const Corner& c : vx.corners) {
    if (c.tri == tri && c.corner == corner) return psi + angle;
    psi += s.angles(c.tri)[ix(c.corner)];
  }
  throw Error(ErrorCode::InvalidInput, "corner not found at its vertex");
}

double arrival_link_angle(const ConeSurface& s, const GeodesicPath& path) {
  if (path.status != PathStatus::HitVertex || path.segments.empty()) {
    throw Error(ErrorCode::InvalidInput, "path does not end at a vertex");
  }
  const GeodesicSegment& last = path.segments.back();
  const int c = path.end.edge;  // corner index stored for hit-vertex paths
  const double local = corner_local_angle(s, last.tri, c, -last.exit_dir);
  return link_angle(s, last.tri, c, local);
}

GeodesicPath trace_geodesic(const ConeSurface& s, const TangentVector& start, double max_length,
                            const TraceOptions& options) {
  const ModelKappa kappa = s.kappa();
  GeodesicPath path;
  int tri = start.tri;
  Vec3 p = start.pos;
  Vec3 d = start.dir;
  double travelled = 0.0;
  const Vec3 p0 = start.pos;
  const Vec3 d0 = start.dir;

  while (static_cast<int>(path.segments.size()) < options.max_segments) {
    int exit_edge = -1;
    double step = std::numeric_limits<double>::infinity();
    for (int e = 0; e < 3; ++e) {
      const double se = exit_distance(s, tri, e, p, d);
      if (se < step) {
        step = se;
        exit_edge = e;
      }
    }
    if (exit_edge < 0) throw Error(ErrorCode::InvalidInput, "geodesic failed to leave a triangle");

    // closure: does the start vector reappear on this segment?
    if (options.detect_closure && tri == start.tri && travelled > 1e-9) {
      double a0;
      if (kappa.flat()) {
        a0 = (p0 - p).dot(d);
      } else {
        const Vec3 ph = p.normalized();
        const Vec3 qh = p0.normalized();
        a0 = std::atan2(d.dot(qh), ph.dot(qh)) / kappa.scale();
      }
      if (a0 >= -options.closure_tol && a0 <= step + options.closure_tol && travelled + a0 > 1e-6) {
        const Vec3 g = exp_map(kappa, p, d, a0);
        const Vec3 gd = transport_direction(kappa, p, d, a0);
        const double pos_err = model_distance(kappa, g, p0);
        const double dir_err = vec_angle(gd, d0);
        if (pos_err < options.closure_tol && dir_err < options.closure_tol) {
          GeodesicSegment seg{tri, p, g, d, gd, std::max(a0, 0.0), -1, 0.0};
          path.segments.push_back(seg);
          path.length = travelled + a0;
          path.status = PathStatus::Closed;
          path.end = TangentVector{tri, g, gd, -1};
          path.closure_position_error = pos_err;
          path.closure_direction_error = dir_err;
          return path;
        }
      }
    }

    const double remaining = max_length - travelled;
    if (step >= remaining) {
      const Vec3 q = exp_map(kappa, p, d, remaining);
      const Vec3 qd = transport_direction(kappa, p, d, remaining);
      path.segments.push_back({tri, p, q, d, qd, remaining, -1, 0.0});
      path.length = max_length;
      path.status = PathStatus::Open;
      path.end = TangentVector{tri, q, qd, -1};
      return path;
    }

    const Vec3 q = exp_map(kappa, p, d, step);
    const Vec3 qd = transport_direction(kappa, p, d, step);
    const auto& v = s.chart(tri);
    const double len = s.triangle(tri).side(exit_edge);
    const double from_start = model_distance(kappa, v[ix(exit_edge)], q);
    const double from_end = model_distance(kappa, v[ix(exit_edge + 1)], q);
    GeodesicSegment seg{tri, p, q, d, qd, step, exit_edge, std::clamp(from_start / len, 0.0, 1.0)};
    travelled += step;

    int corner = -1;
    if (from_start < options.vertex_tol) corner = exit_edge;
    if (from_end < options.vertex_tol && (corner < 0 || from_end < from_start)) corner = static_cast<int>(ix(exit_edge + 1));

    if (corner >= 0) {
      const int vid = s.vertex_of(tri, corner);
      seg.exit_edge = -1;
      seg.exit = v[ix(corner)];
      path.segments.push_back(seg);
      if (!(options.pass_smooth_vertices && s.smooth_vertex(vid))) {
        path.length = travelled;
        path.status = PathStatus::HitVertex;
        path.hit_vertex = vid;
        path.end = TangentVector{tri, v[ix(corner)], qd, corner};
        return path;
      }
      // straight continuation: the outgoing ray sits at angle π from the
      // arrival ray in the vertex link
      const auto& vx = s.vertex(vid);
      const double local_in = corner_local_angle(s, tri, corner, -qd);
      double psi = link_angle(s, tri, corner, local_in) + kPi;
      psi = std::fmod(psi, vx.cone_angle);
      double acc = 0.0;
      Corner out = vx.corners.back();
      double local_out = 0.0;
      for (const Corner& c : vx.corners) {
        const double a = s.angles(c.tri)[ix(c.corner)];
        if (psi < acc + a || &c == &vx.corners.back()) {
          out = c;
          local_out = std::clamp(psi - acc, 0.0, a);
          break;
        }
        acc += a;
      }
      tri = out.tri;
      p = s.chart(tri)[ix(out.corner)];
      d = corner_ray(s, tri, out.corner, local_out);
      continue;
    }

    path.segments.push_back(seg);
    const HalfEdge h{tri, exit_edge};
    const Isometry& iso = s.transfer(h);
    p = iso.point(q);
    d = iso.vector(qd);
    if (!kappa.flat()) {
      p = p.normalized() * kappa.radius();
      d = (d - d.dot(p.normalized()) * p.normalized()).normalized();
    }
    tri = s.partner(h).tri;
  }
  path.length = travelled;
  path.status = PathStatus::Open;
  path.end = TangentVector{tri, p, d, -1};
  return path;
}

}  // namespace conecat
