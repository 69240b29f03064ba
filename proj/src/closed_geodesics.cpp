#include "conecat/closed_geodesics.hpp"

#include "conecat/error.hpp"
#include "conecat/grompi4.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <tuple>

namespace conecat {

namespace {

constexpr double kMinLength = 1e-6;

std::size_t ix(int i) { return static_cast<std::size_t>(((i % 3) + 3) % 3); }

long long length_key(double length) { return std::llround(length * 1e6); }

class EdgeIds {
 public:
  explicit EdgeIds(const ConeSurface& s) : ids_(static_cast<std::size_t>(s.triangle_count()), {-1, -1, -1}) {
    for (int t = 0; t < s.triangle_count(); ++t) {
      for (int e = 0; e < 3; ++e) {
        auto& slot = ids_[static_cast<std::size_t>(t)][static_cast<std::size_t>(e)];
        if (slot >= 0) continue;
        const HalfEdge p = s.partner({t, e});
        slot = count_;
        ids_[static_cast<std::size_t>(p.tri)][static_cast<std::size_t>(p.edge)] = count_;
        ++count_;
      }
    }
  }
  int id(HalfEdge h) const { return ids_[static_cast<std::size_t>(h.tri)][static_cast<std::size_t>(h.edge)]; }
  int count() const { return count_; }
  /// One representative half-edge per undirected edge.
  std::vector<HalfEdge> representatives() const {
    std::vector<HalfEdge> out(static_cast<std::size_t>(count_));
    for (int t = static_cast<int>(ids_.size()) - 1; t >= 0; --t) {
      for (int e = 2; e >= 0; --e) out[static_cast<std::size_t>(id({t, e}))] = {t, e};
    }
    return out;
  }

 private:
  std::vector<std::array<int, 3>> ids_;
  int count_ = 0;
};

std::vector<int> canonical_cycle(std::vector<int> seq) {
  if (seq.empty()) return seq;
  std::vector<int> best;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < seq.size(); ++r) {
      std::vector<int> cand(seq.begin() + static_cast<long>(r), seq.end());
      cand.insert(cand.end(), seq.begin(), seq.begin() + static_cast<long>(r));
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(seq.begin(), seq.end());
  }
  return best;
}

std::vector<int> itinerary_of(const ConeSurface& s, const EdgeIds& ids, const GeodesicPath& path) {
  std::vector<int> seq;
  for (std::size_t k = 0; k + 1 < path.segments.size(); ++k) {
    const GeodesicSegment& seg = path.segments[k];
    if (seg.exit_edge >= 0) {
      seq.push_back(ids.id({seg.tri, seg.exit_edge}));
      continue;
    }
    // passed through a smooth vertex
    const auto& v = s.chart(seg.tri);
    int corner = 0;
    for (int c = 1; c < 3; ++c) {
      if ((v[ix(c)] - seg.exit).norm() < (v[ix(corner)] - seg.exit).norm()) corner = c;
    }
    seq.push_back(ids.count() + s.vertex_of(seg.tri, corner));
  }
  return canonical_cycle(std::move(seq));
}

/// Crossing of the start edge by a path started on it, seen from the start
/// triangle: position u along the edge, angle to the edge, length so far.
struct Return {
  double u = 0.0;
  double theta = 0.0;
  double length = 0.0;
};

double edge_angle(const ConeSurface& s, HalfEdge h, const Vec3& p, const Vec3& d, double u) {
  const auto& v = s.chart(h.tri);
  const Vec3 a = v[ix(h.edge)], b = v[ix(h.edge + 1)];
  const Vec3 along = u < 0.5 ? tangent_toward(s.kappa(), p, b) : Vec3(-tangent_toward(s.kappa(), p, a));
  const Vec3 n = model_normal(s.kappa(), p);
  return std::atan2(n.cross(along).dot(d), along.dot(d));
}

std::vector<Return> returns_to(const ConeSurface& s, HalfEdge h0, const GeodesicPath& path, std::size_t limit) {
  std::vector<Return> out;
  const HalfEdge back = s.partner(h0);
  double length = 0.0;
  for (std::size_t k = 0; k + 1 < path.segments.size() && out.size() < limit; ++k) {
    const GeodesicSegment& seg = path.segments[k];
    length += seg.length;
    if (seg.exit_edge < 0 || !(HalfEdge{seg.tri, seg.exit_edge} == back)) continue;
    const GeodesicSegment& next = path.segments[k + 1];
    const double u = 1.0 - seg.exit_param;
    out.push_back({u, edge_angle(s, h0, next.entry, next.entry_dir, u), length});
  }
  return out;
}

TraceOptions open_trace() {
  TraceOptions o;
  o.detect_closure = false;
  return o;
}

struct ReturnMap {
  const ConeSurface& s;
  HalfEdge h0;
  double max_length;
  std::size_t index;

  std::optional<Return> operator()(double u, double theta) const {
    if (u <= 0.0 || u >= 1.0 || theta <= 0.0 || theta >= kPi) return std::nullopt;
    const GeodesicPath p = trace_geodesic(s, edge_start(s, h0, u, theta), max_length, open_trace());
    const auto rs = returns_to(s, h0, p, index + 1);
    if (rs.size() <= index) return std::nullopt;
    return rs[index];
  }
};

/// Damped Newton on the return map (u, θ) -> (u', θ') − (u, θ).
std::optional<std::pair<double, double>> refine_return(const ReturnMap& map, double u, double theta) {
  const double len = map.s.triangle(map.h0.tri).side(map.h0.edge);
  auto residual = [&](double uu, double tt) -> std::optional<Eigen::Vector2d> {
    const auto r = map(uu, tt);
    if (!r) return std::nullopt;
    return Eigen::Vector2d((r->u - uu) * len, r->theta - tt);
  };
  auto r = residual(u, theta);
  if (!r) return std::nullopt;
  double lambda = 1e-6;
  for (int iter = 0; iter < 40; ++iter) {
    if (r->norm() < 1e-12) break;
    constexpr double h = 1e-7;
    const auto ru = residual(u + h, theta);
    const auto rt = residual(u, theta + h);
    if (!ru || !rt) return std::nullopt;
    Eigen::Matrix2d J;
    J.col(0) = (*ru - *r) / h;
    J.col(1) = (*rt - *r) / h;
    bool improved = false;
    for (int tries = 0; tries < 8 && !improved; ++tries) {
      const Eigen::Matrix2d A = J.transpose() * J + lambda * Eigen::Matrix2d::Identity();
      const Eigen::Vector2d step = A.ldlt().solve(-J.transpose() * *r);
      const auto rn = residual(u + step(0), theta + step(1));
      if (rn && rn->norm() < r->norm()) {
        u += step(0);
        theta += step(1);
        r = rn;
        lambda = std::max(lambda * 0.1, 1e-12);
        improved = true;
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) break;
  }
  if (r->norm() > 1e-9) return std::nullopt;
  return std::make_pair(u, theta);
}

struct SearchContext {
  const ConeSurface& s;
  EdgeIds ids;
  double search_length;
  TraceOptions closing;
};

std::optional<ClosedGeodesic> smooth_from(const SearchContext& ctx, const GeodesicPath& path) {
  if (path.status != PathStatus::Closed || path.length < kMinLength) return std::nullopt;
  ClosedGeodesic g;
  g.kind = GeodesicKind::Smooth;
  g.length = path.length;
  g.itinerary = itinerary_of(ctx.s, ctx.ids, path);
  g.position_error = path.closure_position_error;
  g.direction_error = path.closure_direction_error;
  return g;
}

// One grid cell of the edge search: shoot, and if the path does not close by
// itself, refine its first few near-returns to the start edge.
std::vector<ClosedGeodesic> edge_kernel(const SearchContext& ctx, HalfEdge h0, double u, double theta) {
  std::vector<ClosedGeodesic> out;
  GeodesicPath path;
  for (int attempt = 0; attempt < 4; ++attempt) {
    path = trace_geodesic(ctx.s, edge_start(ctx.s, h0, u, theta), ctx.search_length, ctx.closing);
    if (path.status != PathStatus::HitVertex) break;
    theta += 1e-6;
  }
  if (path.status == PathStatus::HitVertex) return out;
  if (auto g = smooth_from(ctx, path)) {
    g->start = edge_start(ctx.s, h0, u, theta);
    out.push_back(std::move(*g));
    return out;
  }
  const GeodesicPath open = trace_geodesic(ctx.s, edge_start(ctx.s, h0, u, theta), ctx.search_length, open_trace());
  const auto rs = returns_to(ctx.s, h0, open, 4);
  const double len = ctx.s.triangle(h0.tri).side(h0.edge);
  for (std::size_t j = 0; j < rs.size(); ++j) {
    const double miss = std::abs(rs[j].u - u) * len + std::abs(rs[j].theta - theta);
    if (miss > 0.25 || rs[j].length < kMinLength) continue;
    const ReturnMap map{ctx.s, h0, ctx.search_length, j};
    const auto fixed = refine_return(map, u, theta);
    if (!fixed) continue;
    const auto r = map(fixed->first, fixed->second);
    if (!r) continue;
    const TangentVector st = edge_start(ctx.s, h0, fixed->first, fixed->second);
    const GeodesicPath closed = trace_geodesic(ctx.s, st, r->length + 1e-4, ctx.closing);
    if (auto g = smooth_from(ctx, closed); g && std::abs(g->length - r->length) < 1e-5) {
      g->start = st;
      out.push_back(std::move(*g));
    }
  }
  return out;
}

TangentVector link_ray(const ConeSurface& s, int v, double psi) {
  const auto& vx = s.vertex(v);
  psi = std::fmod(psi, vx.cone_angle);
  if (psi < 0.0) psi += vx.cone_angle;
  double acc = 0.0;
  for (const Corner& c : vx.corners) {
    const double a = s.angles(c.tri)[ix(c.corner)];
    if (psi < acc + a || &c == &vx.corners.back()) return corner_start(s, c.tri, c.corner, std::clamp(psi - acc, 0.0, a));
    acc += a;
  }
  throw Error(ErrorCode::InvalidInput, "vertex without corners");
}

ClosedGeodesic loop_from(const ConeSurface& s, int v, double psi, const GeodesicPath& path) {
  const double theta = s.vertex(v).cone_angle;
  double delta = std::fmod(arrival_link_angle(s, path) - std::fmod(psi, theta) + 2.0 * theta, theta);
  ClosedGeodesic g;
  g.kind = GeodesicKind::VertexLoop;
  g.length = path.length;
  g.vertex = v;
  g.start = link_ray(s, v, psi);
  g.sector_a = std::min(delta, theta - delta);
  g.sector_b = std::max(delta, theta - delta);
  return g;
}

enum class Side { Left, Right, Hit, Other };

// Which side of vertex v's corner the path passes at segment k.
Side corner_side(const ConeSurface& s, int v, const GeodesicPath& p, std::size_t k, int corner) {
  if (k >= p.segments.size()) return Side::Other;
  const GeodesicSegment& seg = p.segments[k];
  if (p.status == PathStatus::HitVertex && k + 1 == p.segments.size() && p.hit_vertex == v) return Side::Hit;
  if (seg.exit_edge == corner) return Side::Left;
  if (seg.exit_edge == static_cast<int>(ix(corner + 2))) return Side::Right;
  (void)s;
  return Side::Other;
}

bool same_prefix(const GeodesicPath& a, const GeodesicPath& b, std::size_t k) {
  if (a.segments.size() <= k || b.segments.size() <= k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (a.segments[i].tri != b.segments[i].tri || a.segments[i].exit_edge != b.segments[i].exit_edge) return false;
  }
  return a.segments[k].tri == b.segments[k].tri;
}

// Rays at adjacent link angles that pass v's corner on opposite sides bracket
// a loop; bisect on the angle until the path lands on v.
std::vector<ClosedGeodesic> vertex_kernel(const SearchContext& ctx, int v, double psi_a, double psi_b) {
  const ConeSurface& s = ctx.s;
  TraceOptions opts = open_trace();
  auto shoot = [&](double psi) { return trace_geodesic(s, link_ray(s, v, psi), ctx.search_length, opts); };
  std::vector<ClosedGeodesic> out;
  const GeodesicPath pa = shoot(psi_a);
  if (pa.status == PathStatus::HitVertex && pa.hit_vertex == v && pa.length > kMinLength) {
    out.push_back(loop_from(s, v, psi_a, pa));
    return out;
  }
  const GeodesicPath pb = shoot(psi_b);
  std::size_t k = 1;
  while (same_prefix(pa, pb, k) && pa.segments[k].exit_edge == pb.segments[k].exit_edge) ++k;
  if (!same_prefix(pa, pb, k)) return out;
  const int tri = pa.segments[k].tri;
  for (int corner = 0; corner < 3; ++corner) {
    if (s.vertex_of(tri, corner) != v) continue;
    const Side sa = corner_side(s, v, pa, k, corner);
    const Side sb = corner_side(s, v, pb, k, corner);
    if (sa == Side::Other || sb == Side::Other || sa == sb) continue;
    double lo = psi_a, hi = psi_b;
    for (int iter = 0; iter < 80; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const GeodesicPath pm = shoot(mid);
      if (!same_prefix(pa, pm, k)) break;
      const Side sm = corner_side(s, v, pm, k, corner);
      if (sm == Side::Hit) {
        if (pm.length > kMinLength) out.push_back(loop_from(s, v, mid, pm));
        break;
      }
      if (sm == Side::Other) break;
      (sm == sa ? lo : hi) = mid;
    }
    break;
  }
  return out;
}

struct Task {
  int vertex = -1;  // -1: edge task
  HalfEdge edge;
  double a = 0.0, b = 0.0;
};

std::vector<ClosedGeodesic> run_task(const SearchContext& ctx, const Task& t) {
  if (t.vertex < 0) return edge_kernel(ctx, t.edge, t.a, t.b);
  return vertex_kernel(ctx, t.vertex, t.a, t.b);
}

}  // namespace

std::string_view to_string(GeodesicKind kind) {
  return kind == GeodesicKind::Smooth ? "closed_geodesic" : "vertex_loop";
}

double default_length_bound(ModelKappa kappa) {
  if (kappa.flat()) return std::numeric_limits<double>::infinity();
  return kTwoPi / kappa.scale();
}

ClosedGeodesicSearch find_closed_geodesics(const ConeSurface& s, double length_bound, const SearchGrid& grid,
                                           Exec exec) {
  if (grid.edge_samples < 1 || grid.angle_samples < 1 || grid.vertex_directions < 2) {
    throw Error(ErrorCode::InvalidInput, "search grid densities must be positive");
  }
  ClosedGeodesicSearch result;
  result.length_bound = length_bound;
  double max_edge = 0.0;
  for (int t = 0; t < s.triangle_count(); ++t) {
    for (double side : s.triangle(t).sides()) max_edge = std::max(max_edge, side);
  }
  if (!s.kappa().flat()) {
    result.search_length = 1.1 * std::max(std::isfinite(length_bound) ? length_bound : 0.0, kTwoPi / s.kappa().scale());
  } else if (std::isfinite(length_bound)) {
    result.search_length = 1.1 * length_bound;
  } else {
    result.search_length = 4.0 * max_edge * std::sqrt(static_cast<double>(s.triangle_count()));
  }

  SearchContext ctx{s, EdgeIds(s), result.search_length, TraceOptions{}};
  std::vector<Task> tasks;
  for (const HalfEdge& h : ctx.ids.representatives()) {
    for (int i = 0; i < grid.edge_samples; ++i) {
      for (int j = 0; j < grid.angle_samples; ++j) {
        tasks.push_back({-1, h, (i + 0.5) / grid.edge_samples, (j + 0.5) * kPi / grid.angle_samples});
      }
    }
  }
  for (int v : s.cone_points()) {
    const double theta = s.vertex(v).cone_angle;
    const int m = grid.vertex_directions;
    for (int j = 0; j < m; ++j) {
      tasks.push_back({v, {}, (j + 0.5) * theta / m, (j + 1.5) * theta / m});
    }
  }

  std::vector<std::vector<ClosedGeodesic>> found(tasks.size());
  const long n = static_cast<long>(tasks.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) found[static_cast<std::size_t>(i)] = run_task(ctx, tasks[static_cast<std::size_t>(i)]);
  } else {
    for (long i = 0; i < n; ++i) found[static_cast<std::size_t>(i)] = run_task(ctx, tasks[static_cast<std::size_t>(i)]);
  }
  result.traces = n;

  std::map<std::tuple<int, int, long long, long long, std::vector<int>>, ClosedGeodesic> unique;
  for (auto& list : found) {
    for (auto& g : list) {
      const auto key = std::make_tuple(static_cast<int>(g.kind), g.vertex, length_key(g.length),
                                       0LL, g.itinerary);
      unique.emplace(key, std::move(g));
    }
  }
  for (auto& [key, g] : unique) result.found.push_back(std::move(g));
  std::stable_sort(result.found.begin(), result.found.end(),
                   [](const ClosedGeodesic& a, const ClosedGeodesic& b) { return a.length < b.length; });
  for (const auto& g : result.found) {
    result.systole_estimate = std::min(result.systole_estimate, g.length);
    if (g.length < length_bound - kTol) result.below_bound.push_back(g);
  }
  return result;
}

Certificate global_cat_verdict(const ConeSurface& s) {
  return global_cat_verdict(s, default_length_bound(s.kappa()));
}

Certificate global_cat_verdict(const ConeSurface& s, double length_bound, const SearchGrid& grid, Exec exec) {
  const std::string criterion = "systole_criterion";
  const Certificate local = local_cat_check(s);
  if (local.verdict == Verdict::NotCat) {
    Certificate c = Certificate::not_cat(criterion, local.witnesses.front(), s.fingerprint());
    c.margins = local.margins;
    c.parts.push_back(local);
    return c;
  }
  const ClosedGeodesicSearch search = find_closed_geodesics(s, length_bound, grid, exec);
  const double gap = search.systole_estimate - length_bound;
  if (!search.below_bound.empty()) {
    const ClosedGeodesic& g = search.below_bound.front();
    Witness w{g.kind == GeodesicKind::Smooth ? "short_closed_geodesic" : "short_geodesic_loop",
              "closed curve shorter than the systole bound", {{"length", g.length}, {"bound", length_bound}}};
    if (g.kind == GeodesicKind::VertexLoop) {
      w.values.emplace_back("vertex", g.vertex);
      w.values.emplace_back("sector_min", g.sector_a);
      w.values.emplace_back("sector_max", g.sector_b);
    }
    Certificate c = Certificate::not_cat(criterion, std::move(w), s.fingerprint());
    if (std::isfinite(gap)) c.margin("systole_estimate_minus_bound", gap);
    c.parts.push_back(local);
    return c;
  }
  if (s.kappa().value() == 4.0) {
    Certificate g4 = grompi4_certify(s);
    if (g4.confirmed_cat()) {
      Certificate c = Certificate::confirmed(criterion, s.fingerprint());
      c.margin("systole_estimate_minus_bound", std::isfinite(gap) ? gap : 0.0);
      c.note("positive verdict from the large-triangle certificate");
      c.parts = {local, g4};
      return c;
    }
  }
  if (!s.kappa().flat() && s.cone_points().empty() && s.euler_characteristic() == 2) {
    Certificate c = Certificate::confirmed(criterion, s.fingerprint());
    c.margin("systole_estimate_minus_bound", std::isfinite(gap) ? gap : 0.0);
    c.note("smooth sphere of constant curvature: the round sphere, whose great circles have length 2pi/sqrt(kappa)");
    c.parts.push_back(local);
    return c;
  }
  Certificate c = Certificate::undetermined(criterion, s.fingerprint());
  if (std::isfinite(gap)) c.margin("systole_estimate_minus_bound", gap);
  c.note("no closed geodesic below the bound was found; the search is evidence, not proof");
  c.parts.push_back(local);
  return c;
}

}  // namespace conecat
