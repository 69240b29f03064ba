#include "conecat/svg.hpp"

#include <cmath>
#include <cstdio>
#include <queue>
#include <sstream>

namespace conecat {

namespace {

constexpr double kSize = 480.0;

struct Projector {
  Vec3 origin, e1, e2;
  double scale;
  std::pair<double, double> operator()(const Vec3& p) const {
    const Vec3 d = p - origin;
    return {kSize / 2 + scale * d.dot(e1), kSize / 2 - scale * d.dot(e2)};
  }
};

Projector make_projector(ModelKappa kappa, const Vec3& centre, double extent) {
  const Vec3 n = model_normal(kappa, centre);
  Vec3 e1 = n.unitOrthogonal();
  return {centre, e1, n.cross(e1), 0.45 * kSize / std::max(extent, 1e-9)};
}

std::string header() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
     << kSize << ' ' << kSize << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// A geodesic arc drawn as a polyline of its projection.
void arc(std::ostringstream& os, ModelKappa kappa, const Projector& proj, const Vec3& a, const Vec3& b,
         const char* style) {
  os << "<polyline fill=\"none\" " << style << " points=\"";
  for (int i = 0; i <= 16; ++i) {
    const auto [x, y] = proj(model_lerp(kappa, a, b, i / 16.0));
    os << fmt(x) << ',' << fmt(y) << ' ';
  }
  os << "\"/>\n";
}

Isometry compose(const Isometry& outer, const Isometry& inner) {
  return {outer.rotation * inner.rotation, outer.rotation * inner.shift + outer.shift};
}

Isometry inverse(const Isometry& g) {
  const Mat3 rt = g.rotation.transpose();
  return {rt, -(rt * g.shift)};
}

}  // namespace

std::string svg_geodesic(const ConeSurface& s, const GeodesicPath& path) {
  std::ostringstream os;
  os << header();
  if (path.segments.empty()) return os.str() + "</svg>\n";
  const ModelKappa kappa = s.kappa();
  // chart of segment k mapped into the chart of segment 0
  std::vector<Isometry> place{Isometry{}};
  for (std::size_t k = 0; k + 1 < path.segments.size(); ++k) {
    const auto& seg = path.segments[k];
    if (seg.exit_edge < 0) {
      place.push_back(place.back());  // vertex pass: charts no longer line up; keep the last one
      continue;
    }
    place.push_back(compose(place.back(), inverse(s.transfer({seg.tri, seg.exit_edge}))));
  }
  const Vec3 start = path.segments.front().entry;
  double extent = 0.0;
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    for (const Vec3& v : s.chart(path.segments[k].tri)) extent = std::max(extent, (place[k].point(v) - start).norm());
  }
  const Projector proj = make_projector(kappa, start, extent);
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    const auto& v = s.chart(path.segments[k].tri);
    for (int e = 0; e < 3; ++e) {
      arc(os, kappa, proj, place[k].point(v[static_cast<std::size_t>(e)]), place[k].point(v[static_cast<std::size_t>((e + 1) % 3)]),
          "stroke=\"#999\" stroke-width=\"1\"");
    }
  }
  for (std::size_t k = 0; k < path.segments.size(); ++k) {
    const auto& seg = path.segments[k];
    arc(os, kappa, proj, place[k].point(seg.entry), place[k].point(seg.exit), "stroke=\"#c0392b\" stroke-width=\"2\"");
  }
  os << "<text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"12\">length " << fmt(path.length) << ", "
     << to_string(path.status) << "</text>\n</svg>\n";
  return os.str();
}

std::string svg_tiling(const ConeSurface& s) {
  const ModelKappa kappa = s.kappa();
  std::vector<Isometry> place(static_cast<std::size_t>(s.triangle_count()));
  std::vector<bool> seen(static_cast<std::size_t>(s.triangle_count()), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const int t = q.front();
    q.pop();
    for (int e = 0; e < 3; ++e) {
      const HalfEdge p = s.partner({t, e});
      if (seen[static_cast<std::size_t>(p.tri)]) continue;
      seen[static_cast<std::size_t>(p.tri)] = true;
      place[static_cast<std::size_t>(p.tri)] = compose(place[static_cast<std::size_t>(t)], inverse(s.transfer({t, e})));
      q.push(p.tri);
    }
  }
  const auto& c0 = s.chart(0);
  Vec3 centre = (c0[0] + c0[1] + c0[2]) / 3.0;
  double extent = 0.0;
  if (!kappa.flat()) {
    centre = centre.normalized() * kappa.radius();
    extent = kappa.radius();
  } else {
    for (int t = 0; t < s.triangle_count(); ++t) {
      for (const Vec3& v : s.chart(t)) extent = std::max(extent, (place[static_cast<std::size_t>(t)].point(v) - centre).norm());
    }
  }
  const Projector proj = make_projector(kappa, centre, extent);
  const Vec3 n = model_normal(kappa, centre);
  std::ostringstream os;
  os << header();
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& v = s.chart(t);
    for (int e = 0; e < 3; ++e) {
      const Vec3 a = place[static_cast<std::size_t>(t)].point(v[static_cast<std::size_t>(e)]);
      const Vec3 b = place[static_cast<std::size_t>(t)].point(v[static_cast<std::size_t>((e + 1) % 3)]);
      if (!kappa.flat() && (a.dot(n) < -1e-12 || b.dot(n) < -1e-12)) continue;
      arc(os, kappa, proj, a, b, "stroke=\"#2c3e50\" stroke-width=\"1\"");
    }
  }
  os << "<text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"12\">" << s.triangle_count()
     << " tiles</text>\n</svg>\n";
  return os.str();
}

std::string svg_arrangement(const Arrangement& a) {
  std::ostringstream os;
  os << header();
  const double scale = kSize / 6.0;
  auto px = [&](double x) { return kSize / 2 + scale * x; };
  auto py = [&](double y) { return kSize / 2 - scale * y; };
  int skipped = 0;
  for (const Line& l : a.lines) {
    bool real = true;
    for (const auto& c : l.coeffs) real = real && c.b() == 0;
    if (!real) {
      ++skipped;
      continue;
    }
    const double A = l.coeffs[0].a().get_d(), B = l.coeffs[1].a().get_d(), C = l.coeffs[2].a().get_d();
    if (A == 0.0 && B == 0.0) continue;  // the line at infinity
    double x0, y0, x1, y1;
    if (std::abs(B) > std::abs(A)) {
      x0 = -3, x1 = 3;
      y0 = -(A * x0 + C) / B;
      y1 = -(A * x1 + C) / B;
    } else {
      y0 = -3, y1 = 3;
      x0 = -(B * y0 + C) / A;
      x1 = -(B * y1 + C) / A;
    }
    os << "<line x1=\"" << fmt(px(x0)) << "\" y1=\"" << fmt(py(y0)) << "\" x2=\"" << fmt(px(x1)) << "\" y2=\""
       << fmt(py(y1)) << "\" stroke=\"#2c3e50\" stroke-width=\"1.5\"/>\n";
  }
  for (const auto& p : incidence(a)) {
    bool real = true;
    for (const auto& c : p.point) real = real && c.b() == 0;
    if (!real || p.point[2].is_zero()) continue;
    const double x = (p.point[0] / p.point[2]).a().get_d(), y = (p.point[1] / p.point[2]).a().get_d();
    os << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"" << (p.multiplicity() > 2 ? 5 : 3)
       << "\" fill=\"#c0392b\"/>\n";
  }
  os << "<text x=\"8\" y=\"18\" font-family=\"monospace\" font-size=\"12\">" << (a.name.empty() ? "arrangement" : a.name);
  if (skipped) os << " (" << skipped << " non-real lines omitted)";
  os << "</text>\n</svg>\n";
  return os.str();
}

}  // namespace conecat
