#include "conecat/arrangement.hpp"

#include "conecat/error.hpp"

#include <algorithm>
#include <map>

namespace conecat {

ProjVec normalize(const ProjVec& v) {
  for (const CycloRational& c : v) {
    if (c.is_zero()) continue;
    const CycloRational inv = c.inverse();
    return {v[0] * inv, v[1] * inv, v[2] * inv};
  }
  throw Error(ErrorCode::InvalidInput, "zero projective vector");
}

ProjVec cross(const ProjVec& u, const ProjVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

CycloRational dot(const ProjVec& u, const ProjVec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Line make_line(const ProjVec& coeffs, mpq_class beta, std::string label) {
  if (beta <= 0) throw Error(ErrorCode::InvalidInput, "beta must be positive");
  return {normalize(coeffs), std::move(beta), std::move(label)};
}

std::vector<MultiplePoint> incidence(const Arrangement& a) {
  const int n = static_cast<int>(a.lines.size());
  std::vector<MultiplePoint> points;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const ProjVec p = cross(a.lines[static_cast<std::size_t>(i)].coeffs, a.lines[static_cast<std::size_t>(j)].coeffs);
      if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) {
        throw Error(ErrorCode::DuplicateLines, "lines " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
      const ProjVec q = normalize(p);
      if (std::any_of(points.begin(), points.end(), [&](const MultiplePoint& m) { return m.point == q; })) continue;
      MultiplePoint m{q, {}};
      for (int k = 0; k < n; ++k) {
        if (dot(a.lines[static_cast<std::size_t>(k)].coeffs, q).is_zero()) m.lines.push_back(k);
      }
      points.push_back(std::move(m));
    }
  }
  return points;
}

std::vector<std::pair<int, int>> multiplicity_profile(const std::vector<MultiplePoint>& points) {
  std::map<int, int> counts;
  for (const auto& p : points) ++counts[p.multiplicity()];
  return {counts.begin(), counts.end()};
}

namespace {

using C = CycloRational;

Arrangement a1_6() {
  // the six lines through (1:0:0), (0:1:0), (0:0:1), (1:1:1)
  const mpq_class half(1, 2);
  return {"A1_6",
          {make_line({0, 0, 1}, half, "z"), make_line({0, 1, 0}, half, "y"), make_line({1, 0, 0}, half, "x"),
           make_line({0, 1, -1}, half, "y-z"), make_line({1, 0, -1}, half, "x-z"), make_line({1, -1, 0}, half, "x-y")}};
}

Arrangement a1_7() {
  const mpq_class half(1, 2), two_thirds(2, 3);
  return {"A1_7",
          {make_line({1, 0, -1}, half, "x-z"), make_line({1, 0, 1}, half, "x+z"), make_line({0, 1, -1}, half, "y-z"),
           make_line({0, 1, 1}, half, "y+z"), make_line({1, -1, 0}, two_thirds, "x-y"),
           make_line({1, 1, 0}, two_thirds, "x+y"), make_line({0, 0, 1}, two_thirds, "z")}};
}

Arrangement a3_0_3() {
  // factors of x³−y³, y³−z³, z³−x³
  const mpq_class two_thirds(2, 3);
  const C w = C::omega();
  const C powers[3] = {C(1), w, w * w};
  const char* names[3] = {"", "w", "w^2"};
  Arrangement a{"A3_0_3", {}};
  for (int pair = 0; pair < 3; ++pair) {
    for (int k = 0; k < 3; ++k) {
      ProjVec l{0, 0, 0};
      l[static_cast<std::size_t>(pair)] = 1;
      l[static_cast<std::size_t>((pair + 1) % 3)] = -powers[k];
      const std::string u(1, "xyz"[pair]), v(1, "xyz"[(pair + 1) % 3]);
      a.lines.push_back(make_line(l, two_thirds, u + "-" + (k == 0 ? "" : std::string(names[k]) + "*") + v));
    }
  }
  return a;
}

}  // namespace

const std::vector<std::string>& arrangement_names() {
  static const std::vector<std::string> names = {"A1_6", "A1_7", "A3_0_3"};
  return names;
}

bool is_named_arrangement(std::string_view name) {
  const auto& names = arrangement_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Arrangement named_arrangement(std::string_view name) {
  if (name == "A1_6") return a1_6();
  if (name == "A1_7") return a1_7();
  if (name == "A3_0_3") {
    Arrangement a = a3_0_3();
    // the defining property of this arrangement; fail loudly if it is lost
    const auto pts = incidence(a);
    const bool ok = pts.size() == 12 && std::all_of(pts.begin(), pts.end(), [](const MultiplePoint& p) { return p.multiplicity() == 3; });
    if (!ok) throw Error(ErrorCode::InvalidInput, "A3_0_3 lines do not produce twelve triple points");
    return a;
  }
  throw Error(ErrorCode::NotNamedArrangement, "unknown arrangement '" + std::string(name) + "'");
}

Arrangement transform_lines(const Arrangement& a, const std::array<ProjVec, 3>& m) {
  const CycloRational det = dot(m[0], cross(m[1], m[2]));
  if (det.is_zero()) throw Error(ErrorCode::InvalidInput, "singular transformation");
  Arrangement out{a.name, {}};
  for (const Line& l : a.lines) {
    ProjVec c;
    for (std::size_t j = 0; j < 3; ++j) c[j] = l.coeffs[0] * m[0][j] + l.coeffs[1] * m[1][j] + l.coeffs[2] * m[2][j];
    out.lines.push_back(make_line(c, l.beta, l.label));
  }
  return out;
}

}  // namespace conecat
