#include "conecat/grompi4.hpp"

#include "conecat/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace conecat {

Certificate grompi4_certify(const ConeSurface& s, double tol) {
  if (s.kappa().value() != 4.0) throw Error(ErrorCode::InvalidInput, "large-triangle certificate needs kappa = 4");
  std::vector<Witness> failures;

  // (a) largeness
  double min_alt = kPi;
  int worst_tri = 0;
  for (int t = 0; t < s.triangle_count(); ++t) {
    const LargeTest lt = is_large(s.triangle(t), tol);
    if (lt.min_altitude < min_alt) {
      min_alt = lt.min_altitude;
      worst_tri = t;
    }
  }
  if (min_alt < kPi / 4.0 - tol) {
    failures.push_back({"small_triangle", "triangle " + std::to_string(worst_tri) + " is not large",
                        {{"triangle", worst_tri}, {"min_altitude", min_alt}}});
  }

  // (b) valence
  int min_valence = 1 << 30;
  int worst_vertex = 0;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.valence(v) < min_valence) {
      min_valence = s.valence(v);
      worst_vertex = v;
    }
  }
  if (min_valence < 4) {
    failures.push_back({"low_valence", "vertex " + std::to_string(worst_vertex) + " has valence below 4",
                        {{"vertex", worst_vertex}, {"valence", min_valence}}});
  }

  // (c) simple 1-skeleton
  std::map<std::pair<int, int>, int> multiplicity;
  for (int t = 0; t < s.triangle_count(); ++t) {
    for (int e = 0; e < 3; ++e) {
      const HalfEdge p = s.partner({t, e});
      if (p < HalfEdge{t, e}) continue;
      int a = s.vertex_of(t, e), b = s.vertex_of(t, (e + 1) % 3);
      if (a > b) std::swap(a, b);
      ++multiplicity[{a, b}];
    }
  }
  std::set<std::pair<int, int>> adjacent;
  bool simple = true;
  for (const auto& [key, count] : multiplicity) {
    adjacent.insert(key);
    if (simple && (count > 1 || key.first == key.second)) {
      simple = false;
      failures.push_back({"multi_edge",
                          key.first == key.second ? "edge from a vertex to itself" : "vertices joined by several edges",
                          {{"u", key.first}, {"v", key.second}, {"edges", count}}});
    }
  }

  // (d) every 3-cycle bounds a face; exhaustive over vertex triples
  std::set<std::array<int, 3>> faces;
  for (int t = 0; t < s.triangle_count(); ++t) {
    std::array<int, 3> f{s.vertex_of(t, 0), s.vertex_of(t, 1), s.vertex_of(t, 2)};
    std::sort(f.begin(), f.end());
    faces.insert(f);
  }
  long cycles = 0;
  bool cycles_ok = true;
  const int nv = s.vertex_count();
  for (int a = 0; a < nv && cycles_ok; ++a) {
    for (int b = a + 1; b < nv && cycles_ok; ++b) {
      if (!adjacent.count({a, b})) continue;
      for (int c = b + 1; c < nv; ++c) {
        if (!adjacent.count({a, c}) || !adjacent.count({b, c})) continue;
        ++cycles;
        if (!faces.count({a, b, c})) {
          cycles_ok = false;
          failures.push_back({"empty_3_cycle", "3-cycle that does not bound a face",
                              {{"u", a}, {"v", b}, {"w", c}}});
          break;
        }
      }
    }
  }

  const std::string criterion = "large_triangle_triangulation";
  Certificate c = failures.empty() ? Certificate::confirmed(criterion, s.fingerprint())
                                   : Certificate::undetermined(criterion, s.fingerprint());
  c.margin("min_altitude_minus_pi_over_4", min_alt - kPi / 4.0);
  c.margin("min_valence_minus_4", min_valence - 4);
  c.margin("three_cycles_checked", static_cast<double>(cycles));
  c.witnesses = std::move(failures);
  if (!c.confirmed_cat()) c.note("a failed sufficient condition says nothing about the space itself");
  return c;
}

}  // namespace conecat
