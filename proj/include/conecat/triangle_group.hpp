#pragma once

#include "conecat/cone_surface.hpp"

#include <array>
#include <vector>

namespace conecat {

/// Spherical triangle group with multiplicities (p, q, r) at vertices 0, 1, 2.
/// Generator k is the reflection in edge k; the rotation about vertex i is
/// r_i·r_{i+2} of order m_i.
struct ReflectionGroup {
  std::array<int, 3> multiplicities{};
  /// right_mul[g][k] = index of g·r_k; element 0 is the identity.
  std::vector<std::array<int, 3>> right_mul;
  /// Word-length parity: odd elements reverse orientation.
  std::vector<bool> odd;

  int order() const { return static_cast<int>(right_mul.size()); }
};

/// 4 / (1/p + 1/q + 1/r − 1); throws NotSpherical when the sum is ≤ 1 or any
/// multiplicity is < 2.
int spherical_tile_count(std::array<int, 3> multiplicities);

/// Todd–Coxeter enumeration of the group's elements (cosets of the trivial
/// subgroup).
ReflectionGroup enumerate_reflection_group(std::array<int, 3> multiplicities);

/// One copy of t per group element glued across edges by the reflections.
/// Vertex i of t becomes a vertex of valence 2·m_i and cone angle 2·m_i·A_i.
ConeSurface triangle_group_cover(const TriangleShape& t, std::array<int, 3> multiplicities);

}  // namespace conecat
