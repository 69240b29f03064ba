#pragma once

#include "conecat/cyclo.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace conecat {

using ProjVec = std::array<CycloRational, 3>;

/// Scales v so that its first nonzero coordinate is 1. Throws on the zero vector.
ProjVec normalize(const ProjVec& v);
ProjVec cross(const ProjVec& u, const ProjVec& v);
CycloRational dot(const ProjVec& u, const ProjVec& v);

struct Line {
  ProjVec coeffs;  // l·(x, y, z) = 0, normalized
  mpq_class beta;  // PK conical angle along the line is 2π·β
  std::string label;
};

struct Arrangement {
  std::string name;  // empty unless built by named_arrangement
  std::vector<Line> lines;
};

/// Builds a line with normalized coefficients.
Line make_line(const ProjVec& coeffs, mpq_class beta, std::string label = {});

struct MultiplePoint {
  ProjVec point;           // normalized projective coordinates
  std::vector<int> lines;  // indices of the lines through it, ascending
  int multiplicity() const { return static_cast<int>(lines.size()); }
};

/// All intersection points with their member lines, from exact pairwise
/// intersections. Throws DuplicateLines when two lines coincide.
std::vector<MultiplePoint> incidence(const Arrangement& a);

/// Multiplicity → number of points with that multiplicity.
std::vector<std::pair<int, int>> multiplicity_profile(const std::vector<MultiplePoint>& points);

/// "A1_6", "A1_7" or "A3_0_3"; throws NotNamedArrangement otherwise.
Arrangement named_arrangement(std::string_view name);
bool is_named_arrangement(std::string_view name);
const std::vector<std::string>& arrangement_names();

/// The lines pulled back by an invertible 3×3 matrix over ℚ(ω): l ↦ l·M.
/// The incidence pattern is unchanged. Throws InvalidInput when M is singular.
Arrangement transform_lines(const Arrangement& a, const std::array<ProjVec, 3>& rows);

}  // namespace conecat
