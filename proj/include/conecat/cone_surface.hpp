#pragma once

#include "conecat/certificate.hpp"
#include "conecat/trig.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conecat {

/// Edge `edge` of triangle `tri`; it runs from corner `edge` to corner edge+1.
struct HalfEdge {
  int tri = 0;
  int edge = 0;
  friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

struct Corner {
  int tri = 0;
  int corner = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

/// Raw input: triangles by side lengths plus an edge pairing. Glued edges are
/// identified with reversed orientation, so every input surface is oriented.
struct SurfaceDescription {
  double kappa = 0.0;
  std::vector<std::array<double, 3>> triangles;
  std::vector<std::pair<HalfEdge, HalfEdge>> gluing;
};

/// Gluing derived from oriented faces given by vertex labels: edge (u,v) of one
/// face is glued to edge (v,u) of another. Labels must determine the gluing
/// uniquely (no repeated directed edge).
std::vector<std::pair<HalfEdge, HalfEdge>> glue_by_labels(const std::vector<std::array<int, 3>>& faces);

/// Closed surface glued from model triangles, immutable once built.
class ConeSurface {
 public:
  struct Vertex {
    double cone_angle = 0.0;
    std::vector<Corner> corners;  // counter-clockwise order around the vertex
  };

  static ConeSurface build(const SurfaceDescription& description);

  ModelKappa kappa() const noexcept { return kappa_; }
  int triangle_count() const noexcept { return static_cast<int>(triangles_.size()); }
  const TriangleShape& triangle(int t) const { return triangles_.at(static_cast<std::size_t>(t)); }
  const std::array<double, 3>& angles(int t) const { return angles_.at(static_cast<std::size_t>(t)); }
  /// Canonical development of triangle t (see embed_triangle).
  const std::array<Vec3, 3>& chart(int t) const { return charts_.at(static_cast<std::size_t>(t)); }

  HalfEdge partner(HalfEdge h) const;
  /// Isometry carrying chart(h.tri) onto chart(partner(h).tri) across h.
  const Isometry& transfer(HalfEdge h) const;

  int vertex_of(int tri, int corner) const;
  int vertex_count() const noexcept { return static_cast<int>(vertices_.size()); }
  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  /// Number of edge ends at v (a loop edge counts twice).
  int valence(int v) const { return static_cast<int>(vertex(v).corners.size()); }
  bool smooth_vertex(int v, double tol = kTol) const;
  /// Vertices whose cone angle differs from 2π.
  std::vector<int> cone_points(double tol = kTol) const;

  int edge_count() const noexcept { return 3 * triangle_count() / 2; }
  int euler_characteristic() const noexcept { return vertex_count() - edge_count() + triangle_count(); }
  double area() const noexcept { return area_; }
  /// κ·Area + Σ(2π − θ_v) − 2πχ.
  double gauss_bonnet_residual() const;

  /// Stable hash of the description, used to tie certificates to surfaces.
  const std::string& fingerprint() const noexcept { return fingerprint_; }
  const SurfaceDescription& description() const noexcept { return description_; }

 private:
  ConeSurface() : kappa_(0.0) {}

  SurfaceDescription description_;
  ModelKappa kappa_;
  std::vector<TriangleShape> triangles_;
  std::vector<std::array<double, 3>> angles_;
  std::vector<std::array<Vec3, 3>> charts_;
  std::vector<std::array<HalfEdge, 3>> partner_;
  std::vector<std::array<Isometry, 3>> transfer_;
  std::vector<std::array<int, 3>> corner_vertex_;
  std::vector<Vertex> vertices_;
  double area_ = 0.0;
  std::string fingerprint_;
};

ConeSurface build_surface(const SurfaceDescription& description);

/// Two copies of t glued along their boundary: a sphere with cone angles
/// twice the angles of t.
ConeSurface double_triangle(const TriangleShape& t);

/// Octahedral triangulation of the round sphere of curvature κ>0.
ConeSurface round_sphere(double kappa);

/// Flat torus from a w×h rectangle cut along a diagonal.
ConeSurface flat_torus(double width, double height);

/// Link condition in dimension two: locally CAT(κ) iff every cone angle ≥ 2π.
Certificate local_cat_check(const ConeSurface& s, double tol = kTol);

}  // namespace conecat
