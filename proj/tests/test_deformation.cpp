#include "conecat/deformation.hpp"
#include "conecat/error.hpp"
#include "conecat/triangle_group.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace conecat;

namespace {

TriangleShape octant() { return TriangleShape::from_angles(ModelKappa(4.0), {kPi / 2, kPi / 2, kPi / 2}); }

}  // namespace

TEST(Deformation, MemberKeepsCombinatorics) {
  const auto base = triangle_group_cover(octant(), {2, 2, 2});
  for (double k2 : {0.0, 1.0, 3.0, 4.0}) {
    const auto m = comparison_member(base, k2);
    EXPECT_EQ(m.kappa().value(), k2);
    EXPECT_EQ(m.vertex_count(), base.vertex_count());
    EXPECT_EQ(m.triangle_count(), base.triangle_count());
    EXPECT_NEAR(m.gauss_bonnet_residual(), 0.0, 1e-9);
  }
  EXPECT_EQ(comparison_member(base, 4.0).fingerprint(), base.fingerprint());
}

TEST(Deformation, MemberRejectsBadInput) {
  const auto base = double_triangle(octant());
  EXPECT_THROW(comparison_member(base, 4.5), Error);
  EXPECT_THROW(comparison_member(base, -0.5), Error);
  EXPECT_THROW(comparison_member(flat_torus(1, 1), 1.0), Error);
}

TEST(Deformation, OctantDoubleAngleTable) {
  const auto r = angle_monotonicity_report(double_triangle(octant()), 0, {4.0, 0.0, 2.0});
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[0].first, 0.0);  // sorted ascending
  // flat member: equilateral with side π/4, cone angle 2·π/3
  EXPECT_NEAR(r.rows[0].second, 2 * kPi / 3, 1e-12);
  EXPECT_NEAR(r.rows[2].second, kPi, 1e-12);
  EXPECT_EQ(r.trend, Trend::NonDecreasing);
  EXPECT_EQ(to_string(r.trend), "non-decreasing");
}

TEST(DeformationProperty, ConeAnglesGrowWithKappa) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.15, 0.7);
  int checked = 0;
  while (checked < 40) {
    std::array<double, 3> s{u(rng), u(rng), u(rng)};
    try {
      const auto base = double_triangle(TriangleShape(ModelKappa(4.0), s));
      for (int v = 0; v < base.vertex_count(); ++v) {
        const auto r = angle_monotonicity_report(base, v, {0.0, 0.5, 1.0, 2.0, 3.0, 4.0});
        EXPECT_EQ(r.trend, Trend::NonDecreasing);
      }
      ++checked;
    } catch (const Error&) {
    }
  }
}

TEST(Deformation, IncenterMatchesClosedForm) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (double kappa : {0.0, 1.0, 4.0}) {
    for (int i = 0; i < 50; ++i) {
      const std::array<double, 3> s{u(rng), u(rng), u(rng)};
      try {
        const TriangleShape t(ModelKappa(kappa), s);
        const Vec3 got = incenter(t);
        const Vec3 ref = kappa > 0 ? Vec3(oracle::incenter_closed_form(kappa, s) / std::sqrt(kappa))
                                   : Vec3(oracle::incenter_closed_form(kappa, s));
        EXPECT_LT((got - ref).norm(), 1e-10);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
      }
    }
  }
}

TEST(Deformation, BilipschitzIdentityAtFour) {
  const auto e = incenter_bilipschitz(octant(), 4.0, 32);
  EXPECT_NEAR(e.constant, 1.0, 1e-6);
}

// The map is an arclength isometry on the boundary, so at the right-angle
// corner (π/2 upstairs, π/3 in the flat equilateral comparison) it cannot do
// better than √2.
TEST(Deformation, BilipschitzCornerBound) {
  const auto e = incenter_bilipschitz(octant(), 0.0, 64);
  EXPECT_GE(e.constant, std::sqrt(2.0));
  EXPECT_LT(e.constant, 2.0);
}

TEST(Deformation, BilipschitzAgainstPairSampling) {
  for (double k2 : {0.0, 2.0}) {
    const double c = incenter_bilipschitz(octant(), k2, 64).constant;
    const double pairs = oracle::bilipschitz_by_pairs(octant().sides(), k2, 40);
    // pair ratios never exceed the differential bound, and approach it
    EXPECT_LE(pairs, c + 1e-9);
    EXPECT_GE(pairs - 1, 0.75 * (c - 1));
  }
}

TEST(DeformationProperty, BilipschitzDecreasesTowardFour) {
  double prev = 1e9;
  for (double k2 : {0.0, 1.0, 2.0, 3.0, 3.5, 3.9, 4.0}) {
    const double c = incenter_bilipschitz(octant(), k2, 32).constant;
    EXPECT_LE(c, prev + 1e-12);
    prev = c;
  }
  EXPECT_NEAR(prev, 1.0, 1e-6);
}

TEST(DeformationProperty, BilipschitzSerialEqualsParallel) {
  const auto t = TriangleShape::from_angles(ModelKappa(4.0), {1.7, 1.9, 2.1});
  const auto a = incenter_bilipschitz(t, 1.0, 48, Exec::Serial);
  const auto b = incenter_bilipschitz(t, 1.0, 48, Exec::Parallel);
  EXPECT_EQ(a.constant, b.constant);
  const auto base = triangle_group_cover(octant(), {2, 2, 2});
  EXPECT_EQ(surface_bilipschitz(base, 1.0, 24, Exec::Serial).constant,
            surface_bilipschitz(base, 1.0, 24, Exec::Parallel).constant);
}

TEST(Deformation, Isoperimetric) {
  EXPECT_NEAR(isoperimetric_constant(1.0), 1.0 / (4 * kPi), 1e-15);
  EXPECT_NEAR(isoperimetric_constant(2.0), 16.0 / (4 * kPi), 1e-14);
  EXPECT_THROW(isoperimetric_constant(0.9), Error);
}
