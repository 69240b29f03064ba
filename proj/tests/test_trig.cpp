#include "conecat/error.hpp"
#include "conecat/trig.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace conecat;

namespace {

// Random triangle that fits in M²_κ: pick angles-free sides by rejection.
TriangleShape random_triangle(std::mt19937& rng, double kappa) {
  std::uniform_real_distribution<double> u(0.05, kappa > 0 ? 2.0 / std::sqrt(kappa) : 3.0);
  for (;;) {
    std::array<double, 3> s{u(rng), u(rng), u(rng)};
    try {
      return TriangleShape(ModelKappa(kappa), s);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST(Trig, OctantAnglesAndSides) {
  const auto t = TriangleShape::from_angles(ModelKappa(4.0), {kPi / 2, kPi / 2, kPi / 2});
  for (double s : t.sides()) EXPECT_NEAR(s, kPi / 4, 1e-14);
  for (double a : solve_angles(t)) EXPECT_NEAR(a, kPi / 2, 1e-14);
  EXPECT_NEAR(triangle_area(t), kPi / 8, 1e-14);
}

TEST(Trig, AnglesAgreeWithLawOfCosines) {
  std::mt19937 rng(7);
  for (double kappa : {0.0, 1.0, 4.0}) {
    for (int i = 0; i < 200; ++i) {
      const auto t = random_triangle(rng, kappa);
      const auto got = solve_angles(t);
      const auto ref = oracle::angles_by_cosines(kappa, t.sides());
      for (int k = 0; k < 3; ++k) EXPECT_NEAR(got[k], ref[k], 1e-9);
    }
  }
}

TEST(Trig, FromAnglesRoundTrip) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.2, 3.0);
  int checked = 0;
  while (checked < 200) {
    const std::array<double, 3> a{u(rng), u(rng), u(rng)};
    if (a[0] + a[1] + a[2] <= kPi + 0.05) continue;
    // angle-sum excess must leave room for a real triangle
    if (a[0] + a[1] - a[2] >= kPi || a[1] + a[2] - a[0] >= kPi || a[2] + a[0] - a[1] >= kPi) continue;
    const auto t = TriangleShape::from_angles(ModelKappa(4.0), a);
    const auto back = solve_angles(t);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(back[k], a[k], 1e-10);
    const auto again = TriangleShape::from_angles(ModelKappa(4.0), back);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(again.side(k), t.side(k), 1e-10);
    ++checked;
  }
}

TEST(Trig, ThinTriangleKeepsDigits) {
  const TriangleShape t(ModelKappa(0.0), {1.0, 1.0, 1e-8});
  // angle facing the short side is 1e-8 to leading order
  EXPECT_NEAR(solve_angles(t)[1], 1e-8, 1e-20);
  const TriangleShape s(ModelKappa(4.0), {0.5, 0.5, 1e-8});
  const double exact = 2 * std::asin(std::sin(1e-8) / std::sin(1.0));  // isosceles, unit-sphere units
  EXPECT_NEAR(solve_angles(s)[1], exact, 1e-18);
}

TEST(Trig, AreaMatchesQuadrature) {
  std::mt19937 rng(3);
  for (double kappa : {0.0, 4.0}) {
    for (int i = 0; i < 20; ++i) {
      const auto t = random_triangle(rng, kappa);
      EXPECT_NEAR(triangle_area(t), oracle::area_by_quadrature(kappa, t.sides()), 1e-9);
    }
  }
}

TEST(Trig, OppositeSideInvertsAngles) {
  std::mt19937 rng(5);
  for (double kappa : {0.0, 4.0}) {
    for (int i = 0; i < 100; ++i) {
      const auto t = random_triangle(rng, kappa);
      const auto a = solve_angles(t);
      EXPECT_NEAR(opposite_side(t.kappa(), t.side(0), t.side(2), a[0]), t.side(1), 1e-9);
    }
  }
}

TEST(Trig, CircleLengthAgainstLiftBound) {
  for (double theta : {kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
    const double k = 2.0 * std::cos(theta) / std::sin(theta);
    EXPECT_NEAR(circle_length(ModelKappa(4.0), k), kPi * std::sin(theta), 1e-12);
    EXPECT_NEAR(circle_length(ModelKappa(4.0), k), oracle::circle_length_by_chords(k), 1e-9);
  }
  EXPECT_NEAR(circle_length(ModelKappa(0.0), 2.0), kPi, 1e-15);
  EXPECT_THROW(circle_length(ModelKappa(0.0), 0.0), Error);
}

TEST(Trig, LargeLinkTriangles) {
  const std::array<std::array<double, 3>, 3> cases{{{kPi / 2, kPi / 2, kPi / 2},
                                                    {2 * kPi / 3, 2 * kPi / 3, kPi / 2},
                                                    {2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3}}};
  for (const auto& angles : cases) {
    const auto t = TriangleShape::from_angles(ModelKappa(4.0), angles);
    const auto r = is_large(t);
    EXPECT_TRUE(r.large);
    EXPECT_GE(r.min_altitude, kPi / 4 - 1e-9);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(r.altitudes[i], oracle::altitude_by_search(4.0, t.sides(), i), 1e-8) << "vertex " << i;
    }
  }
  // right-angle relation sin(2h) = sin(2c)·sin(B) for the octant
  const auto oct = TriangleShape::from_angles(ModelKappa(4.0), {kPi / 2, kPi / 2, kPi / 2});
  EXPECT_NEAR(std::sin(2 * is_large(oct).min_altitude), std::sin(2 * oct.side(0)) * 1.0, 1e-12);
}

TEST(Trig, SmallTriangleIsNotLarge) {
  const TriangleShape t(ModelKappa(4.0), {0.3, 0.35, 0.4});
  const auto r = is_large(t);
  EXPECT_FALSE(r.large);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.altitudes[i], oracle::altitude_by_search(4.0, t.sides(), i), 1e-8);
  EXPECT_THROW(is_large(TriangleShape(ModelKappa(1.0), {0.3, 0.35, 0.4})), Error);
}

TEST(Trig, RejectsBadTriangles) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidInput;
  };
  EXPECT_EQ(code([] { TriangleShape(ModelKappa(0.0), {1, 1, 2}); }), ErrorCode::DegenerateTriangle);
  EXPECT_EQ(code([] { TriangleShape(ModelKappa(0.0), {1, -1, 1}); }), ErrorCode::DegenerateTriangle);
  EXPECT_EQ(code([] { TriangleShape(ModelKappa(4.0), {1.1, 1.1, 1.1}); }), ErrorCode::PerimeterTooLarge);
  EXPECT_EQ(code([] { TriangleShape::from_angles(ModelKappa(4.0), {1.0, 1.0, 1.0}); }), ErrorCode::DegenerateTriangle);
  EXPECT_THROW(ModelKappa(-1.0), Error);
}

// Angles of the comparison triangle grow with κ for fixed sides.
TEST(TrigProperty, ComparisonAnglesMonotoneInKappa) {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    const auto t = random_triangle(rng, 4.0);
    std::array<double, 3> prev{0, 0, 0};
    for (double k : {0.0, 0.5, 1.0, 2.0, 3.0, 4.0}) {
      const auto a = solve_angles(comparison_triangle(t, ModelKappa(k)));
      for (int j = 0; j < 3; ++j) EXPECT_GE(a[j], prev[j] - 1e-12);
      prev = a;
    }
  }
}

TEST(Trig, EmbeddingRealisesSides) {
  std::mt19937 rng(23);
  for (double kappa : {0.0, 4.0}) {
    for (int i = 0; i < 50; ++i) {
      const auto t = random_triangle(rng, kappa);
      const auto v = embed_triangle(t);
      for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(model_distance(t.kappa(), v[k], v[(k + 1) % 3]), t.side(k), 1e-10);
      }
    }
  }
}

TEST(Trig, CatSampling) {
  const auto sph = TriangleShape::from_angles(ModelKappa(4.0), {kPi / 2, kPi / 2, kPi / 2});
  // a triangle is CAT for its own model
  const auto self = cat_sample_test(model_space_triangle(sph), ModelKappa(4.0), 12);
  EXPECT_TRUE(self.pass);
  EXPECT_NEAR(self.worst_margin, 0.0, 1e-12);
  // spherical triangles are fatter than flat ones
  const auto flat = cat_sample_test(model_space_triangle(sph), ModelKappa(0.0), 12);
  EXPECT_FALSE(flat.pass);
  EXPECT_GT(flat.worst_margin, 0.01);
  // and flat ones are thinner than spherical ones
  const TriangleShape pl(ModelKappa(0.0), {0.3, 0.4, 0.5});
  EXPECT_TRUE(cat_sample_test(model_space_triangle(pl), ModelKappa(4.0), 12).pass);
  // too long for a κ=4 comparison triangle: vacuous
  const TriangleShape big(ModelKappa(0.0), {1.0, 1.2, 1.3});
  EXPECT_TRUE(cat_sample_test(model_space_triangle(big), ModelKappa(4.0), 12).pass);
}

TEST(TrigProperty, CatSamplingSerialEqualsParallel) {
  const auto sph = TriangleShape::from_angles(ModelKappa(4.0), {2.0, 1.8, 1.7});
  const auto tri = model_space_triangle(sph);
  const auto a = cat_sample_test(tri, ModelKappa(1.0), 40, Exec::Serial);
  const auto b = cat_sample_test(tri, ModelKappa(1.0), 40, Exec::Parallel);
  EXPECT_EQ(a.worst_margin, b.worst_margin);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.worst_x.side, b.worst_x.side);
  EXPECT_EQ(a.worst_y.t, b.worst_y.t);
}
