#include "conecat/arrangement.hpp"
#include "conecat/cyclo.hpp"
#include "conecat/error.hpp"
#include "conecat/io.hpp"
#include "conecat/orbifold.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <set>

using namespace conecat;

namespace {

using LineSets = std::multiset<std::vector<int>>;

LineSets line_sets(const std::vector<MultiplePoint>& pts) {
  LineSets out;
  for (const auto& p : pts) out.insert(p.lines);
  return out;
}

std::vector<std::array<std::complex<double>, 3>> numeric_lines(const Arrangement& a) {
  std::vector<std::array<std::complex<double>, 3>> out;
  for (const auto& l : a.lines) {
    std::array<std::complex<double>, 3> c;
    for (std::size_t j = 0; j < 3; ++j) c[j] = {l.coeffs[j].real(), l.coeffs[j].imag()};
    out.push_back(c);
  }
  return out;
}

int count(const std::vector<std::pair<int, int>>& profile, int multiplicity) {
  for (const auto& [m, n] : profile) {
    if (m == multiplicity) return n;
  }
  return 0;
}

CycloRational random_cyclo(std::mt19937& rng) {
  std::uniform_int_distribution<int> u(-5, 5);
  return CycloRational(mpq_class(u(rng), 1 + std::abs(u(rng))), mpq_class(u(rng), 1 + std::abs(u(rng))));
}

}  // namespace

TEST(Cyclo, FieldIdentities) {
  const auto w = CycloRational::omega();
  EXPECT_TRUE((w * w + w + 1).is_zero());
  EXPECT_EQ(w * w * w, CycloRational(1));
  EXPECT_EQ(w.conj(), w * w);
  EXPECT_EQ(w.norm(), 1);
  std::mt19937 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_cyclo(rng), y = random_cyclo(rng);
    const std::complex<double> cx(x.real(), x.imag()), cy(y.real(), y.imag());
    const auto p = x * y;
    EXPECT_NEAR(std::abs(std::complex<double>(p.real(), p.imag()) - cx * cy), 0.0, 1e-12);
    EXPECT_NEAR(x.norm().get_d(), std::norm(cx), 1e-12);
    if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), CycloRational(1));
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    EXPECT_EQ(x - x, CycloRational(0));
  }
  EXPECT_THROW(CycloRational(0).inverse(), Error);
}

TEST(Cyclo, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational("-4"), mpq_class(-4));
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Incidence, NamedProfiles) {
  const auto a16 = multiplicity_profile(incidence(named_arrangement("A1_6")));
  EXPECT_EQ(count(a16, 3), 4);
  EXPECT_EQ(count(a16, 2), 3);
  const auto a17 = multiplicity_profile(incidence(named_arrangement("A1_7")));
  EXPECT_EQ(count(a17, 3), 6);
  EXPECT_EQ(count(a17, 2), 3);
  const auto pts = incidence(named_arrangement("A3_0_3"));
  EXPECT_EQ(pts.size(), 12u);
  std::vector<int> per_line(9, 0);
  for (const auto& p : pts) {
    EXPECT_EQ(p.multiplicity(), 3);
    for (int l : p.lines) ++per_line[static_cast<std::size_t>(l)];
  }
  for (int n : per_line) EXPECT_EQ(n, 4);
}

TEST(Incidence, MatchesFloatingPointPairs) {
  for (const auto& name : arrangement_names()) {
    const auto a = named_arrangement(name);
    const auto exact = incidence(a);
    LineSets numeric;
    for (const auto& p : oracle::incidence_numeric(numeric_lines(a))) numeric.insert(p.lines);
    EXPECT_EQ(line_sets(exact), numeric) << name;
  }
}

TEST(IncidenceProperty, ProjectiveInvariance) {
  std::mt19937 rng(12);
  for (const auto& name : arrangement_names()) {
    const auto a = named_arrangement(name);
    const auto base = line_sets(incidence(a));
    for (int trial = 0; trial < 5; ++trial) {
      std::array<ProjVec, 3> m;
      for (auto& row : m) {
        for (auto& x : row) x = random_cyclo(rng);
      }
      if (dot(m[0], cross(m[1], m[2])).is_zero()) continue;
      EXPECT_EQ(line_sets(incidence(transform_lines(a, m))), base) << name;
    }
  }
  const std::array<ProjVec, 3> singular{ProjVec{1, 0, 0}, ProjVec{1, 0, 0}, ProjVec{0, 0, 1}};
  EXPECT_THROW(transform_lines(named_arrangement("A1_6"), singular), Error);
}

TEST(Incidence, DuplicateLinesRejected) {
  Arrangement a;
  a.lines = {make_line({1, 0, 0}, mpq_class(1, 2)), make_line({2, 0, 0}, mpq_class(1, 2)), make_line({0, 1, 0}, mpq_class(1, 2))};
  try {
    incidence(a);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicateLines);
  }
  EXPECT_THROW(named_arrangement("A2_9"), Error);
}

TEST(Orbifold, LocalGroupOrders) {
  const std::vector<std::pair<std::array<int, 3>, long>> cases = {
      {{2, 2, 2}, 16}, {{2, 3, 3}, 144}, {{2, 3, 4}, 576}, {{2, 3, 5}, 3600}, {{2, 2, 5}, 100}};
  for (const auto& [b, order] : cases) {
    const auto g = local_group_order(b[0], b[1], b[2]);
    EXPECT_EQ(g.order, order);
    const long rot = oracle::reflection_group_order(b[0], b[1], b[2]) / 2;
    EXPECT_EQ(g.order, rot * rot);
  }
  EXPECT_EQ(local_group_order(2, 3, 3).label, "ST7");
  EXPECT_EQ(local_group_order(3, 2, 4).label, "ST11");
  EXPECT_EQ(local_group_order(2, 3, 5).label, "ST19");
  EXPECT_THROW(local_group_order(3, 3, 3), Error);
}

TEST(Orbifold, CevaBallQuotient) {
  const auto o = make_orbifold(named_arrangement("A3_0_3"), std::vector<int>(9, 2));
  const auto r = chern_numbers(o);
  EXPECT_EQ(r.c1_sq, mpq_class(9, 4));
  EXPECT_EQ(3 * r.euler_e, mpq_class(9, 4));
  EXPECT_EQ(r.verdict, MiyaokaYau::BallQuotientEquality);
  EXPECT_EQ(to_string(r.verdict), "BALL_QUOTIENT_EQUALITY");
}

TEST(Orbifold, ChernAgainstStrata) {
  std::mt19937 rng(31);
  for (const auto& name : arrangement_names()) {
    const auto a = named_arrangement(name);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<int> b(a.lines.size());
      for (auto& x : b) x = trial == 0 ? 2 : 2 + static_cast<int>(rng() % 3);
      const auto o = make_orbifold(a, b);
      if (!orbifold_admissible(o).confirmed_cat()) {
        EXPECT_THROW(chern_numbers(o), Error);
        continue;
      }
      const auto r = chern_numbers(o);
      const auto ref = oracle::chern_by_strata(numeric_lines(a), b);
      EXPECT_EQ(r.c1_sq, ref.c1_sq) << name;
      EXPECT_EQ(r.euler_e, ref.euler_e) << name;
    }
  }
}

TEST(OrbifoldProperty, ChernInvariantUnderLinePermutation) {
  std::mt19937 rng(9);
  const auto a = named_arrangement("A1_7");
  const std::vector<int> b{2, 2, 3, 2, 2, 3, 2};
  const auto base = chern_numbers(make_orbifold(a, b));
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::size_t> perm(a.lines.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Arrangement p{a.name, {}};
    std::vector<int> pb;
    for (std::size_t i : perm) {
      p.lines.push_back(a.lines[i]);
      pb.push_back(b[i]);
    }
    const auto r = chern_numbers(make_orbifold(p, pb));
    EXPECT_EQ(r.c1_sq, base.c1_sq);
    EXPECT_EQ(r.euler_e, base.euler_e);
  }
}

TEST(Orbifold, Admissibility) {
  const auto bad = orbifold_admissible(make_orbifold(named_arrangement("A3_0_3"), std::vector<int>(9, 3)));
  EXPECT_FALSE(bad.confirmed_cat());
  ASSERT_FALSE(bad.witnesses.empty());
  EXPECT_EQ(bad.witnesses[0].kind, "non_spherical_triple");
  try {
    chern_numbers(make_orbifold(named_arrangement("A3_0_3"), std::vector<int>(9, 3)));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
  }
  EXPECT_THROW(make_orbifold(named_arrangement("A1_6"), {2, 2}), Error);
  EXPECT_THROW(make_orbifold(named_arrangement("A1_6"), std::vector<int>(6, 1)), Error);
}

TEST(Orbifold, MiyaokaYauVerdicts) {
  EXPECT_EQ(miyaoka_yau_verdict(9, 3), MiyaokaYau::BallQuotientEquality);
  EXPECT_EQ(miyaoka_yau_verdict(8, 3), MiyaokaYau::StrictInequality);
  EXPECT_EQ(miyaoka_yau_verdict(10, 3), MiyaokaYau::Violation);
}

TEST(Orbifold, CertifyNamedArrangements) {
  for (const auto& name : arrangement_names()) {
    const auto a = named_arrangement(name);
    const auto c = cporbi_certify(make_orbifold(a, std::vector<int>(a.lines.size(), 2)));
    EXPECT_EQ(c.verdict, Verdict::CatConfirmed) << name;
    int triples = 0;
    for (const auto& p : incidence(a)) triples += p.multiplicity() == 3;
    EXPECT_EQ(static_cast<int>(c.parts.size()), triples) << name;
  }
  Arrangement other = named_arrangement("A1_6");
  other.name.clear();
  EXPECT_THROW(cporbi_certify(make_orbifold(other, std::vector<int>(6, 2))), Error);
}

TEST(Kummer, QuadrilateralDoubleCover) {
  const auto r = kummer_report(named_arrangement("A1_6"), 2, 1.0 / (4 * kPi));
  EXPECT_EQ(r.degree, 32);  // 2^(6-1)
  EXPECT_EQ(r.verdict, KummerVerdict::NotCat);
  EXPECT_EQ(r.angle_threshold, 2);
  EXPECT_EQ(r.fiber_threshold, 3);  // n²·π/2 > 4π first at n = 3
  EXPECT_EQ(r.safe_n, 3);
  for (const auto& l : r.lines) EXPECT_EQ(l.status, ThresholdStatus::Boundary);
  ASSERT_EQ(r.points.size(), 4u);
  for (const auto& p : r.points) EXPECT_TRUE(p.noncat);
}

TEST(Kummer, NoncatRowsFollowTheLemma) {
  // α_min = 2π·min β at each triple point; fires when α_min·⌊n/2⌋ ≥ π
  const auto a = named_arrangement("A3_0_3");
  for (int n : {2, 3, 5}) {
    const auto r = kummer_report(a, n, 1.0 / (4 * kPi));
    mpz_class expected = 1;
    for (std::size_t i = 1; i < a.lines.size(); ++i) expected *= n;
    EXPECT_EQ(r.degree, expected);
    for (const auto& l : r.lines) EXPECT_EQ(l.status, n * 2 > 3 ? ThresholdStatus::Above : ThresholdStatus::Boundary);
    for (const auto& p : r.points) {
      EXPECT_NEAR(p.alpha_min, 4 * kPi / 3, 1e-12);
      EXPECT_EQ(p.noncat, (4 * kPi / 3) * (n / 2) >= kPi);
    }
    EXPECT_EQ(r.verdict, KummerVerdict::NotCat);
  }
  EXPECT_THROW(kummer_report(a, 1, 1.0), Error);
}

TEST(Kummer, SilentLemmaBelowThreshold) {
  auto a = named_arrangement("A1_6");
  for (auto& l : a.lines) l.beta = mpq_class(1, 3);
  const auto r = kummer_report(a, 2, 1.0 / (4 * kPi));
  for (const auto& p : r.points) EXPECT_FALSE(p.noncat);  // 2π/3·1 < π
  for (const auto& l : r.lines) EXPECT_EQ(l.status, ThresholdStatus::Below);
  EXPECT_EQ(r.angle_threshold, 3);
  EXPECT_EQ(r.verdict, KummerVerdict::BelowThreshold);
  EXPECT_EQ(to_string(r.verdict), "BELOW_THRESHOLD");
}

TEST(ArrangementJson, RoundTrip) {
  for (const auto& name : arrangement_names()) {
    const auto a = named_arrangement(name);
    const std::vector<int> b(a.lines.size(), 2);
    const Json j = arrangement_to_json(a, &b);
    const auto back = arrangement_from_json(Json::parse(j.dump()));
    ASSERT_EQ(back.arrangement.lines.size(), a.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
      EXPECT_EQ(back.arrangement.lines[i].coeffs, a.lines[i].coeffs);
      EXPECT_EQ(back.arrangement.lines[i].beta, a.lines[i].beta);
    }
    ASSERT_TRUE(back.b.has_value());
    EXPECT_EQ(*back.b, b);
    EXPECT_EQ(arrangement_to_json(back.arrangement, &*back.b).dump(), j.dump());
  }
}
