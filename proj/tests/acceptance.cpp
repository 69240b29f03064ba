// Runs the acceptance criteria end to end and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include "conecat/arrangement.hpp"
#include "conecat/cli.hpp"
#include "conecat/closed_geodesics.hpp"
#include "conecat/deformation.hpp"
#include "conecat/error.hpp"
#include "conecat/geodesic.hpp"
#include "conecat/grompi4.hpp"
#include "conecat/orbifold.hpp"
#include "conecat/pk_cone.hpp"
#include "conecat/triangle_group.hpp"
#include "conecat/trig.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace conecat;

namespace {

// pinned tolerances
constexpr double kAltitudeTol = 1e-9;
constexpr double kLengthTol = 1e-6;
constexpr double kOctaMargin = 1e-3;
constexpr double kLiftTol = 1e-12;
constexpr double kResidueTol = 1e-9;
constexpr double kGaussBonnetTol = 1e-7;
constexpr double kReverseTol = 1e-7;

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

TriangleShape link_triangle(double a, double b, double c) { return TriangleShape::from_angles(ModelKappa(4.0), {a, b, c}); }

TriangleShape octant() { return link_triangle(kPi / 2, kPi / 2, kPi / 2); }

int cli_code(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  if (out) *out = o.str();
  return code;
}

void c1(Check& c) {
  const auto r = chern_numbers(make_orbifold(named_arrangement("A3_0_3"), std::vector<int>(9, 2)));
  c.expect(r.c1_sq == mpq_class(9, 4), "c1^2 = " + r.c1_sq.get_str());
  c.expect(3 * r.euler_e == mpq_class(9, 4), "3e = " + mpq_class(3 * r.euler_e).get_str());
  c.expect(r.verdict == MiyaokaYau::BallQuotientEquality, "verdict " + std::string(to_string(r.verdict)));
  std::string out;
  c.expect(cli_code({"arrangement", "chern", "--name", "A3_0_3", "--b", "2"}, &out) == 0, "cli exit code");
  c.expect(out.find("BALL_QUOTIENT_EQUALITY") != std::string::npos, "cli verdict");
}

void c2(Check& c) {
  const std::vector<std::pair<std::array<int, 3>, long>> cases = {{{2, 2, 2}, 16}, {{2, 3, 3}, 144}, {{2, 3, 4}, 576}, {{2, 3, 5}, 3600}};
  for (const auto& [b, order] : cases) {
    const auto g = local_group_order(b[0], b[1], b[2]);
    c.expect(g.order == order, "order for " + std::to_string(b[1]) + std::to_string(b[2]) + " = " + g.order.get_str());
    const long rot = oracle::reflection_group_order(b[0], b[1], b[2]) / 2;
    c.expect(g.order == rot * rot, "independent group order");
  }
}

void c3(Check& c) {
  const auto a = named_arrangement("A3_0_3");
  const auto pts = incidence(a);
  std::vector<int> per_line(a.lines.size(), 0);
  int triples = 0;
  for (const auto& p : pts) {
    triples += p.multiplicity() == 3;
    for (int l : p.lines) ++per_line[static_cast<std::size_t>(l)];
  }
  c.expect(triples == 12 && pts.size() == 12, "A3_0_3 triple points: " + std::to_string(triples));
  for (int n : per_line) c.expect(n == 4, "points per line: " + std::to_string(n));

  const auto b = named_arrangement("A1_6");
  std::multiset<std::vector<int>> exact, numeric;
  for (const auto& p : incidence(b)) exact.insert(p.lines);
  std::vector<std::array<std::complex<double>, 3>> lines;
  for (const auto& l : b.lines) {
    std::array<std::complex<double>, 3> z;
    for (std::size_t j = 0; j < 3; ++j) z[j] = {l.coeffs[j].real(), l.coeffs[j].imag()};
    lines.push_back(z);
  }
  for (const auto& p : oracle::incidence_numeric(lines)) numeric.insert(p.lines);
  int t = 0, d = 0;
  for (const auto& s : exact) (s.size() == 3 ? t : d) += s.size() == 3 || s.size() == 2;
  c.expect(t == 4 && d == 3, "A1_6 profile " + std::to_string(t) + " triples, " + std::to_string(d) + " doubles");
  c.expect(exact == numeric, "A1_6 exact vs pairwise intersection");
}

void c4(Check& c) {
  for (const auto& t : {link_triangle(kPi / 2, kPi / 2, kPi / 2), link_triangle(2 * kPi / 3, 2 * kPi / 3, kPi / 2),
                        link_triangle(2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3)}) {
    const auto r = is_large(t);
    c.expect(r.large, "triangle not large");
    c.expect(r.min_altitude >= kPi / 4 - kAltitudeTol, "min altitude " + std::to_string(r.min_altitude));
    for (int v = 0; v < 3; ++v) {
      const double ref = oracle::altitude_by_search(4.0, t.sides(), v);
      c.expect(std::abs(ref - r.altitudes[static_cast<std::size_t>(v)]) < 1e-8, "altitude oracle disagrees");
    }
  }
}

void c5(Check& c) {
  for (const auto& name : arrangement_names()) {
    const auto a = named_arrangement(name);
    const auto cert = cporbi_certify(make_orbifold(a, std::vector<int>(a.lines.size(), 2)));
    c.expect(cert.verdict == Verdict::CatConfirmed, name + " not confirmed");
    c.expect(cli_code({"arrangement", "certify", "--name", name, "--b", "2"}) == 0, name + " cli exit code");
  }
  const auto g = grompi4_certify(triangle_group_cover(octant(), {2, 2, 2}));
  c.expect(g.verdict == Verdict::CatConfirmed, "octahedral cover fails grompi4");
  c.expect(g.witnesses.empty(), "octahedral cover has witnesses");
}

void c6(Check& c) {
  const auto round = find_closed_geodesics(round_sphere(4.0), 3.0);
  c.expect(!round.found.empty() && round.below_bound.empty(), "round sphere search");
  for (const auto& g : round.found) c.expect(std::abs(g.length - kPi) < kLengthTol, "round sphere length");
  const auto dbl = find_closed_geodesics(double_triangle(octant()), kPi);
  bool half = false;
  for (const auto& g : dbl.below_bound) half = half || std::abs(g.length - kPi / 2) < kLengthTol;
  c.expect(half, "no pi/2 loop on octant double");
  c.expect(global_cat_verdict(double_triangle(octant())).verdict == Verdict::NotCat, "octant double verdict");
  const auto octa = find_closed_geodesics(triangle_group_cover(octant(), {2, 2, 2}), kPi - kOctaMargin);
  c.expect(octa.below_bound.empty(), "short geodesic on octahedral cover");
}

void c7(Check& c) {
  c.expect(fiber_length(QuotientSphere(round_sphere(4.0))) == kTwoPi, "round fiber not 2pi");
  const QuotientSphere base(double_triangle(octant()));
  for (const std::array<int, 3>& m : {std::array<int, 3>{2, 2, 2}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}}) {
    const auto cover = triangle_group_cover(octant(), m);
    const double d = cover.triangle_count() / 2.0;
    c.expect(std::abs(fiber_length(QuotientSphere(cover)) - d * fiber_length(base)) <= 1e-12 * d, "cover scaling");
  }
}

void c8(Check& c) {
  for (double theta : {kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
    const double len = circle_length(ModelKappa(4.0), projection_curvature(theta));
    c.expect(std::abs(len - kPi * std::sin(theta)) < kLiftTol, "circle length");
    c.expect(lift_length(len, theta) >= kPi - kLiftTol, "lift below pi");
  }
}

void c9(Check& c) {
  DiskRegion hemisphere;
  hemisphere.area = kPi / 2;
  const auto h = holonomy(QuotientSphere(round_sphere(4.0)), hemisphere);
  c.expect(std::abs(h.residue - kPi) < kResidueTol, "residue " + std::to_string(h.residue));
  c.expect(!h.residue_zero, "residue reported zero");
}

void c10(Check& c) {
  c.expect(noncat_test(kPi, 2), "noncat_test(pi, 2) silent");
  const auto r = kummer_report(named_arrangement("A1_6"), 2, isoperimetric_constant(1.0));
  c.expect(r.verdict == KummerVerdict::NotCat, "kummer verdict");
  c.expect(cli_code({"arrangement", "kummer", "--name", "A1_6", "--n", "2"}) == 1, "kummer exit code");
  c.expect(cli_code({"cone", "noncat", "--alpha-min", "3.14159265", "--n", "2"}) == 1, "noncat exit code");
}

void c11(Check& c) {
  // Gauss–Bonnet
  std::vector<ConeSurface> surfaces = {round_sphere(4.0), round_sphere(1.0), flat_torus(1.0, 0.6), double_triangle(octant())};
  for (const std::array<int, 3>& m : {std::array<int, 3>{2, 2, 2}, {2, 3, 3}, {2, 3, 4}, {2, 3, 5}}) {
    surfaces.push_back(triangle_group_cover(octant(), m));
    surfaces.push_back(triangle_group_cover(link_triangle(2 * kPi / 3, 2 * kPi / 3, kPi / 2), m));
  }
  const ConeSurface base = surfaces.back();
  for (double k2 : {0.0, 2.0}) surfaces.push_back(comparison_member(base, k2));
  for (const auto& s : surfaces) c.expect(std::abs(s.gauss_bonnet_residual()) < kGaussBonnetTol, "Gauss-Bonnet");

  // comparison angles grow with κ
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> u(0.1, 0.7);
  for (int i = 0; i < 200; ++i) {
    const std::array<double, 3> sides{u(rng), u(rng), u(rng)};
    std::array<double, 3> prev{0, 0, 0};
    bool first = true;
    for (double k : {0.0, 1.0, 2.0, 3.0, 4.0}) {
      try {
        const auto a = solve_angles(TriangleShape(ModelKappa(k), sides));
        if (!first) {
          for (int j = 0; j < 3; ++j) c.expect(a[static_cast<std::size_t>(j)] >= prev[static_cast<std::size_t>(j)] - 1e-12, "monotonicity");
        }
        prev = a;
        first = false;
      } catch (const Error&) {
        break;
      }
    }
  }

  // tracer reversibility
  TraceOptions opts;
  opts.detect_closure = false;
  std::uniform_real_distribution<double> w(0.1, 1.0), ang(0.0, kTwoPi), len(0.5, 6.0);
  for (const auto& s : surfaces) {
    for (int i = 0; i < 10; ++i) {
      TangentVector v;
      v.tri = static_cast<int>(rng() % static_cast<unsigned>(s.triangle_count()));
      v.pos = point_in_triangle(s, v.tri, {w(rng), w(rng), w(rng)});
      v.dir = direction_in_triangle(s, v.tri, v.pos, ang(rng));
      const double L = len(rng);
      const auto fwd = trace_geodesic(s, v, L, opts);
      if (fwd.status != PathStatus::Open) continue;
      TangentVector back = fwd.end;
      back.dir = -back.dir;
      const auto rev = trace_geodesic(s, back, L, opts);
      if (rev.status != PathStatus::Open) continue;
      c.expect(rev.end.tri == v.tri && (rev.end.pos - v.pos).norm() < kReverseTol && (rev.end.dir + v.dir).norm() < kReverseTol,
               "tracer reversibility");
    }
  }

  // structured reports are deterministic
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "json", "surface", "certify", "--builtin", "octa-cover"},
        std::vector<std::string>{"--format", "json", "arrangement", "kummer", "--name", "A3_0_3", "--n", "3"}}) {
    std::string a, b;
    cli_code(args, &a);
    cli_code(args, &b);
    c.expect(!a.empty() && a == b, "nondeterministic report");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"exact Chern equality", 1, c1},
      {"local group orders", 1, c2},
      {"incidence", 1, c3},
      {"large-triangle certification", 1, c4},
      {"grompi4 pipeline", 10, c5},
      {"geodesic tracer calibration", 60, c6},
      {"fiber/area identity", 1, c7},
      {"lift bound", 1, c8},
      {"holonomy obstruction", 1, c9},
      {"non-CAT detection", 1, c10},
      {"property suites", 60, c11},
  };
  int failed = 0;
  int index = 1;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs < cr.budget_s, "runtime over budget");
    failed += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << index++ << ". " << cr.name << " (" << std::fixed
              << std::setprecision(3) << secs << " s)";
    if (!c.ok) std::cout << "  " << c.why;
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
