#include "conecat/orbifold.hpp"

#include "conecat/cone_surface.hpp"
#include "conecat/error.hpp"
#include "conecat/grompi4.hpp"
#include "conecat/pk_cone.hpp"
#include "conecat/triangle_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace conecat {

OrbifoldStructure make_orbifold(Arrangement a, std::vector<int> b) {
  if (b.size() != a.lines.size()) throw Error(ErrorCode::InvalidInput, "need one multiplicity per line");
  for (int x : b) {
    if (x < 2) throw Error(ErrorCode::InvalidInput, "orbifold multiplicities must be at least 2");
  }
  return {std::move(a), std::move(b)};
}

namespace {

mpq_class reciprocal_sum(const std::vector<int>& b, const std::vector<int>& lines) {
  mpq_class s = 0;
  for (int i : lines) s += mpq_class(1, b[static_cast<std::size_t>(i)]);
  return s;
}

std::string point_label(const MultiplePoint& p) {
  return "(" + p.point[0].to_string() + ":" + p.point[1].to_string() + ":" + p.point[2].to_string() + ")";
}

}  // namespace

Certificate orbifold_admissible(const OrbifoldStructure& o) {
  const auto points = incidence(o.arrangement);
  for (const auto& p : points) {
    if (p.multiplicity() > 3) {
      Certificate c = Certificate::undetermined("orbifold_admissible");
      c.witnesses.push_back({"high_multiplicity", "point " + point_label(p) + " lies on more than three lines",
                             {{"multiplicity", p.multiplicity()}}});
      return c;
    }
    if (p.multiplicity() == 3 && reciprocal_sum(o.b, p.lines) <= 1) {
      Certificate c = Certificate::undetermined("orbifold_admissible");
      c.witnesses.push_back({"non_spherical_triple", "triple point " + point_label(p) + " has 1/b sum at most 1",
                             {{"reciprocal_sum", reciprocal_sum(o.b, p.lines).get_d()}}});
      return c;
    }
  }
  return Certificate::confirmed("orbifold_admissible").note("admissible orbifold structure (not a CAT verdict)");
}

LocalGroup local_group_order(int bj, int bk, int bl) {
  for (int x : {bj, bk, bl}) {
    if (x < 2) throw Error(ErrorCode::NotSpherical, "multiplicities must be at least 2");
  }
  const mpq_class excess = mpq_class(1, bj) + mpq_class(1, bk) + mpq_class(1, bl) - 1;
  if (excess <= 0) throw Error(ErrorCode::NotSpherical, "1/b sum must exceed 1");
  LocalGroup g;
  g.order = 4 / (excess * excess);
  std::array<int, 3> m{bj, bk, bl};
  std::sort(m.begin(), m.end());
  if (m[0] == 2 && m[1] == 2) {
    g.label = "G(" + std::to_string(2 * m[2]) + ",2,2)";
  } else if (m[0] == 2 && m[1] == 3) {
    g.label = m[2] == 3 ? "ST7" : m[2] == 4 ? "ST11" : "ST19";
  }
  return g;
}

std::string_view to_string(MiyaokaYau v) {
  switch (v) {
    case MiyaokaYau::BallQuotientEquality: return "BALL_QUOTIENT_EQUALITY";
    case MiyaokaYau::StrictInequality: return "STRICT_INEQUALITY";
    case MiyaokaYau::Violation: return "VIOLATION";
  }
  return "VIOLATION";
}

MiyaokaYau miyaoka_yau_verdict(const mpq_class& c1_sq, const mpq_class& euler_e) {
  const mpq_class three_e = 3 * euler_e;
  if (c1_sq == three_e) return MiyaokaYau::BallQuotientEquality;
  return c1_sq < three_e ? MiyaokaYau::StrictInequality : MiyaokaYau::Violation;
}

ChernReport chern_numbers(const OrbifoldStructure& o) {
  if (!orbifold_admissible(o).confirmed_cat()) throw Error(ErrorCode::NotAdmissible, "orbifold structure is not admissible");
  const auto points = incidence(o.arrangement);
  const std::size_t n = o.arrangement.lines.size();
  std::vector<int> on_line(n, 0);
  mpq_class point_sum = 0;
  for (const auto& p : points) {
    for (int i : p.lines) ++on_line[static_cast<std::size_t>(i)];
    mpq_class order;
    if (p.multiplicity() == 2) {
      order = o.b[static_cast<std::size_t>(p.lines[0])] * o.b[static_cast<std::size_t>(p.lines[1])];
    } else {
      order = local_group_order(o.b[static_cast<std::size_t>(p.lines[0])], o.b[static_cast<std::size_t>(p.lines[1])],
                                o.b[static_cast<std::size_t>(p.lines[2])])
                  .order;
    }
    point_sum += 1 - 1 / order;
  }
  mpq_class c1 = -3;
  mpq_class e = 3;
  for (std::size_t i = 0; i < n; ++i) {
    const mpq_class w = 1 - mpq_class(1, o.b[i]);
    c1 += w;                   // degree 1
    e -= w * (2 - on_line[i]);  // e(ℂP¹ minus its multiple points)
  }
  e -= point_sum;
  ChernReport r;
  r.c1_sq = c1 * c1;
  r.euler_e = e;
  r.verdict = miyaoka_yau_verdict(r.c1_sq, r.euler_e);
  return r;
}

Certificate cporbi_certify(const OrbifoldStructure& o) {
  const Arrangement& a = o.arrangement;
  if (!is_named_arrangement(a.name)) {
    throw Error(ErrorCode::NotNamedArrangement, "certification is defined for A1_6, A1_7 and A3_0_3");
  }
  if (!orbifold_admissible(o).confirmed_cat()) throw Error(ErrorCode::NotAdmissible, "orbifold structure is not admissible");

  const std::string criterion = "orbifold_cover_cat";
  std::vector<Certificate> parts;
  bool ok = true;

  // (1) conical angle b·2πβ along each line
  double worst_line = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    const mpq_class m = o.b[i] * a.lines[i].beta - 1;
    worst_line = std::min(worst_line, m.get_d());
    if (m < 0) ok = false;
  }

  // (3) triple points: quotient sphere = double of the triangle with angles πβ
  const auto points = incidence(a);
  int doubles = 0, triples = 0;
  double worst_alt = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    if (p.multiplicity() == 2) {
      ++doubles;
      continue;
    }
    ++triples;
    std::array<double, 3> angles{};
    std::array<int, 3> mult{};
    for (int k = 0; k < 3; ++k) {
      const int line = p.lines[static_cast<std::size_t>(k)];
      angles[static_cast<std::size_t>(k)] = kPi * a.lines[static_cast<std::size_t>(line)].beta.get_d();
      mult[static_cast<std::size_t>(k)] = o.b[static_cast<std::size_t>(line)];
    }
    const TriangleShape t = TriangleShape::from_angles(ModelKappa(4.0), angles);
    const ConeSurface quotient = double_triangle(t);
    const LargeTest large = is_large(t);
    worst_alt = std::min(worst_alt, large.min_altitude);
    const ConeSurface cover = triangle_group_cover(t, mult);
    Certificate g = grompi4_certify(cover);
    g.subject = cover.fingerprint();
    g.note("triple point " + point_label(p) + ", quotient " + quotient.fingerprint() + ", cover of type (" +
           std::to_string(mult[0]) + "," + std::to_string(mult[1]) + "," + std::to_string(mult[2]) + ") with " +
           std::to_string(cover.triangle_count()) + " tiles");
    g.margin("link_triangle_min_altitude_minus_pi_over_4", large.min_altitude - kPi / 4.0);
    if (!g.confirmed_cat() || !large.large) ok = false;
    parts.push_back(std::move(g));
  }

  Certificate c = ok ? Certificate::confirmed(criterion, a.name) : Certificate::undetermined(criterion, a.name);
  c.margin("min_line_b_beta_minus_1", worst_line);
  if (triples > 0) c.margin("min_link_altitude_minus_pi_over_4", worst_alt - kPi / 4.0);
  c.margin("double_points", doubles);
  c.margin("triple_points", triples);
  c.note("double points are products of two 2-cones with angles at least 2pi, hence locally CAT(0)");
  c.note("quotient cone angle read as the conical angle along the matching line");
  c.parts = std::move(parts);
  return c;
}

std::string_view to_string(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::Above: return "ABOVE";
    case ThresholdStatus::Boundary: return "BOUNDARY";
    case ThresholdStatus::Below: return "BELOW";
  }
  return "BELOW";
}

std::string_view to_string(KummerVerdict v) {
  switch (v) {
    case KummerVerdict::NotCat: return "NOT_CAT";
    case KummerVerdict::SafeThresholdMet: return "SAFE_THRESHOLD_MET";
    case KummerVerdict::BelowThreshold: return "BELOW_THRESHOLD";
  }
  return "BELOW_THRESHOLD";
}

KummerReport kummer_report(const Arrangement& a, int n, double isoperimetric_c) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "cover order must be at least 2");
  if (a.lines.empty()) throw Error(ErrorCode::InvalidInput, "empty arrangement");
  if (!(isoperimetric_c > 0.0)) throw Error(ErrorCode::InvalidInput, "isoperimetric constant must be positive");
  KummerReport r;
  r.n = n;
  r.isoperimetric_c = isoperimetric_c;
  mpz_pow_ui(r.degree.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(a.lines.size() - 1));

  bool angles_ok = true;
  r.angle_threshold = 0;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    KummerLineRow row;
    row.line = static_cast<int>(i);
    row.beta = a.lines[i].beta;
    row.n_beta = n * row.beta;
    row.status = row.n_beta > 1 ? ThresholdStatus::Above : row.n_beta == 1 ? ThresholdStatus::Boundary : ThresholdStatus::Below;
    if (row.status != ThresholdStatus::Above) angles_ok = false;
    r.angle_threshold = std::max(r.angle_threshold, mpq_class(1 / row.beta));
    r.lines.push_back(row);
  }

  const double threshold = kTwoPi + 8.0 * kPi * kPi * isoperimetric_c;
  bool fibers_ok = true, noncat = false;
  long fiber_n = 2;
  for (const auto& p : incidence(a)) {
    if (p.multiplicity() != 3) continue;
    KummerPointRow row;
    row.lines = p.lines;
    mpq_class sum = 0, min_beta = a.lines[static_cast<std::size_t>(p.lines[0])].beta;
    for (int i : p.lines) {
      sum += a.lines[static_cast<std::size_t>(i)].beta;
      min_beta = std::min(min_beta, a.lines[static_cast<std::size_t>(i)].beta);
    }
    row.base_fiber_length = kPi * mpq_class(sum - 1).get_d();
    row.degree = static_cast<long>(n) * n;
    row.fiber_length = row.degree * row.base_fiber_length;
    row.threshold = threshold;
    row.fiber_ok = row.fiber_length > threshold;
    row.alpha_min = kTwoPi * min_beta.get_d();
    row.noncat = noncat_test(row.alpha_min, n);
    if (row.base_fiber_length > 0.0) {
      fiber_n = std::max(fiber_n, static_cast<long>(std::floor(std::sqrt(threshold / row.base_fiber_length))) + 1);
    }
    fibers_ok = fibers_ok && row.fiber_ok;
    noncat = noncat || row.noncat;
    r.points.push_back(std::move(row));
  }
  r.fiber_threshold = fiber_n;
  r.safe_n = std::max(r.angle_threshold, mpq_class(fiber_n));
  r.verdict = noncat ? KummerVerdict::NotCat
                     : (angles_ok && fibers_ok) ? KummerVerdict::SafeThresholdMet : KummerVerdict::BelowThreshold;
  return r;
}

}  // namespace conecat
