#include "conecat/cli.hpp"

#include "conecat/closed_geodesics.hpp"
#include "conecat/covering.hpp"
#include "conecat/deformation.hpp"
#include "conecat/error.hpp"
#include "conecat/grompi4.hpp"
#include "conecat/io.hpp"
#include "conecat/orbifold.hpp"
#include "conecat/pk_cone.hpp"
#include "conecat/svg.hpp"
#include "conecat/triangle_group.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <regex>

namespace conecat::cli {

namespace {

// Documented maxima for sampling densities.
constexpr int kMaxGrid = 256;
constexpr int kMaxSubdivisions = 200;
constexpr int kMaxSampling = 1024;

struct Config {
  std::string format = "text";
  std::string file, builtin, name;
  std::string sides, angles, double_angles, mult, b_list, points, interior, boundary, kappa_grid;
  std::string alpha_min;
  std::string save;
  double kappa = 4.0, kappa2 = 0.0, c_max = 1.0;
  std::string bound, area;
  double c_iso = 1.0 / (4.0 * kPi);
  int n = 2, edge_samples = 8, angle_samples = 16, vertex_dirs = 32, density = 24, sampling = 64, limit = 20;
  int vertex = 0;
  bool serial = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<double> angle_list(const std::string& s, std::size_t expect) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) out.push_back(parse_angle(part).value);
  if (expect && out.size() != expect) throw UsageError("expected " + std::to_string(expect) + " comma-separated values");
  return out;
}

std::array<double, 3> triple(const std::string& s) {
  const auto v = angle_list(s, 3);
  return {v[0], v[1], v[2]};
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + part + "'");
    }
    if (used != part.size()) throw UsageError("not an integer: '" + part + "'");
    out.push_back(x);
  }
  return out;
}

void check_density(int value, int max, const char* what) {
  if (value < 1 || value > max) throw UsageError(std::string(what) + " must be in [1, " + std::to_string(max) + "]");
}

Json number(double x) { return std::isfinite(x) ? Json(round12(x)) : Json(x > 0 ? "inf" : "-inf"); }

Json number_list(const std::array<double, 3>& v) { return {number(v[0]), number(v[1]), number(v[2])}; }

ConeSurface builtin_surface(const std::string& name) {
  const ModelKappa k4(4.0);
  if (name == "round4") return round_sphere(4.0);
  if (name == "octant-double") return double_triangle(TriangleShape::from_angles(k4, {kPi / 2, kPi / 2, kPi / 2}));
  if (name == "octa-cover") {
    return triangle_group_cover(TriangleShape::from_angles(k4, {kPi / 2, kPi / 2, kPi / 2}), {2, 2, 2});
  }
  if (name == "a1_7-double") {
    return double_triangle(TriangleShape::from_angles(k4, {2 * kPi / 3, 2 * kPi / 3, kPi / 2}));
  }
  if (name == "a3_0_3-double") {
    return double_triangle(TriangleShape::from_angles(k4, {2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3}));
  }
  if (name == "flat-torus") return flat_torus(1.0, 1.0);
  throw UsageError("unknown builtin surface '" + name +
                   "' (round4, octant-double, octa-cover, a1_7-double, a3_0_3-double, flat-torus)");
}

ConeSurface load_surface(const Config& c) {
  const int given = !c.file.empty() + !c.builtin.empty() + !c.double_angles.empty();
  if (given != 1) throw UsageError("give exactly one of --file, --builtin, --double-angles");
  if (!c.file.empty()) return build_surface(read_surface_file(c.file));
  if (!c.builtin.empty()) return builtin_surface(c.builtin);
  return double_triangle(TriangleShape::from_angles(ModelKappa(c.kappa), triple(c.double_angles)));
}

TriangleShape load_triangle(const Config& c) {
  if (c.sides.empty() == c.angles.empty()) throw UsageError("give exactly one of --sides, --angles");
  if (!c.sides.empty()) return TriangleShape(ModelKappa(c.kappa), triple(c.sides));
  return TriangleShape::from_angles(ModelKappa(c.kappa), triple(c.angles));
}

OrbifoldStructure load_orbifold(const Config& c, Arrangement a, const std::optional<std::vector<int>>& file_b) {
  std::vector<int> b;
  if (!c.b_list.empty()) {
    b = int_list(c.b_list);
    if (b.size() == 1) b.assign(a.lines.size(), b[0]);
  } else if (file_b) {
    b = *file_b;
  } else {
    throw UsageError("orbifold multiplicities needed: --b");
  }
  return make_orbifold(std::move(a), std::move(b));
}

std::pair<Arrangement, std::optional<std::vector<int>>> load_arrangement(const Config& c) {
  if (c.name.empty() == c.file.empty()) throw UsageError("give exactly one of --name, --file");
  if (!c.name.empty()) return {named_arrangement(c.name), std::nullopt};
  ArrangementInput in = read_arrangement_file(c.file);
  return {std::move(in.arrangement), std::move(in.b)};
}

Json surface_summary(const ConeSurface& s) {
  Json j;
  j["kappa"] = number(s.kappa().value());
  j["triangles"] = s.triangle_count();
  j["vertices"] = s.vertex_count();
  j["edges"] = s.edge_count();
  j["euler_characteristic"] = s.euler_characteristic();
  j["area"] = number(s.area());
  j["gauss_bonnet_residual"] = number(s.gauss_bonnet_residual());
  j["fingerprint"] = s.fingerprint();
  Json vs = Json::array();
  for (int v = 0; v < s.vertex_count(); ++v) {
    vs.push_back({{"vertex", v},
                  {"cone_angle", number(s.vertex(v).cone_angle)},
                  {"cone_angle_over_pi", number(s.vertex(v).cone_angle / kPi)},
                  {"valence", s.valence(v)},
                  {"smooth", s.smooth_vertex(v)}});
  }
  j["vertex_list"] = vs;
  return j;
}

Json geodesic_json(const ClosedGeodesic& g) {
  Json j{{"kind", std::string(to_string(g.kind))}, {"length", number(g.length)}};
  if (g.kind == GeodesicKind::VertexLoop) {
    j["vertex"] = g.vertex;
    j["sectors"] = {number(g.sector_a), number(g.sector_b)};
  } else {
    j["itinerary"] = g.itinerary;
  }
  return j;
}

// Text rendering of a report: one "key: value" line per scalar, nested
// objects indented.
void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render_text(v, out, indent + 2);
    } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          render_text(e, out, indent + 4);
        } else {
          out << pad << "  - " << e.dump() << "\n";
        }
      }
    } else if (v.is_array()) {
      out << pad << it.key() << ": " << v.dump() << "\n";
    } else {
      out << pad << it.key() << ": " << scalar(v) << "\n";
    }
  }
}

struct Outcome {
  Json report;
  int code = 0;
  std::optional<std::string> svg;
};

int verdict_code(const Certificate& c) { return c.verdict == Verdict::NotCat ? 1 : 0; }

Outcome trig_solve(const Config& c) {
  const TriangleShape t = load_triangle(c);
  const auto a = solve_angles(t);
  Outcome o;
  o.report["kappa"] = number(t.kappa().value());
  o.report["sides"] = number_list(t.sides());
  o.report["angles"] = number_list(a);
  o.report["angles_over_pi"] = number_list({a[0] / kPi, a[1] / kPi, a[2] / kPi});
  o.report["area"] = number(triangle_area(t));
  if (t.kappa().value() == 4.0) {
    const LargeTest lt = is_large(t);
    o.report["altitudes"] = number_list(lt.altitudes);
    o.report["min_altitude"] = number(lt.min_altitude);
    o.report["large"] = lt.large;
  }
  return o;
}

Outcome trig_compare(const Config& c) {
  const TriangleShape t = load_triangle(c);
  const TriangleShape cmp = comparison_triangle(t, ModelKappa(c.kappa2));
  Outcome o;
  o.report["sides"] = number_list(t.sides());
  o.report["kappa"] = number(t.kappa().value());
  o.report["angles"] = number_list(solve_angles(t));
  o.report["kappa2"] = number(c.kappa2);
  o.report["comparison_angles"] = number_list(solve_angles(cmp));
  const CatSample cs = cat_sample_test(model_space_triangle(t), ModelKappa(c.kappa2), 16,
                                       c.serial ? Exec::Serial : Exec::Parallel);
  o.report["cat_sample"] = {{"pass", cs.pass}, {"worst_margin", number(cs.worst_margin)}, {"pairs", cs.pairs}};
  return o;
}

Outcome surface_build(const Config& c) {
  const ConeSurface s = load_surface(c);
  Outcome o;
  o.report = surface_summary(s);
  if (!c.save.empty()) {
    std::ofstream f(c.save);
    if (!f) throw UsageError("cannot write '" + c.save + "'");
    f << surface_to_json(s.description()).dump(2) << "\n";
  }
  if (c.format == "svg") o.svg = svg_tiling(s);
  return o;
}

SearchGrid grid_of(const Config& c) {
  check_density(c.edge_samples, kMaxGrid, "--edge-samples");
  check_density(c.angle_samples, kMaxGrid, "--angle-samples");
  check_density(c.vertex_dirs, kMaxGrid, "--vertex-dirs");
  return {c.edge_samples, c.angle_samples, c.vertex_dirs};
}

double bound_of(const Config& c, const ConeSurface& s) {
  if (c.bound.empty()) return default_length_bound(s.kappa());
  const double b = parse_angle(c.bound).value;
  if (!(b > 0.0)) throw UsageError("--bound must be positive");
  return b;
}

Outcome surface_geodesics(const Config& c) {
  const ConeSurface s = load_surface(c);
  const double bound = bound_of(c, s);
  const auto search = find_closed_geodesics(s, bound, grid_of(c), c.serial ? Exec::Serial : Exec::Parallel);
  Outcome o;
  o.report["length_bound"] = number(bound);
  o.report["search_length"] = number(search.search_length);
  o.report["traces"] = search.traces;
  o.report["found"] = search.found.size();
  o.report["below_bound"] = search.below_bound.size();
  o.report["systole_estimate"] = number(search.systole_estimate);
  std::vector<double> lengths;
  for (const auto& g : search.found) {
    if (lengths.empty() || std::abs(g.length - lengths.back()) > 1e-6) lengths.push_back(g.length);
  }
  Json dl = Json::array();
  for (double l : lengths) dl.push_back(number(l));
  o.report["distinct_lengths"] = dl;
  Json list = Json::array();
  for (std::size_t i = 0; i < search.found.size() && static_cast<int>(i) < c.limit; ++i) list.push_back(geodesic_json(search.found[i]));
  o.report["geodesics"] = list;
  if (c.format == "svg") {
    if (search.found.empty()) throw UsageError("no closed geodesic to draw");
    const auto& g = search.found.front();
    TraceOptions opts;
    opts.detect_closure = g.kind == GeodesicKind::Smooth;
    o.svg = svg_geodesic(s, trace_geodesic(s, g.start, g.length + 1e-6, opts));
  }
  return o;
}

Outcome surface_certify(const Config& c) {
  const ConeSurface s = load_surface(c);
  const Certificate cert = global_cat_verdict(s, bound_of(c, s), grid_of(c), c.serial ? Exec::Serial : Exec::Parallel);
  Outcome o;
  o.report = certificate_to_json(cert);
  o.code = verdict_code(cert);
  return o;
}

Outcome surface_cover(const Config& c) {
  Outcome o;
  if (!c.mult.empty()) {
    const auto m = int_list(c.mult);
    if (m.size() != 3) throw UsageError("--mult takes p,q,r");
    const TriangleShape t = load_triangle(c);
    const ConeSurface s = triangle_group_cover(t, {m[0], m[1], m[2]});
    o.report = surface_summary(s);
    o.report["tiles"] = s.triangle_count();
    if (!c.save.empty()) {
      std::ofstream f(c.save);
      if (!f) throw UsageError("cannot write '" + c.save + "'");
      f << surface_to_json(s.description()).dump(2) << "\n";
    }
    if (c.format == "svg") o.svg = svg_tiling(s);
    return o;
  }
  check_density(c.density, kMaxSubdivisions, "--density");
  const ConeSurface s = load_surface(c);
  const CoveringResult r = covering_radius(s, c.density);
  o.report["max_distance"] = number(r.max_distance);
  o.report["error_bound"] = number(r.error_bound);
  o.report["pi_over_4"] = number(kPi / 4);
  o.report["below_pi_over_4"] = r.below_pi_over_4;
  o.report["worst_triangle"] = r.worst_triangle;
  o.report["worst_weights"] = number_list(r.worst_weights);
  o.report["nodes"] = r.nodes;
  return o;
}

Outcome cone_fiber(const Config& c) {
  const QuotientSphere q(load_surface(c));
  Outcome o;
  o.report["area"] = number(q.surface().area());
  o.report["fiber_length"] = number(q.fiber_length());
  Json cps = Json::array();
  for (const auto& [v, a] : q.cone_points()) cps.push_back({{"vertex", v}, {"cone_angle", number(a)}});
  o.report["cone_points"] = cps;
  return o;
}

Outcome cone_holonomy(const Config& c) {
  const QuotientSphere q(load_surface(c));
  DiskRegion r;
  r.area = parse_angle(c.area).value;
  if (!c.interior.empty()) r.interior_angles = angle_list(c.interior, 0);
  if (!c.boundary.empty()) {
    for (const auto& part : split(c.boundary, ',')) {
      const auto io = split(part, ':');
      if (io.size() != 2) throw UsageError("--boundary entries are inner:outer");
      r.boundary.emplace_back(parse_angle(io[0]).value, parse_angle(io[1]).value);
    }
  }
  const HolonomyResult h = holonomy(q, r);
  Outcome o;
  o.report["curvature_integral"] = number(h.curvature_integral);
  o.report["holonomy_integral"] = number(h.integral);
  o.report["fiber_length"] = number(h.fiber_length);
  o.report["residue"] = number(h.residue);
  o.report["residue_zero"] = h.residue_zero;
  o.report["embedded_projection_possible"] = h.residue_zero;
  return o;
}

Outcome cone_verdict(const Config& c) {
  const QuotientSphere q(load_surface(c));
  const Certificate cat4 = global_cat_verdict(q.surface(), bound_of(c, q.surface()), grid_of(c),
                                              c.serial ? Exec::Serial : Exec::Parallel);
  const Certificate cert = cone_cat0_verdict(q, cat4);
  Outcome o;
  o.report = certificate_to_json(cert);
  o.code = verdict_code(cert);
  return o;
}

Outcome cone_noncat(const Config& c) {
  if (c.alpha_min.empty()) throw UsageError("--alpha-min is required");
  const ParsedAngle a = parse_angle(c.alpha_min);
  const bool fires = noncat_test(a.value, c.n, a.tolerance);
  Outcome o;
  o.report["alpha_min"] = number(a.value);
  o.report["tolerance"] = number(a.tolerance);
  o.report["n"] = c.n;
  o.report["product"] = number(a.value * (c.n / 2));
  o.report["verdict"] = fires ? "NOT_CAT" : "UNDETERMINED";
  o.report["note"] = "assumes the cone is not a product of two 2-cones";
  o.code = fires ? 1 : 0;
  return o;
}

Outcome cone_hemisphere(const Config& c) {
  std::vector<Vec3> pts;
  for (const auto& p : split(c.points, ';')) {
    const auto xyz = angle_list(p, 3);
    pts.emplace_back(xyz[0], xyz[1], xyz[2]);
  }
  if (pts.empty()) throw UsageError("--points is required");
  Outcome o;
  o.report["points"] = pts.size();
  o.report["not_in_open_hemisphere"] = hemisphere_test(pts);
  return o;
}

Outcome arrangement_incidence(const Config& c) {
  auto [a, b] = load_arrangement(c);
  const auto pts = incidence(a);
  Outcome o;
  if (!a.name.empty()) o.report["name"] = a.name;
  o.report["lines"] = a.lines.size();
  Json prof = Json::object();
  for (const auto& [m, count] : multiplicity_profile(pts)) prof[std::to_string(m)] = count;
  o.report["multiplicity_profile"] = prof;
  Json list = Json::array();
  for (const auto& p : pts) {
    list.push_back({{"point", {p.point[0].to_string(), p.point[1].to_string(), p.point[2].to_string()}},
                    {"lines", p.lines}});
  }
  o.report["points"] = list;
  if (a.name == "A3_0_3") o.report["note"] = "third cubic factor read as z^3 - x^3";
  if (c.format == "svg") o.svg = svg_arrangement(a);
  return o;
}

Outcome arrangement_chern(const Config& c) {
  auto [a, b] = load_arrangement(c);
  const OrbifoldStructure orb = load_orbifold(c, std::move(a), b);
  const ChernReport r = chern_numbers(orb);
  Outcome o;
  o.report["c1_squared"] = r.c1_sq.get_str();
  o.report["euler_e"] = r.euler_e.get_str();
  o.report["three_e"] = mpq_class(3 * r.euler_e).get_str();
  o.report["verdict"] = std::string(to_string(r.verdict));
  o.code = r.verdict == MiyaokaYau::Violation ? 1 : 0;
  return o;
}

Outcome arrangement_certify(const Config& c) {
  auto [a, b] = load_arrangement(c);
  const OrbifoldStructure orb = load_orbifold(c, std::move(a), b);
  const Certificate cert = cporbi_certify(orb);
  Outcome o;
  o.report = certificate_to_json(cert);
  o.code = verdict_code(cert);
  return o;
}

Outcome arrangement_kummer(const Config& c) {
  auto [a, b] = load_arrangement(c);
  const KummerReport r = kummer_report(a, c.n, c.c_iso);
  Outcome o;
  o.report["n"] = r.n;
  o.report["degree"] = r.degree.get_str();
  o.report["isoperimetric_constant"] = number(r.isoperimetric_c);
  Json lines = Json::array();
  for (const auto& l : r.lines) {
    lines.push_back({{"line", l.line}, {"beta", l.beta.get_str()}, {"n_beta", l.n_beta.get_str()},
                     {"angle_status", std::string(to_string(l.status))}});
  }
  o.report["lines"] = lines;
  Json pts = Json::array();
  for (const auto& p : r.points) {
    pts.push_back({{"lines", p.lines},
                   {"degree", p.degree},
                   {"fiber_length", number(p.fiber_length)},
                   {"threshold", number(p.threshold)},
                   {"fiber_ok", p.fiber_ok},
                   {"alpha_min", number(p.alpha_min)},
                   {"noncat", p.noncat}});
  }
  o.report["triple_points"] = pts;
  o.report["angle_threshold"] = r.angle_threshold.get_str();
  o.report["fiber_threshold"] = r.fiber_threshold;
  o.report["safe_n"] = r.safe_n.get_str();
  o.report["verdict"] = std::string(to_string(r.verdict));
  o.code = r.verdict == KummerVerdict::NotCat ? 1 : 0;
  return o;
}

Outcome family_member(const Config& c) {
  const ConeSurface s = load_surface(c);
  const ConeSurface m = comparison_member(s, c.kappa2);
  Outcome o;
  o.report = surface_summary(m);
  if (!c.kappa_grid.empty()) {
    const auto r = angle_monotonicity_report(s, c.vertex, angle_list(c.kappa_grid, 0));
    Json rows = Json::array();
    for (const auto& [k, a] : r.rows) rows.push_back({number(k), number(a)});
    o.report["monotonicity"] = {{"vertex", r.vertex}, {"rows", rows}, {"trend", std::string(to_string(r.trend))}};
  }
  return o;
}

Outcome family_lipschitz(const Config& c) {
  check_density(c.sampling, kMaxSampling, "--sampling");
  Outcome o;
  LipschitzEstimate e;
  if (!c.sides.empty() || !c.angles.empty()) {
    e = incenter_bilipschitz(load_triangle(c), c.kappa2, c.sampling, c.serial ? Exec::Serial : Exec::Parallel);
  } else {
    e = surface_bilipschitz(load_surface(c), c.kappa2, c.sampling, c.serial ? Exec::Serial : Exec::Parallel);
  }
  o.report["constant"] = number(e.constant);
  o.report["kappa2"] = number(e.kappa2);
  o.report["sampling"] = e.sampling;
  if (e.triangle >= 0) o.report["triangle"] = e.triangle;
  return o;
}

Outcome family_isoperimetric(const Config& c) {
  Outcome o;
  o.report["c_max"] = number(c.c_max);
  o.report["C"] = number(isoperimetric_constant(c.c_max));
  o.report["note"] = "valid once the flat member is locally CAT(0) after the intended cover";
  return o;
}

}  // namespace

ParsedAngle parse_angle(const std::string& raw) {
  std::string t;
  for (char ch : raw) {
    if (ch != ' ' && ch != '*') t += ch;
  }
  static const std::regex pi_form(R"(^(-?)(\d+(?:\.\d+)?)?pi(?:/(\d+(?:\.\d+)?))?$)");
  static const std::regex decimal(R"(^-?\d+(?:\.(\d*))?(?:[eE][-+]?\d+)?$)");
  std::smatch m;
  if (std::regex_match(t, m, pi_form)) {
    double v = kPi;
    if (m[2].matched) v *= std::stod(m[2].str());
    if (m[3].matched) v /= std::stod(m[3].str());
    if (m[1].length() > 0) v = -v;
    return {v, kTol};
  }
  if (std::regex_match(t, m, decimal)) {
    const bool has_exp = t.find_first_of("eE") != std::string::npos;
    double tol = kTol;
    if (!has_exp) tol = std::max(kTol, 0.5 * std::pow(10.0, -static_cast<double>(m[1].length())));
    return {std::stod(t), tol};
  }
  throw UsageError("cannot read angle or number '" + raw + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Metric geometry of cone surfaces, PK cones and line arrangements", "conecat"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "text | json | svg")->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_flag("--serial", c.serial, "run searches on one thread");

  auto surface_src = [&](CLI::App* s) {
    s->add_option("--file", c.file, "surface JSON file");
    s->add_option("--builtin", c.builtin, "round4 | octant-double | octa-cover | a1_7-double | a3_0_3-double | flat-torus");
    s->add_option("--double-angles", c.double_angles, "double of the kappa triangle with these angles");
    s->add_option("--kappa", c.kappa, "curvature for --double-angles");
  };
  auto search_opts = [&](CLI::App* s) {
    s->add_option("--bound", c.bound, "length bound (default 2pi/sqrt(kappa))");
    s->add_option("--edge-samples", c.edge_samples, "points per edge (max 256)");
    s->add_option("--angle-samples", c.angle_samples, "directions per point (max 256)");
    s->add_option("--vertex-dirs", c.vertex_dirs, "directions per cone point (max 256)");
  };
  auto triangle_src = [&](CLI::App* s) {
    s->add_option("--kappa", c.kappa, "curvature");
    s->add_option("--sides", c.sides, "a,b,c");
    s->add_option("--angles", c.angles, "A,B,C (kappa > 0), e.g. pi/2,pi/2,pi/2");
  };
  auto arrangement_src = [&](CLI::App* s) {
    s->add_option("--name", c.name, "A1_6 | A1_7 | A3_0_3");
    s->add_option("--file", c.file, "arrangement JSON file");
  };

  auto* trig = app.add_subcommand("trig", "model-space trigonometry")->require_subcommand(1);
  auto* trig_solve_cmd = trig->add_subcommand("solve", "angles, area and largeness of a triangle");
  triangle_src(trig_solve_cmd);
  auto* trig_compare_cmd = trig->add_subcommand("compare", "comparison triangle at another curvature");
  triangle_src(trig_compare_cmd);
  trig_compare_cmd->add_option("--kappa2", c.kappa2, "comparison curvature")->required();

  auto* surface = app.add_subcommand("surface", "cone surfaces")->require_subcommand(1);
  auto* s_build = surface->add_subcommand("build", "validate a surface and list its vertices");
  surface_src(s_build);
  s_build->add_option("--save", c.save, "write the surface description as JSON");
  auto* s_geo = surface->add_subcommand("geodesics", "search for closed geodesics and vertex loops");
  surface_src(s_geo);
  search_opts(s_geo);
  s_geo->add_option("--limit", c.limit, "geodesics listed");
  auto* s_cert = surface->add_subcommand("certify", "global CAT(kappa) verdict");
  surface_src(s_cert);
  search_opts(s_cert);
  auto* s_cover = surface->add_subcommand("cover", "triangle-group cover (--mult) or pi/4 covering radius");
  surface_src(s_cover);
  s_cover->add_option("--mult", c.mult, "p,q,r for the triangle-group cover");
  s_cover->add_option("--sides", c.sides, "tile sides");
  s_cover->add_option("--angles", c.angles, "tile angles");
  s_cover->add_option("--density", c.density, "grid subdivisions per side (max 200)");
  s_cover->add_option("--save", c.save, "write the cover as JSON");

  auto* cone = app.add_subcommand("cone", "regular PK cones through their quotient spheres")->require_subcommand(1);
  auto* c_fiber = cone->add_subcommand("fiber", "fiber length of the quotient");
  surface_src(c_fiber);
  auto* c_hol = cone->add_subcommand("holonomy", "holonomy congruence for a disk region");
  surface_src(c_hol);
  c_hol->add_option("--area", c.area, "area of the region")->required();
  c_hol->add_option("--interior", c.interior, "cone angles inside");
  c_hol->add_option("--boundary", c.boundary, "inner:outer sector angles of boundary cone points");
  auto* c_verdict = cone->add_subcommand("verdict", "CAT(0) verdict for the cone");
  surface_src(c_verdict);
  search_opts(c_verdict);
  auto* c_noncat = cone->add_subcommand("noncat", "alpha_min * floor(n/2) >= pi");
  c_noncat->add_option("--alpha-min", c.alpha_min, "minimal conical angle")->required();
  c_noncat->add_option("--n", c.n, "cover order")->required();
  auto* c_hemi = cone->add_subcommand("hemisphere", "are the points outside every open hemisphere?");
  c_hemi->add_option("--points", c.points, "x,y,z;x,y,z;...")->required();

  auto* arr = app.add_subcommand("arrangement", "line arrangements and orbifold structures")->require_subcommand(1);
  auto* a_inc = arr->add_subcommand("incidence", "multiple points");
  arrangement_src(a_inc);
  auto* a_chern = arr->add_subcommand("chern", "orbifold Chern numbers and Miyaoka-Yau verdict");
  arrangement_src(a_chern);
  a_chern->add_option("--b", c.b_list, "multiplicity for all lines, or one per line");
  auto* a_cert = arr->add_subcommand("certify", "CAT certificate of the orbifold cover");
  arrangement_src(a_cert);
  a_cert->add_option("--b", c.b_list, "multiplicity for all lines, or one per line");
  auto* a_kum = arr->add_subcommand("kummer", "Kummer cover thresholds");
  arrangement_src(a_kum);
  a_kum->add_option("--n", c.n, "cover order")->required();
  a_kum->add_option("--C", c.c_iso, "isoperimetric constant (default 1/(4pi))");

  auto* fam = app.add_subcommand("family", "comparison family between kappa 0 and 4")->require_subcommand(1);
  auto* f_member = fam->add_subcommand("member", "member surface at kappa2");
  surface_src(f_member);
  f_member->add_option("--kappa2", c.kappa2, "member curvature")->required();
  f_member->add_option("--kappa-grid", c.kappa_grid, "kappa values for a cone-angle table");
  f_member->add_option("--vertex", c.vertex, "vertex for the table");
  auto* f_lip = fam->add_subcommand("lipschitz", "incenter bi-Lipschitz constant");
  surface_src(f_lip);
  f_lip->add_option("--sides", c.sides, "kappa=4 triangle sides");
  f_lip->add_option("--angles", c.angles, "kappa=4 triangle angles");
  f_lip->add_option("--kappa2", c.kappa2, "target curvature")->required();
  f_lip->add_option("--sampling", c.sampling, "grid size (max 1024)");
  auto* f_iso = fam->add_subcommand("isoperimetric", "isoperimetric constant from c_max");
  f_iso->add_option("--c-max", c.c_max, "bi-Lipschitz constant")->required();

  std::vector<std::string> argv_store{"conecat"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "conecat: " << e.what() << "\n";
    return 2;
  }

  try {
    Outcome o;
    if (trig_solve_cmd->parsed()) o = trig_solve(c);
    else if (trig_compare_cmd->parsed()) o = trig_compare(c);
    else if (s_build->parsed()) o = surface_build(c);
    else if (s_geo->parsed()) o = surface_geodesics(c);
    else if (s_cert->parsed()) o = surface_certify(c);
    else if (s_cover->parsed()) o = surface_cover(c);
    else if (c_fiber->parsed()) o = cone_fiber(c);
    else if (c_hol->parsed()) o = cone_holonomy(c);
    else if (c_verdict->parsed()) o = cone_verdict(c);
    else if (c_noncat->parsed()) o = cone_noncat(c);
    else if (c_hemi->parsed()) o = cone_hemisphere(c);
    else if (a_inc->parsed()) o = arrangement_incidence(c);
    else if (a_chern->parsed()) o = arrangement_chern(c);
    else if (a_cert->parsed()) o = arrangement_certify(c);
    else if (a_kum->parsed()) o = arrangement_kummer(c);
    else if (f_member->parsed()) o = family_member(c);
    else if (f_lip->parsed()) o = family_lipschitz(c);
    else if (f_iso->parsed()) o = family_isoperimetric(c);
    else throw UsageError("no command");

    if (c.format == "svg") {
      if (!o.svg) throw UsageError("this command has no SVG rendering");
      out << *o.svg;
    } else if (c.format == "json") {
      out << o.report.dump(2) << "\n";
    } else {
      render_text(o.report, out, 0);
    }
    return o.code;
  } catch (const UsageError& e) {
    err << "conecat: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "conecat: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace conecat::cli
