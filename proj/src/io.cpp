#include "conecat/io.hpp"

#include "conecat/error.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace conecat {

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed input: ") + e.what());
  }
}

mpq_class rational_of(const Json& v) {
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "expected an integer or a rational string");
}

Json values_json(const std::vector<std::pair<std::string, double>>& values) {
  Json out = Json::object();
  for (const auto& [k, v] : values) out[k] = std::isfinite(v) ? Json(round12(v)) : Json(v > 0 ? "inf" : "-inf");
  return out;
}

}  // namespace

SurfaceDescription surface_from_json(const Json& j) {
  return guarded([&] {
    SurfaceDescription d;
    d.kappa = j.at("kappa").get<double>();
    for (const auto& t : j.at("triangles")) {
      const auto& s = t.is_object() ? t.at("sides") : t;
      if (s.size() != 3) throw Error(ErrorCode::InvalidInput, "a triangle has three sides");
      d.triangles.push_back({s[0].get<double>(), s[1].get<double>(), s[2].get<double>()});
    }
    for (const auto& g : j.at("gluing")) {
      if (g.size() != 2 || g[0].size() != 2 || g[1].size() != 2) {
        throw Error(ErrorCode::InvalidInput, "gluing entries are [[tri,edge],[tri,edge]]");
      }
      d.gluing.push_back({{g[0][0].get<int>(), g[0][1].get<int>()}, {g[1][0].get<int>(), g[1][1].get<int>()}});
    }
    return d;
  });
}

Json surface_to_json(const SurfaceDescription& d) {
  Json j;
  j["kappa"] = d.kappa;
  j["triangles"] = Json::array();
  for (const auto& t : d.triangles) j["triangles"].push_back({{"sides", {t[0], t[1], t[2]}}});
  j["gluing"] = Json::array();
  for (const auto& [a, b] : d.gluing) j["gluing"].push_back({{a.tri, a.edge}, {b.tri, b.edge}});
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return guarded([&] { return Json::parse(ss.str()); });
}

SurfaceDescription read_surface_file(const std::string& path) { return surface_from_json(read_json_file(path)); }

ArrangementInput arrangement_from_json(const Json& j) {
  return guarded([&] {
    ArrangementInput in;
    if (j.contains("name")) in.arrangement.name = j.at("name").get<std::string>();
    std::vector<int> b;
    bool has_b = true;
    for (const auto& l : j.at("lines")) {
      const auto& c = l.at("coeffs");
      if (c.size() != 3) throw Error(ErrorCode::InvalidInput, "a line has three coefficients");
      ProjVec v;
      for (std::size_t k = 0; k < 3; ++k) {
        if (c[k].is_array()) {
          if (c[k].size() != 2) throw Error(ErrorCode::InvalidInput, "coefficients are [p, q] for p + q*w");
          v[k] = CycloRational(rational_of(c[k][0]), rational_of(c[k][1]));
        } else {
          v[k] = CycloRational(rational_of(c[k]));
        }
      }
      const mpq_class beta = l.contains("beta") ? rational_of(l.at("beta")) : mpq_class(1, 2);
      in.arrangement.lines.push_back(make_line(v, beta, l.value("label", std::string())));
      if (l.contains("b")) {
        b.push_back(l.at("b").get<int>());
      } else {
        has_b = false;
      }
    }
    if (has_b && !b.empty()) in.b = std::move(b);
    return in;
  });
}

Json arrangement_to_json(const Arrangement& a, const std::vector<int>* b) {
  Json j;
  if (!a.name.empty()) j["name"] = a.name;
  j["lines"] = Json::array();
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    const Line& l = a.lines[i];
    Json coeffs = Json::array();
    for (const auto& c : l.coeffs) coeffs.push_back({c.a().get_str(), c.b().get_str()});
    Json line{{"coeffs", coeffs}, {"beta", l.beta.get_str()}};
    if (!l.label.empty()) line["label"] = l.label;
    if (b) line["b"] = (*b)[i];
    j["lines"].push_back(line);
  }
  return j;
}

ArrangementInput read_arrangement_file(const std::string& path) { return arrangement_from_json(read_json_file(path)); }

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["criterion"] = c.criterion;
  if (!c.subject.empty()) j["subject"] = c.subject;
  j["margins"] = values_json(c.margins);
  j["witnesses"] = Json::array();
  for (const auto& w : c.witnesses) {
    j["witnesses"].push_back({{"kind", w.kind}, {"detail", w.detail}, {"values", values_json(w.values)}});
  }
  if (!c.notes.empty()) j["notes"] = c.notes;
  if (!c.parts.empty()) {
    j["parts"] = Json::array();
    for (const auto& p : c.parts) j["parts"].push_back(certificate_to_json(p));
  }
  return j;
}

}  // namespace conecat
