#pragma once

#include "conecat/arrangement.hpp"
#include "conecat/certificate.hpp"
#include "conecat/cone_surface.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace conecat {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so reports are byte-stable.
double round12(double x);

/// {kappa, triangles: [{sides: [a,b,c]}], gluing: [[[tri,edge],[tri,edge]], ...]}
SurfaceDescription surface_from_json(const Json& j);
Json surface_to_json(const SurfaceDescription& d);
SurfaceDescription read_surface_file(const std::string& path);

/// {name?, lines: [{coeffs: [[p,q],[p,q],[p,q]], beta: "1/2", b?: 2, label?}]}
/// where [p,q] stands for p + q·ω with p, q rational strings or integers.
struct ArrangementInput {
  Arrangement arrangement;
  std::optional<std::vector<int>> b;
};
ArrangementInput arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& a, const std::vector<int>* b = nullptr);
ArrangementInput read_arrangement_file(const std::string& path);

Json certificate_to_json(const Certificate& c);
Json read_json_file(const std::string& path);

}  // namespace conecat
