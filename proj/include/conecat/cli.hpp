#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace conecat::cli {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 when a verdict or report was produced, 1 on NOT_CAT or a
/// Miyaoka–Yau violation, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses an angle such as "pi/2", "2pi/3", "2*pi/3", "pi" or "1.5708".
/// For plain decimals the returned tolerance is half a unit in the last typed
/// digit (never below 1e-9); expressions in pi get 1e-9.
struct ParsedAngle {
  double value = 0.0;
  double tolerance = 1e-9;
};
ParsedAngle parse_angle(const std::string& text);

}  // namespace conecat::cli
