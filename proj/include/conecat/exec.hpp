#pragma once

namespace conecat {

// Sampling kernels (closed-geodesic grids, CAT comparison sampling, Lipschitz
// sampling) come in two flavours. Serial is the reference; Parallel runs the
// same per-sample function under OpenMP and must reproduce it exactly.
enum class Exec { Serial, Parallel };

int max_threads();

}  // namespace conecat
