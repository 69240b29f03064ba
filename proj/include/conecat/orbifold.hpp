#pragma once

#include "conecat/arrangement.hpp"
#include "conecat/certificate.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace conecat {

/// Orbifold structure on ℂP² along an arrangement: local group ℤ_{b_i} at
/// generic points of line i.
struct OrbifoldStructure {
  Arrangement arrangement;
  std::vector<int> b;
};

/// Validates b_i ≥ 2 and one multiplicity per line.
OrbifoldStructure make_orbifold(Arrangement a, std::vector<int> b);

/// Every multiple point is at most triple, and every triple point has
/// 1/b_j + 1/b_k + 1/b_l > 1.
Certificate orbifold_admissible(const OrbifoldStructure& o);

struct LocalGroup {
  mpq_class order;
  std::string label;  // Shephard–Todd name when one applies
};

/// 4·(1/b_j + 1/b_k + 1/b_l − 1)^{-2}; throws NotSpherical when the sum is ≤ 1.
LocalGroup local_group_order(int bj, int bk, int bl);

enum class MiyaokaYau { BallQuotientEquality, StrictInequality, Violation };

std::string_view to_string(MiyaokaYau v);

/// Exact comparison of c₁² with 3e.
MiyaokaYau miyaoka_yau_verdict(const mpq_class& c1_sq, const mpq_class& euler_e);

struct ChernReport {
  mpq_class c1_sq;
  mpq_class euler_e;
  MiyaokaYau verdict = MiyaokaYau::StrictInequality;
};

/// Orbifold Chern numbers of (ℂP², D, b) for a line arrangement. Double points
/// carry the abelian local group of order b_i·b_j. Throws NotAdmissible.
ChernReport chern_numbers(const OrbifoldStructure& o);

/// Per-line cone-angle check, double points as products of 2-cones, and for
/// every triple point the large-triangle certificate of the triangle-group
/// cover of its quotient sphere. Only for the named arrangements.
Certificate cporbi_certify(const OrbifoldStructure& o);

enum class ThresholdStatus { Above, Boundary, Below };

std::string_view to_string(ThresholdStatus s);

struct KummerLineRow {
  int line = 0;
  mpq_class beta;
  mpq_class n_beta;           // cover conical angle is 2π·n·β
  ThresholdStatus status = ThresholdStatus::Below;  // n·β against 1
};

struct KummerPointRow {
  std::vector<int> lines;
  double base_fiber_length = 0.0;  // π(Σβ − 1)
  long degree = 0;                 // n², the local Kummer degree at a triple point
  double fiber_length = 0.0;
  double threshold = 0.0;          // 2π + 8π²C
  bool fiber_ok = false;
  double alpha_min = 0.0;          // 2π·min β
  bool noncat = false;
};

enum class KummerVerdict { NotCat, SafeThresholdMet, BelowThreshold };

std::string_view to_string(KummerVerdict v);

struct KummerReport {
  int n = 0;
  mpz_class degree;                // n^{k−1}
  std::vector<KummerLineRow> lines;
  std::vector<KummerPointRow> points;
  mpq_class angle_threshold;       // max 1/β_j
  long fiber_threshold = 0;        // least n with every fiber condition met
  mpq_class safe_n;                // max of the two thresholds
  double isoperimetric_c = 0.0;
  KummerVerdict verdict = KummerVerdict::BelowThreshold;
};

KummerReport kummer_report(const Arrangement& a, int n, double isoperimetric_c);

}  // namespace conecat
