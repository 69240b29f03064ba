#pragma once

#include <gmpxx.h>

#include <string>

namespace conecat {

/// Exact element a + b·ω of ℚ(ω), ω a primitive cube root of unity
/// (ω² + ω + 1 = 0).
class CycloRational {
 public:
  CycloRational() = default;
  CycloRational(long a) : a_(a) {}  // NOLINT: integers embed implicitly
  CycloRational(mpq_class a, mpq_class b = 0);

  static CycloRational omega() { return {0, 1}; }

  const mpq_class& a() const noexcept { return a_; }
  const mpq_class& b() const noexcept { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Galois conjugate ω ↦ ω².
  CycloRational conj() const;
  /// Field norm z·conj(z) = a² − ab + b².
  mpq_class norm() const;
  CycloRational inverse() const;

  friend CycloRational operator+(const CycloRational& x, const CycloRational& y);
  friend CycloRational operator-(const CycloRational& x, const CycloRational& y);
  friend CycloRational operator*(const CycloRational& x, const CycloRational& y);
  friend CycloRational operator/(const CycloRational& x, const CycloRational& y);
  CycloRational operator-() const;
  friend bool operator==(const CycloRational& x, const CycloRational& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  std::string to_string() const;
  /// Value as a complex number, for plotting.
  double real() const;
  double imag() const;

 private:
  mpq_class a_ = 0;
  mpq_class b_ = 0;
};

/// Parses "p/q" or an integer into an exact rational; throws InvalidInput.
mpq_class parse_rational(const std::string& text);

}  // namespace conecat
