#include "conecat/cyclo.hpp"

#include "conecat/error.hpp"

#include <cmath>

namespace conecat {

CycloRational::CycloRational(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

CycloRational CycloRational::conj() const { return {a_ - b_, -b_}; }

mpq_class CycloRational::norm() const { return mpq_class(a_ * a_ - a_ * b_ + b_ * b_); }

CycloRational CycloRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero in Q(w)");
  const mpq_class n = norm();
  const CycloRational c = conj();
  return {c.a_ / n, c.b_ / n};
}

CycloRational operator+(const CycloRational& x, const CycloRational& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }

CycloRational operator-(const CycloRational& x, const CycloRational& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }

CycloRational operator*(const CycloRational& x, const CycloRational& y) {
  // ω² = −1 − ω
  const mpq_class bd = x.b_ * y.b_;
  return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
}

CycloRational operator/(const CycloRational& x, const CycloRational& y) { return x * y.inverse(); }

CycloRational CycloRational::operator-() const { return {-a_, -b_}; }

std::string CycloRational::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string coef = b_ == 1 ? "" : b_ == -1 ? "-" : b_.get_str() + "*";
  if (a_ == 0) return coef + "w";
  if (b_ < 0) return a_.get_str() + "-" + (b_ == -1 ? std::string() : mpq_class(-b_).get_str() + "*") + "w";
  return a_.get_str() + "+" + coef + "w";
}

double CycloRational::real() const { return a_.get_d() - 0.5 * b_.get_d(); }

double CycloRational::imag() const { return b_.get_d() * std::sqrt(3.0) / 2.0; }

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::InvalidInput, "not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace conecat
