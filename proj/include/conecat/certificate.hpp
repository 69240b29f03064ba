#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conecat {

enum class Verdict { CatConfirmed, NotCat, Undetermined };

std::string_view to_string(Verdict v);

/// Concrete evidence attached to a verdict: a short closed geodesic, a small
/// cone angle, a failing triangulation condition, ...
struct Witness {
  std::string kind;
  std::string detail;
  std::vector<std::pair<std::string, double>> values;
};

/// Machine-checkable verdict. NOT_CAT certificates always carry a witness;
/// the named constructors enforce that.
struct Certificate {
  Verdict verdict = Verdict::Undetermined;
  std::string criterion;
  std::string subject;  // fingerprint of the object the verdict is about
  std::vector<std::pair<std::string, double>> margins;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::vector<Certificate> parts;

  static Certificate confirmed(std::string criterion, std::string subject = {});
  static Certificate not_cat(std::string criterion, Witness witness, std::string subject = {});
  static Certificate undetermined(std::string criterion, std::string subject = {});

  bool confirmed_cat() const { return verdict == Verdict::CatConfirmed; }
  Certificate& margin(std::string name, double value);
  Certificate& note(std::string text);
};

}  // namespace conecat
