#include "conecat/certificate.hpp"

#include "conecat/error.hpp"

namespace conecat {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::CatConfirmed: return "CAT_CONFIRMED";
    case Verdict::NotCat: return "NOT_CAT";
    case Verdict::Undetermined: return "UNDETERMINED";
  }
  return "UNDETERMINED";
}

Certificate Certificate::confirmed(std::string criterion, std::string subject) {
  Certificate c;
  c.verdict = Verdict::CatConfirmed;
  c.criterion = std::move(criterion);
  c.subject = std::move(subject);
  return c;
}

Certificate Certificate::not_cat(std::string criterion, Witness witness, std::string subject) {
  if (witness.kind.empty()) throw Error(ErrorCode::InvalidInput, "NOT_CAT certificate needs a witness");
  Certificate c;
  c.verdict = Verdict::NotCat;
  c.criterion = std::move(criterion);
  c.subject = std::move(subject);
  c.witnesses.push_back(std::move(witness));
  return c;
}

Certificate Certificate::undetermined(std::string criterion, std::string subject) {
  Certificate c;
  c.verdict = Verdict::Undetermined;
  c.criterion = std::move(criterion);
  c.subject = std::move(subject);
  return c;
}

Certificate& Certificate::margin(std::string name, double value) {
  margins.emplace_back(std::move(name), value);
  return *this;
}

Certificate& Certificate::note(std::string text) {
  notes.push_back(std::move(text));
  return *this;
}

}  // namespace conecat
