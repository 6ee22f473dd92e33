#include "superdim/report.hpp"

namespace superdim {

bool Report::passed() const {
  for (const auto& c : clauses) {
    if (!c.passed) return false;
  }
  return true;
}

bool Report::check(std::string label, std::string reference, bool ok, std::string detail) {
  clauses.push_back({std::move(label), std::move(reference), ok, std::move(detail)});
  return ok;
}

std::vector<Clause> Report::failures() const {
  std::vector<Clause> out;
  for (const auto& c : clauses) {
    if (!c.passed) out.push_back(c);
  }
  return out;
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (auto c : other.clauses) {
    c.label = prefix + c.label;
    clauses.push_back(std::move(c));
  }
}

Json rational_json(const mpq_class& q) {
  Json j = Json::object();
  // Small values stay numeric; large ones fall back to decimal strings.
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    j["num"] = q.get_num().get_si();
    j["den"] = q.get_den().get_si();
  } else {
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
  }
  return j;
}

Json scalar_json(const Scalar& s) { return rational_json(s.value()); }

Json to_json(const Report& r) {
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json j = {{"label", c.label}, {"reference", c.reference}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    clauses.push_back(std::move(j));
  }
  return Json{{"name", r.name}, {"passed", r.passed()}, {"clauses", clauses}, {"values", r.values}};
}

}  // namespace superdim
