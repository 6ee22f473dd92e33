#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "superdim/field.hpp"

namespace superdim {

using Json = nlohmann::json;

/// One verified statement.  `reference` names the statement being checked.
struct Clause {
  std::string label;
  std::string reference;
  bool passed = false;
  std::string detail;
};

/// Outcome of a verification run: pass/fail clauses plus recorded values.
struct Report {
  std::string name;
  std::vector<Clause> clauses;
  Json values = Json::object();

  bool passed() const;
  /// Appends a clause and returns `ok`.
  bool check(std::string label, std::string reference, bool ok, std::string detail = {});
  std::vector<Clause> failures() const;
  /// Appends the clauses of another report, prefixing labels.
  void absorb(const Report& other, const std::string& prefix);
};

Json rational_json(const mpq_class& q);
Json scalar_json(const Scalar& s);
Json to_json(const Report& r);

}  // namespace superdim
