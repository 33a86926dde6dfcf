#pragma once

// Canonical JSON for coefficients, polynomials, hierarchies and reports.
// Output is byte-stable: every container is emitted in canonical order.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "jetsym/analysis.hpp"
#include "jetsym/hierarchy.hpp"

namespace jetsym {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const RationalFunction& c);
RationalFunction rational_function_from_json(const Json& j);

Json to_json(const Monomial& m);
Monomial monomial_from_json(const Json& j);

Json to_json(const DiffPoly& f);
DiffPoly diffpoly_from_json(const Json& j);

Json to_json(const EvoField& k);
EvoField evofield_from_json(const Json& j);

Json to_json(const EvolutionSystem& s);
EvolutionSystem system_from_json(const Json& j);

Json to_json(const Hierarchy& h);
Hierarchy hierarchy_from_json(const Json& j);

Json to_json(const ExactnessCertificate& c);
Json to_json(const DensityReport& r, const VarNames& names);

/// One line of a verification report.
struct CheckRecord {
  std::string name;
  bool passed = false;
  std::string detail;
  std::optional<EvoField> defect;
};

struct CheckReport {
  std::vector<CheckRecord> checks;
  bool passed() const;
};

Json to_json(const CheckReport& r);
/// "PASS name" / "FAIL name: detail", one per line.
std::string to_text(const CheckReport& r);

}  // namespace jetsym
