#include "jetsym/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace jetsym {
namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw SchemaError("bad JSON: " + what);
}

Json poly_coeffs(const AlphaPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

AlphaPoly poly_from(const Json& j) {
  require(j.is_array(), "polynomial must be an array");
  std::vector<BigRational> coeffs;
  for (const auto& c : j) {
    require(c.is_string(), "coefficients are strings");
    try {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }
  return AlphaPoly(std::move(coeffs));
}

std::size_t index_from(const Json& j, const std::string& what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), what);
  return j.get<std::size_t>();
}

}  // namespace

Json to_json(const RationalFunction& c) {
  Json j;
  j["num"] = poly_coeffs(c.num());
  j["den"] = poly_coeffs(c.den());
  return j;
}

RationalFunction rational_function_from_json(const Json& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"), "coefficient needs num and den");
  AlphaPoly den = poly_from(j.at("den"));
  require(!den.is_zero(), "zero denominator");
  return RationalFunction(poly_from(j.at("num")), std::move(den));
}

Json to_json(const Monomial& m) {
  Json exps = Json::array();
  for (const auto& [g, twice] : m.factors()) {
    Json gen;
    switch (g.kind) {
      case Generator::Kind::X: gen = "x"; break;
      case Generator::Kind::T: gen = "t"; break;
      case Generator::Kind::Jet: gen = Json::array({g.depvar, g.order}); break;
    }
    Json e = twice % 2 == 0 ? Json(twice / 2) : Json(std::to_string(twice) + "/2");
    exps.push_back(Json::array({gen, e}));
  }
  return exps;
}

Monomial monomial_from_json(const Json& j) {
  require(j.is_array(), "exps must be an array");
  Monomial m;
  for (const auto& f : j) {
    require(f.is_array() && f.size() == 2, "factor is [gen, exp]");
    const Json& gen = f[0];
    Generator g;
    if (gen == "x") g = Generator::x();
    else if (gen == "t") g = Generator::t();
    else {
      require(gen.is_array() && gen.size() == 2, "jet generator is [depvar, order]");
      g = Generator::jet(index_from(gen[0], "depvar index"), index_from(gen[1], "jet order"));
    }
    int twice = 0;
    if (f[1].is_number_integer()) {
      twice = 2 * f[1].get<int>();
    } else {
      require(f[1].is_string(), "exponent is an integer or \"k/2\"");
      const std::string s = f[1].get<std::string>();
      require(s.size() > 2 && s.substr(s.size() - 2) == "/2", "half-integer exponent has the form k/2");
      try {
        twice = std::stoi(s.substr(0, s.size() - 2));
      } catch (const std::exception&) {
        throw SchemaError("bad JSON: exponent " + s);
      }
    }
    require(twice != 0, "zero exponent");
    m = m.times(g, twice);
  }
  return m;
}

Json to_json(const DiffPoly& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["exps"] = to_json(m);
    t["coeff"] = to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

DiffPoly diffpoly_from_json(const Json& j) {
  require(j.is_array(), "polynomial must be an array of terms");
  std::vector<DiffPoly::Term> terms;
  for (const auto& t : j) {
    require(t.is_object() && t.contains("exps") && t.contains("coeff"), "term needs exps and coeff");
    terms.emplace_back(monomial_from_json(t.at("exps")), rational_function_from_json(t.at("coeff")));
  }
  return DiffPoly::from_terms(std::move(terms));
}

Json to_json(const EvoField& k) {
  Json out = Json::array();
  for (const auto& c : k.components) out.push_back(to_json(c));
  return out;
}

EvoField evofield_from_json(const Json& j) {
  require(j.is_array(), "field must be an array of components");
  std::vector<DiffPoly> comps;
  for (const auto& c : j) comps.push_back(diffpoly_from_json(c));
  return EvoField(std::move(comps));
}

Json to_json(const EvolutionSystem& s) {
  Json j;
  j["name"] = s.name;
  j["parameter"] = s.parameter ? Json(*s.parameter) : Json(nullptr);
  j["depvars"] = s.names.depvars;
  j["rhs"] = to_json(s.rhs);
  return j;
}

EvolutionSystem system_from_json(const Json& j) {
  require(j.is_object() && j.contains("name") && j.contains("depvars") && j.contains("rhs"), "system fields");
  EvolutionSystem s;
  s.name = j.at("name").get<std::string>();
  s.names.depvars = j.at("depvars").get<std::vector<std::string>>();
  if (j.contains("parameter") && !j.at("parameter").is_null()) {
    s.parameter = j.at("parameter").get<std::string>();
    s.names.param = *s.parameter;
  }
  s.rhs = evofield_from_json(j.at("rhs"));
  require(s.rhs.size() == s.names.depvars.size(), "one right-hand side per dependent variable");
  return s;
}

Json to_json(const Hierarchy& h) {
  Json j;
  j["system"] = h.system.name;
  j["parameter"] = h.parameter;
  j["depvars"] = h.system.names.depvars;
  j["specialization"] = h.specialization ? Json(h.specialization->get_str()) : Json(nullptr);
  j["rhs"] = to_json(h.system.rhs);
  Json members = Json::array();
  for (const auto& k : h.members) members.push_back(to_json(k));
  j["members"] = std::move(members);
  Json certs = Json::array();
  for (const auto& c : h.certificates) certs.push_back(to_json(c));
  j["certificates"] = std::move(certs);
  j["provenance"] = h.provenance;
  Json b = Json::array();
  for (const auto& x : h.b) b.push_back(to_json(x));
  j["b"] = std::move(b);
  return j;
}

Hierarchy hierarchy_from_json(const Json& j) {
  require(j.is_object(), "hierarchy must be an object");
  for (const char* key : {"system", "parameter", "depvars", "rhs", "members"})
    require(j.contains(key), std::string("hierarchy missing \"") + key + "\"");
  try {
    Hierarchy h;
    h.system.name = j.at("system").get<std::string>();
    h.parameter = j.at("parameter").get<std::string>();
    h.system.parameter = h.parameter;
    h.system.names.depvars = j.at("depvars").get<std::vector<std::string>>();
    h.system.names.param = h.parameter;
    h.system.rhs = evofield_from_json(j.at("rhs"));
    if (j.contains("specialization") && !j.at("specialization").is_null())
      h.specialization = parse_rational(j.at("specialization").get<std::string>());
    for (const auto& m : j.at("members")) {
      h.members.push_back(evofield_from_json(m));
      require(h.members.back().size() == h.system.names.depvars.size(), "member component count");
    }
    if (j.contains("certificates"))
      for (const auto& c : j.at("certificates")) h.certificates.push_back(diffpoly_from_json(c));
    if (j.contains("provenance")) h.provenance = j.at("provenance").get<std::vector<std::string>>();
    if (j.contains("b"))
      for (const auto& x : j.at("b")) h.b.push_back(rational_function_from_json(x));
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bad JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad JSON: ") + e.what());
  }
}

Json to_json(const ExactnessCertificate& c) {
  Json j;
  j["antiderivative"] = to_json(c.antiderivative);
  j["remainder"] = to_json(c.remainder);
  return j;
}

Json to_json(const DensityReport& r, const VarNames& names) {
  Json j;
  j["unknowns"] = r.unknowns;
  j["equations"] = r.equations;
  j["nullspace_dimension"] = r.nullspace_dimension;
  j["nontrivial_dimension"] = r.nontrivial_basis.size();
  Json basis = Json::array();
  for (std::size_t i = 0; i < r.nontrivial_basis.size(); ++i) {
    Json b;
    b["text"] = r.nontrivial_basis[i].to_string(names);
    b["density"] = to_json(r.nontrivial_basis[i]);
    b["trivial_part"] = to_json(r.trivial_parts[i].antiderivative);
    basis.push_back(std::move(b));
  }
  j["nontrivial_basis"] = std::move(basis);
  return j;
}

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

Json to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.defect) j["defect"] = to_json(*c.defect);
    checks.push_back(std::move(j));
  }
  Json out;
  out["checks"] = std::move(checks);
  out["passed"] = r.passed();
  return out;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << (r.passed() ? "all checks passed" : "some checks failed") << "\n";
  return os.str();
}

}  // namespace jetsym
