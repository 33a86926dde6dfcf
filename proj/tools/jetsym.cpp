// jetsym: command-line driver.
// Exit codes: 0 ok, 1 usage/parse, 2 nonlocal obstruction, 3 failed check, 4 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jetsym/analysis.hpp"
#include "jetsym/parser.hpp"
#include "jetsym/serialize.hpp"
#include "jetsym/verify.hpp"

using namespace jetsym;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNonlocal = 2, kCheckFailed = 3, kResourceCap = 4 };

struct Options {
  std::string system = "fs";
  std::string file;
  std::string out;
  std::string alpha;
  std::string hierarchy_file;
  std::size_t n = 0;
  std::size_t max_order = 2;
  std::size_t max_degree = 6;
  unsigned threads = 0;
  bool json = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Emits a diagnostic on stderr and returns its exit code.
int diagnose(const Options& o, int code, const std::string& kind, const std::string& message, Json extra = {}) {
  if (o.json) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    if (!extra.is_null())
      for (auto& [k, v] : extra.items()) j[k] = v;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "jetsym: " << kind << ": " << message << "\n";
  }
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw UsageError("cannot write " + o.out);
  out << text;
}

std::optional<BigRational> parameter_value(const Options& o) {
  if (o.alpha.empty()) return std::nullopt;
  try {
    return parse_rational(o.alpha);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--alpha: ") + e.what());
  }
}

EvolutionSystem load_system(const Options& o) {
  if (!o.file.empty()) return parse_system(read_file(o.file));
  auto s = systems::builtin(o.system);
  if (!s) throw UsageError("unknown system '" + o.system + "' (built-ins: fs, ts, ts1)");
  return *s;
}

// Only fs and ts1 have generators; a file must reproduce one of them exactly.
std::string hierarchy_kind(const Options& o) {
  EvolutionSystem s = load_system(o);
  for (const char* name : {"fs", "ts1"}) {
    EvolutionSystem b = *systems::builtin(name);
    if (s.name == name && s.rhs == b.rhs && s.names == b.names) return name;
  }
  throw UsageError("no hierarchy generator for system '" + s.name + "' (fs and ts1 only)");
}

Hierarchy generate(const Options& o) {
  auto at = parameter_value(o);
  const std::string kind = hierarchy_kind(o);
  if (kind == "fs" && at) fs_seed(at);  // a pole is reported before anything else
  if (o.n < 1) throw UsageError("--n must be at least 1");
  return kind == "fs" ? fs_hierarchy(o.n, at) : ts1_hierarchy(o.n, at);
}

std::string render_hierarchy(const Hierarchy& h) {
  std::ostringstream os;
  const char* label = h.system.name == "fs" ? "K" : "G";
  for (std::size_t n = 1; n <= h.size(); ++n)
    for (std::size_t d = 0; d < h.member(n).size(); ++d)
      os << label << "_" << n << "[" << h.system.names.depvars[d] << "] = " << h.member(n)[d].to_string(h.system.names)
         << "\n";
  return os.str();
}

int cmd_gen(const Options& o) {
  Hierarchy h = generate(o);
  write_output(o, to_json(h).dump(1) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  Hierarchy h;
  try {
    h = hierarchy_from_json(Json::parse(read_file(o.hierarchy_file)));
  } catch (const Json::parse_error& e) {
    throw UsageError(o.hierarchy_file + ": " + e.what());
  }
  CheckReport report = verify_hierarchy(h, o.threads);
  write_output(o, o.json ? to_json(report).dump(1) + "\n" : to_text(report));
  if (!report.passed()) {
    for (const auto& c : report.checks)
      if (!c.passed) diagnose(o, 0, "check failed", c.name + (c.detail.empty() ? "" : ": " + c.detail));
    return kCheckFailed;
  }
  return kOk;
}

int cmd_commute(const Options& o) {
  Hierarchy h = generate(o);
  CommutatorTable t = commutativity_table(h, o.threads);
  std::ostringstream os;
  if (o.json) {
    Json j;
    j["n"] = t.n;
    j["zero"] = t.zero;
    Json nz = Json::array();
    for (const auto& [ij, f] : t.nonzero) nz.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"bracket", to_json(f)}});
    j["nonzero"] = nz;
    j["all_zero"] = t.all_zero();
    os << j.dump(1) << "\n";
  } else {
    for (std::size_t i = 0; i < t.n; ++i) {
      for (std::size_t k = 0; k < t.n; ++k) os << (t.zero[i][k] ? " 0" : " *");
      os << "\n";
    }
    os << (t.all_zero() ? "all brackets vanish" : "nonzero brackets present") << "\n";
  }
  write_output(o, os.str());
  return t.all_zero() ? kOk : kCheckFailed;
}

int cmd_densities(const Options& o) {
  EvolutionSystem s = load_system(o);
  if (auto at = parameter_value(o)) {
    if (!s.parameter) throw UsageError("system '" + s.name + "' has no parameter");
    s = specialize(s, *at);
  }
  DensityAnsatz ansatz;
  ansatz.max_order = o.max_order;
  ansatz.max_degree = o.max_degree;
  DensityReport r = density_search(s, ansatz);
  std::ostringstream os;
  if (o.json) {
    Json j = to_json(r, s.names);
    j["system"] = s.name;
    j["max_order"] = o.max_order;
    j["max_degree"] = o.max_degree;
    j["specialization"] = o.alpha.empty() ? Json(nullptr) : Json(parameter_value(o)->get_str());
    os << j.dump(1) << "\n";
  } else {
    os << "unknowns " << r.unknowns << ", equations " << r.equations << ", conserved " << r.nullspace_dimension
       << ", nontrivial " << r.nontrivial_basis.size() << "\n";
    for (const auto& b : r.nontrivial_basis) os << "  " << b.to_string(s.names) << "\n";
  }
  write_output(o, os.str());
  return kOk;
}

int cmd_subst_check(const Options& o) {
  SubstitutionOptions so;
  so.alpha = parameter_value(o);
  SubstitutionResult r = substitution_check(so);
  CheckReport report;
  report.checks.push_back({"substitution maps ts into fs", r.ok, r.ok ? "" : "nonzero defect",
                           r.ok ? std::nullopt : std::optional<EvoField>(r.defect)});
  write_output(o, o.json ? to_json(report).dump(1) + "\n" : to_text(report));
  return r.ok ? kOk : kCheckFailed;
}

int cmd_render(const Options& o) {
  if (o.n > 0) {
    write_output(o, render_hierarchy(generate(o)));
    return kOk;
  }
  EvolutionSystem s = load_system(o);
  std::string text;
  if (auto at = parameter_value(o)) {
    // the a <-> alpha link, for comparing fs/ts runs with ts1 runs
    if (s.parameter == std::optional<std::string>("alpha") && 2 * *at != 1)
      text += "# a = 1/(1 - 2 alpha) = " + to_string(BigRational(1 / (1 - 2 * *at))) + "\n";
    s = specialize(s, *at);
  }
  text += render_system(s);
  write_output(o, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jetsym: symmetries and conserved densities of evolution systems"};
  app.require_subcommand(1);
  Options o;

  auto source = [&](CLI::App* c) {
    auto* sys = c->add_option("--system", o.system, "built-in system: fs, ts, ts1")->capture_default_str();
    auto* file = c->add_option("--file", o.file, "system definition file");
    sys->excludes(file);
  };
  auto common = [&](CLI::App* c) {
    c->add_option("--out", o.out, "write output here instead of stdout");
    c->add_flag("--json", o.json, "machine-readable output and diagnostics");
    c->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };
  auto param = [&](CLI::App* c) { c->add_option("--alpha", o.alpha, "specialize the parameter, e.g. 1/3"); };

  auto* gen = app.add_subcommand("gen", "generate a hierarchy as JSON");
  source(gen), common(gen), param(gen);
  gen->add_option("--n", o.n, "number of members (>= 1)");

  auto* verify = app.add_subcommand("verify", "run the full checklist on a hierarchy file");
  common(verify);
  verify->add_option("hierarchy", o.hierarchy_file, "hierarchy JSON from gen")->required()->check(CLI::ExistingFile);

  auto* commute = app.add_subcommand("commute", "table of brackets [K_i, K_j]");
  source(commute), common(commute), param(commute);
  commute->add_option("--n", o.n, "number of members (>= 1)");

  auto* dens = app.add_subcommand("densities", "bounded search for conserved densities");
  source(dens), common(dens), param(dens);
  dens->add_option("--max-order", o.max_order, "jet order bound")->capture_default_str();
  dens->add_option("--max-degree", o.max_degree, "polynomial degree bound")->capture_default_str();

  auto* subst = app.add_subcommand("subst-check", "check that w = u_x/(4u), z = -v/(2 sqrt u) maps ts into fs");
  common(subst), param(subst);

  auto* render = app.add_subcommand("render", "print a system (or hierarchy members with --n) as text");
  source(render), common(render), param(render);
  render->add_option("--n", o.n, "render members 1..n instead of the system");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*verify) return cmd_verify(o);
    if (*commute) return cmd_commute(o);
    if (*dens) return cmd_densities(o);
    if (*subst) return cmd_subst_check(o);
    if (*render) return cmd_render(o);
  } catch (const UsageError& e) {
    return diagnose(o, kUsage, "usage", e.what());
  } catch (const PoleAtParameter& e) {
    return diagnose(o, kUsage, "pole", e.what(), {{"at", e.at().get_str()}, {"denominator", e.denominator()}});
  } catch (const ParseError& e) {
    return diagnose(o, kUsage, "parse", e.what(), {{"line", e.line()}, {"column", e.column()}, {"expected", e.expected()}});
  } catch (const UnknownIdentifier& e) {
    return diagnose(o, kUsage, "parse", e.what(), {{"line", e.line()}, {"column", e.column()}, {"identifier", e.name()}});
  } catch (const DuplicateEquation& e) {
    return diagnose(o, kUsage, "parse", e.what());
  } catch (const MissingEquation& e) {
    return diagnose(o, kUsage, "parse", e.what());
  } catch (const SchemaError& e) {
    return diagnose(o, kUsage, "schema", e.what());
  } catch (const UnsupportedHierarchy& e) {
    return diagnose(o, kUsage, "usage", e.what());
  } catch (const HierarchyObstruction& e) {
    return diagnose(o, kNonlocal, "nonlocal", e.what(),
                    {{"step", e.step()}, {"row", e.row()}, {"col", e.col()}, {"remainder", to_json(e.remainder())}});
  } catch (const NonlocalObstruction& e) {
    return diagnose(o, kNonlocal, "nonlocal", e.what(), {{"remainder", to_json(e.remainder())}});
  } catch (const AnsatzTooLarge& e) {
    return diagnose(o, kResourceCap, "resource cap", e.what(), {{"unknowns", e.unknowns()}, {"cap", e.cap()}});
  } catch (const std::bad_alloc&) {
    return diagnose(o, kResourceCap, "resource cap", "out of memory");
  } catch (const ExplicitXTDependence& e) {
    return diagnose(o, kUsage, "usage", e.what());
  }
  return kUsage;
}
