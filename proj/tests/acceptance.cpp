// Acceptance runner: one "ACn PASS|FAIL: detail" line per criterion.
// Usage: acceptance [--only ACn]...

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "jetsym/analysis.hpp"
#include "jetsym/parser.hpp"
#include "jetsym/serialize.hpp"
#include "jetsym/verify.hpp"

using namespace jetsym;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const VarNames WZ{{"w", "z"}, "alpha"};
const std::filesystem::path kScratch = std::filesystem::temp_directory_path() / "jetsym_acceptance";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd, std::string* out = nullptr, std::string* err = nullptr) {
  std::filesystem::create_directories(kScratch);
  auto o = kScratch / "stdout", e = kScratch / "stderr";
  int status = std::system((cmd + " > " + o.string() + " 2> " + e.string()).c_str());
  if (out) *out = slurp(o);
  if (err) *err = slurp(e);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string show(const EvoField& k, const VarNames& names = WZ) {
  std::string s;
  for (std::size_t d = 0; d < k.size(); ++d)
    if (!k[d].is_zero()) s += (s.empty() ? "" : "; ") + std::string("[") + std::to_string(d) + "] " + k[d].to_string(names);
  return s.empty() ? "0" : s;
}

RationalFunction lin(long c0, long c1) {
  return RationalFunction(AlphaPoly(std::vector<BigRational>{BigRational(c0), BigRational(c1)}));
}

Outcome ac1() {
  std::string out, err;
  int code = run(std::string(JETSYM_CLI) + " gen --system fs --n 3", &out, &err);
  if (code != 0) return {false, "gen exited " + std::to_string(code) + ": " + err};
  EvoField k3 = hierarchy_from_json(Json::parse(out)).member(3);
  EvolutionSystem printed = parse_system(slurp(std::filesystem::path(FIXTURE_DIR) / "k3_printed.sys"));
  EvoField diff = k3 - printed.rhs;
  std::string counts = "terms " + std::to_string(k3[0].size()) + "+" + std::to_string(k3[1].size()) + " computed, " +
                       std::to_string(printed.rhs[0].size()) + "+" + std::to_string(printed.rhs[1].size()) + " printed";
  if (diff.is_zero()) return {true, counts};
  return {false, counts + "; computed - printed = " + show(diff)};
}

Outcome ac2() {
  auto [k1, k2] = fs_seed();
  EvolutionSystem fs = systems::fs();
  SymmetryResult r1 = is_symmetry(k1, fs), r2 = is_symmetry(k2, fs);
  if (!r1.ok) return {false, "K_1 defect " + show(r1.defect)};
  if (!r2.ok) return {false, "K_2 defect " + show(r2.defect)};
  return {true, "K_1, K_2 symmetries over Q(alpha)"};
}

Outcome ac3() {
  Hierarchy h;
  try {
    h = fs_hierarchy(8);
  } catch (const HierarchyObstruction& e) {
    return {false, std::string("obstruction: ") + e.what()};
  }
  for (std::size_t n = 1; n <= 8; ++n)
    if (total_x_derivative(h.certificates[n - 1]) != h.member(n)[0])
      return {false, "certificate for K_" + std::to_string(n) + " does not reproduce K^1"};
  for (std::size_t n = 1; n <= 8; ++n)
    if (h.member(n).has_xt() || h.member(n).max_jet_order() != n)
      return {false, "K_" + std::to_string(n) + " not local of order n"};
  return {true, "K_1..K_8 generated, all D_x^{-1} remainders zero"};
}

Outcome ac4() {
  Hierarchy h = fs_hierarchy(6);
  EvolutionSystem fs = systems::fs();
  for (std::size_t n = 1; n <= 6; ++n) {
    SymmetryResult r = is_symmetry(h.member(n), fs);
    if (!r.ok) return {false, "K_" + std::to_string(n) + " defect " + show(r.defect)};
  }
  CommutatorTable t = commutativity_table(h);
  std::size_t offdiag = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) offdiag += t.zero[i][j] ? 1 : 0;
  if (!t.all_zero() || offdiag != 15) return {false, std::to_string(offdiag) + "/15 brackets vanish"};
  return {true, "6 symmetries, 15/15 brackets vanish"};
}

Outcome ac5() {
  Hierarchy h = fs_hierarchy(4);
  EvoField s = scaling_symmetry();
  for (std::size_t j = 1; j <= 4; ++j) {
    EvoField d = commutator(s, h.member(j)) - RationalFunction(static_cast<long>(j)) * h.member(j);
    if (!d.is_zero()) return {false, "[S, K_" + std::to_string(j) + "] - j K_j = " + show(d)};
  }
  return {true, "[S, K_j] = j K_j for j = 1..4"};
}

Outcome ac6() {
  std::string detail;
  for (std::size_t deg : {4u, 6u}) {
    DensityAnsatz a;
    a.max_order = 2;
    a.max_degree = deg;
    DensityReport r = density_search(systems::fs(), a);
    detail += (detail.empty() ? "" : "; ") + std::string("degree ") + std::to_string(deg) + ": " +
              std::to_string(r.unknowns) + " unknowns, nullspace " + std::to_string(r.nullspace_dimension) +
              ", quotient " + std::to_string(r.nontrivial_basis.size());
    if (r.nontrivial_basis.size() != 1 || r.nontrivial_basis[0] != DiffPoly::jet(0, 0)) {
      for (const auto& b : r.nontrivial_basis) detail += " " + b.to_string(WZ);
      return {false, detail};
    }
  }
  return {true, detail + ", spanned by w"};
}

Outcome ac7() {
  Hierarchy h = fs_hierarchy(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    DensityDecomposition d = density_decompose(h.member(n)[0]);
    if (!d.c.is_zero()) return {false, "K_" + std::to_string(n) + ": c = " + d.c.to_string("alpha")};
    if (total_x_derivative(d.exact_part) != h.member(n)[0])
      return {false, "K_" + std::to_string(n) + ": exact part does not reproduce K^1"};
  }
  return {true, "c = 0 for n = 1..6"};
}

Outcome ac8() {
  Hierarchy g = ts1_hierarchy(8);
  EvolutionSystem ts1 = systems::ts1();
  const VarNames uv{{"u", "v"}, "a"};
  const RationalFunction a = RationalFunction::alpha();
  std::vector<RationalFunction> b{RationalFunction(1), a};
  while (b.size() < 8) b.push_back(b[b.size() - 1] - (RationalFunction(1) - a) * b[b.size() - 2] / RationalFunction(2));
  for (std::size_t n = 1; n <= 8; ++n) {
    SymmetryResult r = is_symmetry(g.member(n), ts1);
    if (!r.ok) return {false, "G_" + std::to_string(n) + " defect " + show(r.defect, uv)};
    Monomial un = Monomial::of(Generator::jet(0, n));
    if (g.member(n)[0].coefficient(un) != b[n - 1])
      return {false, "u_n coefficient of G_" + std::to_string(n) + " is " +
                         g.member(n)[0].coefficient(un).to_string("a") + ", recurrence gives " + b[n - 1].to_string("a")};
  }
  DiffPoly q3 = g.member(3)[0] - DiffPoly(b[2]) * DiffPoly::jet(0, 3);
  if (q3 != RationalFunction(3) * DiffPoly::jet(1, 0) * DiffPoly::jet(1, 1))
    return {false, "Q_3 = " + q3.to_string(uv)};
  return {true, "G_1..G_8 symmetries, b_n match, Q_3 = 3 v v_1"};
}

Outcome ac9() {
  std::vector<std::optional<BigRational>> points{std::nullopt, BigRational(0), BigRational(1), ratio(1, 3)};
  for (const auto& p : points) {
    SubstitutionResult r = substitution_check({p});
    if (!r.ok) return {false, "alpha = " + (p ? p->get_str() : std::string("symbolic")) + ": defect nonzero"};
  }
  return {true, "symbolic, 0, 1, 1/3"};
}

Outcome ac10() {
  Hierarchy h = fs_hierarchy(6);
  std::string detail;
  for (std::size_t n = 1; n <= 6; ++n) {
    try {
      StructuralForm f = structural_check(h.member(n), n);
      if (f.beta_j != RationalFunction(1)) return {false, "beta_" + std::to_string(n) + " = " + f.beta_j.to_string("alpha")};
      if (f.alpha_j != fs_leading_coefficient(n))
        return {false, "alpha_" + std::to_string(n) + " = " + f.alpha_j.to_string("alpha") + " differs from the recurrence"};
    } catch (const StructuralViolation& e) {
      return {false, "K_" + std::to_string(n) + ": " + e.what()};
    }
  }
  if (fs_leading_coefficient(3) != -lin(1, 1) / lin(-1, 2)) return {false, "alpha_3 oracle mismatch"};
  return {true, "n = 1..6, beta_n = 1, tails free of constant and linear terms"};
}

Outcome ac11() {
  std::string out, err;
  int code = run(std::string(JETSYM_CLI) + " gen --system fs --alpha 1/2", &out, &err);
  while (!err.empty() && err.back() == '\n') err.pop_back();
  if (code != 1) return {false, "exit code " + std::to_string(code)};
  if (err.find("2*alpha - 1") == std::string::npos) return {false, "stderr does not name the pole: " + err};
  return {true, "exit 1: " + err};
}

Outcome ac12() {
  std::string out, err;
  int code = run(std::string(UNIT_TESTS) + " --test-suite=properties", &out, &err);
  std::string summary;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("[doctest] test cases:", 0) == 0 || line.rfind("[doctest] assertions:", 0) == 0)
      summary += (summary.empty() ? "" : "; ") + line.substr(10);
  return {code == 0, summary.empty() ? "exit " + std::to_string(code) : summary};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},  {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11}, {"AC12", ac12}};
  std::set<std::string> only;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only.insert(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only ACn]...\n";
      return 2;
    }
  }
  bool all = true;
  for (const auto& [name, check] : criteria) {
    if (!only.empty() && !only.count(name)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, " (%.2fs)", secs);
    std::cout << name << (o.pass ? " PASS: " : " FAIL: ") << o.detail << t << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
