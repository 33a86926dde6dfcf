#include "jetsym/verify.hpp"

#include <algorithm>
#include <future>

namespace jetsym {
namespace {

std::string nth(const char* name, std::size_t n) { return std::string(name) + "_" + std::to_string(n); }

RationalFunction value_at(const RationalFunction& c, const std::optional<BigRational>& at, const std::string& var) {
  return at ? RationalFunction(c.eval(*at, var)) : c;
}

CheckRecord field_check(std::string name, const EvoField& defect) {
  CheckRecord r{std::move(name), defect.is_zero(), "", std::nullopt};
  if (!r.passed) {
    r.detail = "nonzero defect";
    r.defect = defect;
  }
  return r;
}

void system_and_recursion(const Hierarchy& h, const EvolutionSystem& expected_system, const Hierarchy& regenerated,
                          CheckReport& report) {
  report.checks.push_back({"system matches built-in " + expected_system.name, h.system.rhs == expected_system.rhs,
                           h.system.rhs == expected_system.rhs ? "" : "right-hand side differs", std::nullopt});
  CheckRecord rec{"recursion consistency", true, "", std::nullopt};
  for (std::size_t n = 1; n <= h.size(); ++n) {
    if (h.member(n) == regenerated.member(n)) continue;
    rec.passed = false;
    rec.detail = "member " + std::to_string(n) + " differs from the recursion";
    rec.defect = h.member(n) - regenerated.member(n);
    break;
  }
  report.checks.push_back(std::move(rec));
}

void symmetry_and_commutativity(const Hierarchy& h, const EvolutionSystem& system, const char* label, unsigned threads,
                                CheckReport& report) {
  std::vector<std::future<SymmetryResult>> sym;
  for (std::size_t n = 1; n <= h.size(); ++n)
    sym.push_back(std::async(threads == 1 ? std::launch::deferred : std::launch::async,
                             [&, n] { return is_symmetry(h.member(n), system); }));
  for (std::size_t n = 1; n <= h.size(); ++n) report.checks.push_back(field_check("symmetry " + nth(label, n), sym[n - 1].get().defect));

  CommutatorTable table = commutativity_table(h, threads);
  CheckRecord c{"commutativity (" + std::to_string(h.size() * (h.size() - 1) / 2) + " pairs)", table.all_zero(), "",
                std::nullopt};
  if (!c.passed) {
    for (const auto& [ij, f] : table.nonzero)
      c.detail += (c.detail.empty() ? "nonzero: " : ", ") + std::string("[") + nth(label, ij.first + 1) + ", " +
                  nth(label, ij.second + 1) + "]";
    c.defect = table.nonzero.front().second;
  }
  report.checks.push_back(std::move(c));
}

void fs_checks(const Hierarchy& h, unsigned threads, CheckReport& report) {
  const auto& alpha = h.specialization;
  EvolutionSystem fs = alpha ? specialize(systems::fs(), *alpha) : systems::fs();
  system_and_recursion(h, fs, fs_hierarchy(h.size(), alpha), report);
  symmetry_and_commutativity(h, fs, "K", threads, report);

  for (std::size_t n = 1; n <= h.size(); ++n) {
    CheckRecord r{"certificate " + nth("K", n), false, "", std::nullopt};
    if (n > h.certificates.size()) {
      r.detail = "missing";
    } else {
      DiffPoly gap = total_x_derivative(h.certificates[n - 1]) - h.member(n)[0];
      r.passed = gap.is_zero();
      if (!r.passed) {
        r.detail = "D_x(certificate) differs from the first component";
        r.defect = EvoField({gap});
      }
    }
    report.checks.push_back(std::move(r));
  }

  const EvoField s = scaling_symmetry(alpha);
  for (std::size_t n = 1; n <= h.size(); ++n) {
    EvoField defect = commutator(s, h.member(n)) - RationalFunction(static_cast<long>(n)) * h.member(n);
    report.checks.push_back(field_check("homogeneity [S, " + nth("K", n) + "] = " + std::to_string(n) + " K_" +
                                            std::to_string(n),
                                        defect));
  }

  for (std::size_t n = 1; n <= h.size(); ++n) {
    CheckRecord r{"structure " + nth("K", n), false, "", std::nullopt};
    try {
      StructuralForm f = structural_check(h.member(n), n);
      RationalFunction want = value_at(fs_leading_coefficient(n), alpha, "alpha");
      r.passed = f.alpha_j == want && f.beta_j.is_one();
      if (!r.passed)
        r.detail = "leading coefficients " + f.alpha_j.to_string() + ", " + f.beta_j.to_string() + "; expected " +
                   want.to_string() + ", 1";
    } catch (const StructuralViolation& e) {
      r.detail = std::string(e.what()) + " in component " + std::to_string(e.component() + 1) + ": " +
                 to_string(e.offending(), h.system.names);
    }
    report.checks.push_back(std::move(r));
  }

  for (std::size_t n = 1; n <= h.size(); ++n) {
    CheckRecord r{"density decomposition c = 0 for " + nth("K", n), false, "", std::nullopt};
    try {
      DensityDecomposition d = density_decompose(h.member(n)[0]);
      r.passed = d.c.is_zero();
      if (!r.passed) r.detail = "c = " + d.c.to_string();
    } catch (const NotDecomposable& e) {
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  }
}

void ts1_checks(const Hierarchy& h, unsigned threads, CheckReport& report) {
  const auto& a = h.specialization;
  EvolutionSystem ts1 = a ? specialize(systems::ts1(), *a) : systems::ts1();
  system_and_recursion(h, ts1, ts1_hierarchy(h.size(), a), report);
  symmetry_and_commutativity(h, ts1, "G", threads, report);

  const TriangularCoeffs tc = ts1_coeffs(h.size());
  for (std::size_t n = 1; n <= h.size(); ++n) {
    RationalFunction want = value_at(tc.b[n - 1], a, "a");
    RationalFunction got = h.member(n)[0].coefficient(Monomial::of(Generator::jet(0, n)));
    bool embedded = n <= h.b.size() && h.b[n - 1] == want;
    CheckRecord r{"b coefficient " + nth("G", n), got == want && embedded, "", std::nullopt};
    if (!r.passed)
      r.detail = "u_" + std::to_string(n) + " coefficient " + got.to_string("a") + ", recurrence gives " +
                 want.to_string("a") + (embedded ? "" : ", embedded b differs");
    report.checks.push_back(std::move(r));

    EvoField g = h.member(n);
    g[0] -= got * DiffPoly::jet(0, n);
    g[1] -= DiffPoly::jet(1, n);
    const DiffPoly& tail = g[0];
    // Q_n: quadratic in v and its derivatives of order < n
    bool ok = g[1].is_zero() && std::all_of(tail.terms().begin(), tail.terms().end(), [&](const DiffPoly::Term& t) {
                const auto& fs = t.first.factors();
                return t.first.twice_jet_degree() == 4 && std::all_of(fs.begin(), fs.end(), [&](const Monomial::Factor& f) {
                         return f.first.is_jet() && f.first.depvar == 1 && f.first.order < n;
                       });
              });
    report.checks.push_back({"structure " + nth("G", n), ok, ok ? "" : "G_n is not (b_n u_n + Q_n(v), v_n)",
                             std::nullopt});
  }
}

}  // namespace

RationalFunction fs_leading_coefficient(std::size_t n) {
  const RationalFunction a = RationalFunction::alpha();
  const RationalFunction c = RationalFunction(2) * a - RationalFunction(1);
  RationalFunction prev2 = 1, prev1 = -c.inverse();
  if (n == 1) return prev2;
  for (std::size_t k = 3; k <= n; ++k) {
    RationalFunction next = prev1 - a / c * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

CheckReport verify_hierarchy(const Hierarchy& h, unsigned threads) {
  if (h.size() == 0) throw UnsupportedHierarchy("hierarchy has no members");
  CheckReport report;
  if (h.system.name == "fs") fs_checks(h, threads, report);
  else if (h.system.name == "ts1") ts1_checks(h, threads, report);
  else throw UnsupportedHierarchy("no checklist for system '" + h.system.name + "'");
  return report;
}

}  // namespace jetsym
