#include "jetsym/analysis.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace jetsym {

SymmetryResult is_symmetry(const EvoField& k, const EvolutionSystem& system) {
  if (k.size() != system.depvar_count()) throw std::invalid_argument("is_symmetry: component count mismatch");
  SymmetryResult r;
  r.defect = frechet(k, system.rhs) - frechet(system.rhs, k);
  for (std::size_t i = 0; i < k.size(); ++i) r.defect[i] += partial(k[i], Generator::t());
  r.ok = r.defect.is_zero();
  return r;
}

CommutatorTable commutativity_table(const Hierarchy& h, unsigned threads) {
  const std::size_t n = h.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<EvoField> results(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t p; (p = next.fetch_add(1)) < pairs.size();)
      results[p] = commutator(h.members[pairs[p].first], h.members[pairs[p].second]);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, pairs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CommutatorTable table;
  table.n = n;
  table.zero.assign(n, std::vector<bool>(n, true));
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (results[p].is_zero()) continue;
    auto [i, j] = pairs[p];
    table.zero[i][j] = table.zero[j][i] = false;
    table.nonzero.emplace_back(pairs[p], std::move(results[p]));
  }
  return table;
}

const char* to_string(DensityKind k) {
  switch (k) {
    case DensityKind::Trivial: return "trivial";
    case DensityKind::Nontrivial: return "nontrivial";
    case DensityKind::NotConserved: return "not_conserved";
  }
  return "?";
}

DensityVerdict is_conserved_density(const DiffPoly& rho, const EvolutionSystem& system) {
  DensityVerdict v;
  v.flux = integrate_dx(dt_along(rho, system));
  v.density = integrate_dx(rho);
  if (!v.flux.exact()) v.kind = DensityKind::NotConserved;
  else v.kind = v.density.exact() ? DensityKind::Trivial : DensityKind::Nontrivial;
  return v;
}

AnsatzTooLarge::AnsatzTooLarge(std::size_t unknowns, std::size_t cap)
    : std::runtime_error("density ansatz has " + std::to_string(unknowns) + " unknowns, cap is " + std::to_string(cap)),
      unknowns_(unknowns),
      cap_(cap) {}

std::vector<Monomial> ansatz_monomials(std::size_t depvars, const DensityAnsatz& ansatz) {
  std::vector<Generator> vars;
  for (std::size_t d = 0; d < depvars; ++d)
    for (std::size_t i = 0; i <= ansatz.max_order; ++i) vars.push_back(Generator::jet(d, i));
  std::vector<Monomial> out;
  std::function<void(std::size_t, std::size_t, const Monomial&)> grow = [&](std::size_t from, std::size_t degree,
                                                                             const Monomial& m) {
    if (degree > 0) out.push_back(m);
    if (degree == ansatz.max_degree) return;
    for (std::size_t v = from; v < vars.size(); ++v) grow(v, degree + 1, m.times(vars[v], 2));
  };
  grow(0, 0, Monomial());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::size_t unknown_cap(const DensityAnsatz& ansatz) {
  if (ansatz.max_unknowns) return *ansatz.max_unknowns;
  if (const char* env = std::getenv("JETSYM_MAX_UNKNOWNS")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return 20000;
}

// Accumulates linear forms sum_k x_k * p_k(d) keyed by (component, monomial).
struct RowBuilder {
  std::map<std::pair<std::size_t, Monomial>, std::size_t> index;
  SparseRFMatrix matrix;

  void add(std::size_t d, const DiffPoly& p, std::size_t col) {
    for (const auto& [m, c] : p.terms()) {
      auto [it, inserted] = index.try_emplace({d, m}, matrix.rows.size());
      if (inserted) matrix.rows.emplace_back();
      matrix.rows[it->second].emplace_back(col, c);
    }
  }
};

DiffPoly combine(const std::vector<Monomial>& monos, const RFVector& coeffs) {
  std::vector<DiffPoly::Term> terms;
  for (std::size_t k = 0; k < monos.size(); ++k)
    if (!coeffs[k].is_zero()) terms.emplace_back(monos[k], coeffs[k]);
  return DiffPoly::from_terms(std::move(terms));
}

}  // namespace

DensityReport density_search(const EvolutionSystem& system, const DensityAnsatz& ansatz) {
  const std::size_t n = system.depvar_count();
  const std::vector<Monomial> monos = ansatz_monomials(n, ansatz);
  const std::size_t cap = unknown_cap(ansatz);
  if (monos.size() > cap) throw AnsatzTooLarge(monos.size(), cap);

  DensityReport report;
  report.unknowns = monos.size();

  RowBuilder conservation;
  conservation.matrix.cols = monos.size();
  for (std::size_t k = 0; k < monos.size(); ++k) {
    DiffPoly flux = dt_along(DiffPoly(monos[k], 1), system);
    for (std::size_t d = 0; d < n; ++d) conservation.add(d, euler_operator(flux, d), k);
  }
  report.equations = conservation.matrix.rows.size();
  LinearSolution sol = solve_linear(conservation.matrix, RFVector(conservation.matrix.rows.size()));
  report.nullspace_dimension = sol.nullspace.size();

  // Euler images of the conserved densities; their rank is the quotient dimension.
  std::vector<std::vector<DiffPoly>> images(monos.size());
  for (std::size_t k = 0; k < monos.size(); ++k)
    for (std::size_t d = 0; d < n; ++d) images[k].push_back(euler_operator(DiffPoly(monos[k], 1), d));
  RowBuilder quotient;
  quotient.matrix.cols = sol.nullspace.size();
  for (std::size_t s = 0; s < sol.nullspace.size(); ++s) {
    for (std::size_t d = 0; d < n; ++d) {
      DiffPoly image;
      for (std::size_t k = 0; k < monos.size(); ++k)
        if (!sol.nullspace[s][k].is_zero()) image += images[k][d] * sol.nullspace[s][k];
      quotient.add(d, image, s);
    }
  }
  for (std::size_t s : independent_columns(quotient.matrix)) {
    DiffPoly rho = combine(monos, sol.nullspace[s]);
    ExactnessCertificate cert = integrate_dx(rho);
    DiffPoly rep = cert.remainder;
    RationalFunction lead = rep.terms().front().second;
    rep *= lead.inverse();
    cert.remainder = rep;
    cert.antiderivative *= lead.inverse();
    report.nontrivial_basis.push_back(std::move(rep));
    report.trivial_parts.push_back(std::move(cert));
  }
  return report;
}

DensityDecomposition density_decompose(const DiffPoly& rho) {
  DiffPoly ew = euler_operator(rho, 0);
  DiffPoly ez = euler_operator(rho, 1);
  if (!ez.is_zero()) throw NotDecomposable("z-variational derivative does not vanish");
  if (ew.size() > 1 || (ew.size() == 1 && !ew.terms()[0].first.is_one()))
    throw NotDecomposable("w-variational derivative is not constant");
  RationalFunction c = ew.free_term();
  ExactnessCertificate cert = integrate_dx(rho - c * DiffPoly::jet(0, 0));
  if (!cert.exact()) throw NotDecomposable("remainder after removing c*w is not exact");
  return {c, cert.antiderivative};
}

SubstitutionResult substitution_check(const SubstitutionOptions& options) {
  EvolutionSystem triangular = systems::ts();
  EvolutionSystem target = systems::fs();
  if (options.alpha) {
    triangular = specialize(triangular, *options.alpha);
    target = specialize(target, *options.alpha);
  }
  const Generator u = Generator::jet(0, 0);
  const ExponentLattice lattice = ExponentLattice::half_integer_on(u);
  // w = u_x u^{-1} / k,  z = -v u^{-1/2} / 2
  const DiffPoly w_image(Monomial::of(Generator::jet(0, 1)).times(u, -2), RationalFunction(BigRational(1 / options.w_denominator)));
  const DiffPoly z_image(Monomial::of(Generator::jet(1, 0)).times(u, -1), ratio(-1, 2));

  const std::size_t order = target.rhs.max_jet_order().value_or(0);
  std::vector<std::vector<DiffPoly>> images{{w_image}, {z_image}};
  for (std::size_t i = 1; i <= order; ++i) {
    images[0].push_back(total_x_derivative(images[0].back()));
    images[1].push_back(total_x_derivative(images[1].back()));
  }
  SubstitutionResult r;
  r.defect = EvoField({frechet(w_image, triangular.rhs) - compose(target.rhs[0], images),
                       frechet(z_image, triangular.rhs) - compose(target.rhs[1], images)});
  if (!r.defect[0].conforms(lattice) || !r.defect[1].conforms(lattice))
    throw std::logic_error("substitution left the half-integer lattice");
  r.ok = r.defect.is_zero();
  return r;
}

}  // namespace jetsym
