#include "jetsym/varcalc.hpp"

#include <map>
#include <set>

namespace jetsym {
namespace {

std::set<Generator> jet_generators(const DiffPoly& f) {
  std::set<Generator> out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [g, e] : m.factors())
      if (g.is_jet()) out.insert(g);
  return out;
}

// Formal antiderivative in a single generator, zero constant of integration.
DiffPoly integrate_in(const DiffPoly& a, const Generator& g, const ExponentLattice& lattice) {
  std::vector<DiffPoly::Term> out;
  out.reserve(a.size());
  for (const auto& [m, c] : a.terms()) {
    int raised = m.twice_exponent(g) + 2;
    if (raised == 0) throw NonIntegerExponentPath("integration produces a logarithm");
    if (!lattice.allows(g, raised)) throw NonIntegerExponentPath("integration leaves the exponent lattice");
    out.emplace_back(m.times(g, 2), c * RationalFunction(ratio(2, raised)));
  }
  return DiffPoly::from_terms(std::move(out));
}

bool affine_in(const DiffPoly& f, const Generator& g) {
  for (const auto& [m, c] : f.terms()) {
    int e = m.twice_exponent(g);
    if (e != 0 && e != 2) return false;
  }
  return true;
}

}  // namespace

DiffPoly euler_operator(const DiffPoly& f, std::size_t depvar) {
  if (f.has_xt()) throw ExplicitXTDependence();
  std::size_t top = 0;
  for (const auto& g : jet_generators(f))
    if (g.depvar == depvar) top = std::max<std::size_t>(top, g.order);
  // Horner form: P_top, then P_i - D_x(acc) down to i = 0.
  DiffPoly acc;
  for (std::size_t i = top + 1; i-- > 0;) acc = partial(f, Generator::jet(depvar, i)) - total_x_derivative(acc);
  return acc;
}

ExactnessCertificate integrate_dx(const DiffPoly& f, const ExponentLattice& lattice) {
  if (f.has_xt()) throw ExplicitXTDependence();
  ExactnessCertificate cert{DiffPoly(), f};
  DiffPoly& rest = cert.remainder;
  while (!rest.is_zero()) {
    auto top = rest.max_jet_order();
    if (!top || *top == 0) break;
    const std::size_t k = *top;
    std::size_t depvars = 0;
    for (const auto& g : jet_generators(rest)) depvars = std::max<std::size_t>(depvars, g.depvar + 1u);

    bool stuck = false;
    for (std::size_t d = 0; d < depvars && !stuck; ++d) {
      const Generator lead = Generator::jet(d, k);
      if (partial(rest, lead).is_zero()) continue;
      if (!affine_in(rest, lead)) {
        stuck = true;
        break;
      }
      DiffPoly slope = partial(rest, lead);
      auto slope_order = slope.max_jet_order();
      if (slope_order && *slope_order >= k) {
        stuck = true;
        break;
      }
      DiffPoly piece = integrate_in(slope, Generator::jet(d, k - 1), lattice);
      rest -= total_x_derivative(piece);
      cert.antiderivative += piece;
    }
    if (stuck) break;
    auto after = rest.max_jet_order();
    if (after && *after >= k) break;
  }
  return cert;
}

namespace {

using DerivativeChains = std::map<std::size_t, std::vector<DiffPoly>>;

DiffPoly frechet_cached(const DiffPoly& f, const EvoField& k, DerivativeChains& chains) {
  DiffPoly out;
  for (const auto& g : jet_generators(f)) {
    if (g.depvar >= k.size()) throw std::invalid_argument("frechet: field has too few components");
    auto& chain = chains[g.depvar];
    if (chain.empty()) chain.push_back(k[g.depvar]);
    while (chain.size() <= g.order) chain.push_back(total_x_derivative(chain.back()));
    const DiffPoly& dk = chain[g.order];
    if (dk.is_zero()) continue;
    out += partial(f, g) * dk;
  }
  return out;
}

}  // namespace

DiffPoly frechet(const DiffPoly& f, const EvoField& k) {
  DerivativeChains chains;
  return frechet_cached(f, k, chains);
}

EvoField frechet(const EvoField& f, const EvoField& k) {
  DerivativeChains chains;
  EvoField out;
  for (const auto& p : f.components) out.components.push_back(frechet_cached(p, k, chains));
  return out;
}

EvoField commutator(const EvoField& f, const EvoField& g) { return frechet(g, f) - frechet(f, g); }

DiffPoly dt_along(const DiffPoly& f, const EvolutionSystem& system) {
  return partial(f, Generator::t()) + frechet(f, system.rhs);
}

}  // namespace jetsym
