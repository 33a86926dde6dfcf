#pragma once

// Variational calculus on differential polynomials: Euler operator,
// constructive inversion of D_x, directional derivatives and brackets.

#include <stdexcept>

#include "jetsym/jetalgebra.hpp"
#include "jetsym/system.hpp"

namespace jetsym {

class ExplicitXTDependence : public std::invalid_argument {
 public:
  ExplicitXTDependence() : std::invalid_argument("expression depends explicitly on x or t") {}
};

class NonIntegerExponentPath : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f = D_x(antiderivative) + remainder. remainder == 0 iff f is exact.
struct ExactnessCertificate {
  DiffPoly antiderivative;
  DiffPoly remainder;
  bool exact() const { return remainder.is_zero(); }
};

/// E_d(f) = sum_i (-D_x)^i df/dd_i.
DiffPoly euler_operator(const DiffPoly& f, std::size_t depvar);

/// Integration by parts, highest order first; the integration constant is
/// always zero. The antiderivative has no free term.
ExactnessCertificate integrate_dx(const DiffPoly& f, const ExponentLattice& lattice = ExponentLattice::standard());

/// f'[K] = sum_{d,i} df/dd_i * D_x^i(K[d]); x and t are held constant.
DiffPoly frechet(const DiffPoly& f, const EvoField& k);
EvoField frechet(const EvoField& f, const EvoField& k);

/// [F, G] = G'[F] - F'[G].
EvoField commutator(const EvoField& f, const EvoField& g);

/// D_t(f) = df/dt + f'[rhs] along the given system.
DiffPoly dt_along(const DiffPoly& f, const EvolutionSystem& system);

}  // namespace jetsym
