#pragma once

// Verification: symmetry condition, brackets within a hierarchy, conserved
// densities, and the linearizing substitution between ts and fs.

#include <optional>
#include <stdexcept>
#include <vector>

#include "jetsym/hierarchy.hpp"
#include "jetsym/system.hpp"
#include "jetsym/varcalc.hpp"

namespace jetsym {

struct SymmetryResult {
  bool ok = false;
  EvoField defect;
};

/// D_t(K) - F'[K] along the system; ok iff it vanishes identically.
SymmetryResult is_symmetry(const EvoField& k, const EvolutionSystem& system);

struct CommutatorTable {
  std::size_t n = 0;
  std::vector<std::vector<bool>> zero;  // zero[i][j] for members i+1, j+1
  /// Nonzero brackets, keyed by 0-based (i, j) with i <= j.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, EvoField>> nonzero;
  bool all_zero() const { return nonzero.empty(); }
};

/// All brackets [K_i, K_j], i <= j; the lower triangle follows by antisymmetry.
/// Pairs are evaluated on `threads` workers (0 = hardware concurrency).
CommutatorTable commutativity_table(const Hierarchy& h, unsigned threads = 0);

enum class DensityKind { Trivial, Nontrivial, NotConserved };
const char* to_string(DensityKind k);

struct DensityVerdict {
  DensityKind kind = DensityKind::NotConserved;
  ExactnessCertificate flux;     // for D_t(rho)
  ExactnessCertificate density;  // for rho itself
};

DensityVerdict is_conserved_density(const DiffPoly& rho, const EvolutionSystem& system);

struct DensityAnsatz {
  std::size_t max_order = 2;
  std::size_t max_degree = 6;
  /// Cap on the number of unknown coefficients; nullopt reads
  /// JETSYM_MAX_UNKNOWNS, defaulting to 20000.
  std::optional<std::size_t> max_unknowns;
};

class AnsatzTooLarge : public std::runtime_error {
 public:
  AnsatzTooLarge(std::size_t unknowns, std::size_t cap);
  std::size_t unknowns() const { return unknowns_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t unknowns_, cap_;
};

struct DensityReport {
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t nullspace_dimension = 0;
  /// Representatives of the nontrivial quotient (conserved densities modulo
  /// Im D_x), each reduced by integration by parts and scaled to a leading 1.
  std::vector<DiffPoly> nontrivial_basis;
  /// For each representative: the density it was reduced from, split as
  /// D_x(antiderivative) + representative.
  std::vector<ExactnessCertificate> trivial_parts;
};

/// Every monomial in d_i (i <= max_order) of total degree 1..max_degree.
std::vector<Monomial> ansatz_monomials(std::size_t depvars, const DensityAnsatz& ansatz);

/// Solves E_d(D_t rho) = 0 for all d over the ansatz and reduces modulo Im D_x.
DensityReport density_search(const EvolutionSystem& system, const DensityAnsatz& ansatz);

class NotDecomposable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DensityDecomposition {
  RationalFunction c;
  DiffPoly exact_part;  // rho = c * w + D_x(exact_part)
};

/// Splits an fs density as c * w + D_x(exact_part).
DensityDecomposition density_decompose(const DiffPoly& rho);

struct SubstitutionOptions {
  std::optional<BigRational> alpha;
  /// w = u_x / (w_denominator * u); 4 is the linearizing value.
  BigRational w_denominator = 4;
};

struct SubstitutionResult {
  bool ok = false;
  EvoField defect;  // over (u, v) with half-integer powers of u
};

/// Pushes ts through w = u_x/(4u), z = -v/(2 sqrt(u)) and compares with fs.
SubstitutionResult substitution_check(const SubstitutionOptions& options = {});

}  // namespace jetsym
