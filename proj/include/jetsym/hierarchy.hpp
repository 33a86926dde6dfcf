#pragma once

// Symmetry hierarchies: the two-term nonlocal recursion for the
// Foursov-Burgers system (fs) and the local recursion for the triangular
// system (ts1), together with the scaling symmetry and structural checks.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/operators.hpp"
#include "jetsym/system.hpp"

namespace jetsym {

struct Hierarchy {
  EvolutionSystem system;
  std::string parameter;  // "alpha" for fs, "a" for ts1
  std::optional<BigRational> specialization;
  std::vector<EvoField> members;  // members[0] is K_1 (or G_1)
  std::vector<std::string> provenance;
  /// D_x^{-1} of each member's first component (fs); empty for ts1.
  std::vector<DiffPoly> certificates;
  /// ts1 only: leading coefficients b_1, b_2, ...
  std::vector<RationalFunction> b;

  std::size_t size() const { return members.size(); }
  /// 1-based access, matching K_n.
  const EvoField& member(std::size_t n) const { return members.at(n - 1); }
};

/// NonlocalObstruction raised while producing member `step`.
class HierarchyObstruction : public std::runtime_error {
 public:
  HierarchyObstruction(std::size_t step, const NonlocalObstruction& cause);
  std::size_t step() const { return step_; }
  const DiffPoly& remainder() const { return remainder_; }
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t step_;
  DiffPoly remainder_;
  std::size_t row_, col_;
};

class StructuralViolation : public std::runtime_error {
 public:
  StructuralViolation(std::string what, std::size_t component, Monomial offending)
      : std::runtime_error(std::move(what)), component_(component), offending_(std::move(offending)) {}
  std::size_t component() const { return component_; }
  const Monomial& offending() const { return offending_; }

 private:
  std::size_t component_;
  Monomial offending_;
};

/// K_1 = (w_x, z_x) and K_2 over Q(alpha), optionally specialized.
std::pair<EvoField, EvoField> fs_seed(const std::optional<BigRational>& alpha = std::nullopt);

/// First operator of the recursion: [[D + 4w + 4w_x Dinv, 0], [2(z_x - 2wz) Dinv, D + 2w]].
OperatorMatrix fs_recursion_matrix();
/// Second operator M acting on K_{n-2}.
OperatorMatrix fs_m_matrix();

/// K_n from K_{n-1} and K_{n-2} over Q(alpha).
EvoField fs_step(const EvoField& prev, const EvoField& prevprev);
EvoField fs_step(const EvoField& prev, const EvoField& prevprev, const OperatorMatrix& r, const OperatorMatrix& m);

/// K_1..K_n. Throws std::invalid_argument for n < 1, PoleAtParameter for a
/// specialization at a seed pole, HierarchyObstruction on nonlocality.
Hierarchy fs_hierarchy(std::size_t n, const std::optional<BigRational>& alpha = std::nullopt);

struct TriangularCoeffs {
  std::vector<RationalFunction> b;  // b[0] = b_1
  std::vector<DiffPoly> q;          // q[0] = Q_1
};
TriangularCoeffs ts1_coeffs(std::size_t n);

/// G_n = (b_n u_n + Q_n, v_n) for n = 1..n over Q(a), optionally specialized.
Hierarchy ts1_hierarchy(std::size_t n, const std::optional<BigRational>& a = std::nullopt);

/// S = 2t(1 - 2 alpha) K_2 + x K_1 + (w, z).
EvoField scaling_symmetry(const std::optional<BigRational>& alpha = std::nullopt);

struct StructuralForm {
  RationalFunction alpha_j;  // coefficient of w_j in component 1
  RationalFunction beta_j;   // coefficient of z_j in component 2
};

/// Checks K = (alpha_j w_j + tail, beta_j z_j + tail) with tails of order
/// <= j-1 free of constant and linear terms. Throws StructuralViolation.
StructuralForm structural_check(const EvoField& k, std::size_t j);

}  // namespace jetsym
