#pragma once

#include <optional>
#include <string>

#include "jetsym/jetalgebra.hpp"

namespace jetsym {

/// Evolution system d_t = rhs[d] for each dependent variable d.
struct EvolutionSystem {
  std::string name;
  VarNames names;
  /// Parameter identifier, absent for parameter-free systems.
  std::optional<std::string> parameter;
  EvoField rhs;

  std::size_t depvar_count() const { return names.depvars.size(); }
  std::optional<std::size_t> depvar_index(const std::string& id) const;
  friend bool operator==(const EvolutionSystem&, const EvolutionSystem&) = default;
};

/// Coefficients evaluated at parameter = at.
EvolutionSystem specialize(const EvolutionSystem& s, const BigRational& at);

namespace systems {

/// w_t = w_xx + 8 w w_x + (2-4 alpha) z z_x,
/// z_t = (1-2 alpha) z_xx - 4 alpha z w_x + (4-8 alpha) w z_x - (4+8 alpha) w^2 z + (4 alpha-2) z^3.
EvolutionSystem fs();
/// u_t = u_xx + (1-2 alpha) v^2,  v_t = (1-2 alpha) v_xx.
EvolutionSystem ts();
/// u_tau = a u_xx + v^2,  v_tau = v_xx.
EvolutionSystem ts1();
/// Built-in lookup by name; nullopt for unknown names.
std::optional<EvolutionSystem> builtin(const std::string& name);

/// a = 1/(1 - 2 alpha), the parameter link between ts and ts1.
RationalFunction a_of_alpha();

}  // namespace systems
}  // namespace jetsym
