#include <algorithm>

#include "jetsym/system.hpp"

namespace jetsym {

std::optional<std::size_t> EvolutionSystem::depvar_index(const std::string& id) const {
  auto it = std::find(names.depvars.begin(), names.depvars.end(), id);
  if (it == names.depvars.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.depvars.begin());
}

EvolutionSystem specialize(const EvolutionSystem& s, const BigRational& at) {
  EvolutionSystem out = s;
  out.rhs = specialize(s.rhs, at, s.names);
  return out;
}

namespace systems {
namespace {

RationalFunction lin(long c0, long c1) {
  return RationalFunction(AlphaPoly(std::vector<BigRational>{BigRational(c0), BigRational(c1)}));
}

}  // namespace

EvolutionSystem fs() {
  const DiffPoly w = DiffPoly::jet(0, 0), w1 = DiffPoly::jet(0, 1), w2 = DiffPoly::jet(0, 2);
  const DiffPoly z = DiffPoly::jet(1, 0), z1 = DiffPoly::jet(1, 1), z2 = DiffPoly::jet(1, 2);
  DiffPoly wt = w2 + RationalFunction(8) * (w * w1) + lin(2, -4) * (z * z1);
  DiffPoly zt = lin(1, -2) * z2 + lin(0, -4) * (z * w1) + lin(4, -8) * (w * z1) + lin(-4, -8) * (w * w * z) +
                lin(-2, 4) * z.pow(3);
  return {"fs", VarNames{{"w", "z"}, "alpha"}, "alpha", EvoField({wt, zt})};
}

EvolutionSystem ts() {
  const DiffPoly v = DiffPoly::jet(1, 0);
  DiffPoly ut = DiffPoly::jet(0, 2) + lin(1, -2) * (v * v);
  DiffPoly vt = lin(1, -2) * DiffPoly::jet(1, 2);
  return {"ts", VarNames{{"u", "v"}, "alpha"}, "alpha", EvoField({ut, vt})};
}

EvolutionSystem ts1() {
  const DiffPoly v = DiffPoly::jet(1, 0);
  DiffPoly ut = RationalFunction::alpha() * DiffPoly::jet(0, 2) + v * v;
  DiffPoly vt = DiffPoly::jet(1, 2);
  return {"ts1", VarNames{{"u", "v"}, "a"}, "a", EvoField({ut, vt})};
}

std::optional<EvolutionSystem> builtin(const std::string& name) {
  if (name == "fs") return fs();
  if (name == "ts") return ts();
  if (name == "ts1") return ts1();
  return std::nullopt;
}

RationalFunction a_of_alpha() { return RationalFunction(1) / lin(1, -2); }

}  // namespace systems
}  // namespace jetsym
