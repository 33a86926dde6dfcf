#include <cstdlib>

#include "doctest.h"
#include "jetsym/analysis.hpp"

using namespace jetsym;

namespace {

DiffPoly w(std::size_t i = 0) { return DiffPoly::jet(0, i); }
DiffPoly z(std::size_t i = 0) { return DiffPoly::jet(1, i); }
RationalFunction R(long n) { return RationalFunction(n); }

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("is_symmetry") {
    EvolutionSystem fs = systems::fs();
    CHECK(is_symmetry(EvoField({w(1), z(1)}), fs).ok);
    CHECK(is_symmetry(scaling_symmetry(), fs).ok);
    SymmetryResult r = is_symmetry(EvoField({w(), DiffPoly()}), fs);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.defect.is_zero());
    CHECK_THROWS_AS(is_symmetry(EvoField({w()}), fs), std::invalid_argument);
  }

  TEST_CASE("commutativity tables") {
    CommutatorTable t = commutativity_table(fs_hierarchy(4));
    CHECK(t.all_zero());
    CHECK(t.zero.size() == 4);
    CHECK(commutativity_table(ts1_hierarchy(4), 1).all_zero());
    Hierarchy h = fs_hierarchy(2);
    h.members.push_back(EvoField({w(), DiffPoly()}));
    CommutatorTable bad = commutativity_table(h, 2);
    CHECK_FALSE(bad.all_zero());
    CHECK(bad.zero[2][2]);  // diagonal
    CHECK(bad.zero[0][2]);  // translation commutes with (w, 0)
    CHECK_FALSE(bad.zero[1][2]);
    CHECK_FALSE(bad.zero[2][1]);
  }

  TEST_CASE("is_conserved_density") {
    EvolutionSystem fs = systems::fs();
    DensityVerdict v = is_conserved_density(w(), fs);
    CHECK(v.kind == DensityKind::Nontrivial);
    CHECK(v.flux.antiderivative ==
          w(1) + R(4) * w() * w() + RationalFunction(AlphaPoly(std::vector<BigRational>{1, -2})) * z() * z());
    CHECK(is_conserved_density(w(1), fs).kind == DensityKind::Trivial);
    CHECK(is_conserved_density(z(), fs).kind == DensityKind::NotConserved);
    CHECK(std::string(to_string(DensityKind::NotConserved)) == "not_conserved");
  }

  TEST_CASE("density_search on fs") {
    DensityAnsatz a;
    a.max_order = 2;
    a.max_degree = 4;
    DensityReport r = density_search(systems::fs(), a);
    REQUIRE(r.nontrivial_basis.size() == 1);
    CHECK(r.nontrivial_basis[0] == w());
    CHECK(r.unknowns == ansatz_monomials(2, a).size());
    for (const auto& c : r.trivial_parts) CHECK(c.remainder == w());

    a.max_order = 0;
    a.max_degree = 1;
    r = density_search(systems::fs(), a);
    REQUIRE(r.nontrivial_basis.size() == 1);
    CHECK(r.nontrivial_basis[0] == w());
  }

  TEST_CASE("density_search on ts1") {
    // D_t(u) = a u_xx + v^2 and v^2 is not exact, so u is not conserved.
    DensityAnsatz a;
    a.max_order = 0;
    a.max_degree = 1;
    DensityReport r = density_search(systems::ts1(), a);
    REQUIRE(r.nontrivial_basis.size() == 1);
    CHECK(r.nontrivial_basis[0] == DiffPoly::jet(1, 0));
    CHECK(is_conserved_density(DiffPoly::jet(0, 0), systems::ts1()).kind == DensityKind::NotConserved);
  }

  TEST_CASE("ansatz size and cap") {
    DensityAnsatz a;
    a.max_order = 0;
    a.max_degree = 2;
    CHECK(ansatz_monomials(2, a).size() == 5);  // w, z, w^2, wz, z^2
    a.max_unknowns = 3;
    CHECK_THROWS_AS(density_search(systems::fs(), a), AnsatzTooLarge);
    a.max_unknowns.reset();
    setenv("JETSYM_MAX_UNKNOWNS", "4", 1);
    CHECK_THROWS_AS(density_search(systems::fs(), a), AnsatzTooLarge);
    unsetenv("JETSYM_MAX_UNKNOWNS");
    CHECK_NOTHROW(density_search(systems::fs(), a));
  }

  TEST_CASE("density at alpha = 1 is recorded, not asserted") {
    DensityAnsatz a;
    a.max_order = 2;
    a.max_degree = 4;
    DensityReport r = density_search(specialize(systems::fs(), 1), a);
    const VarNames names{{"w", "z"}, "alpha"};
    std::string basis;
    for (const auto& b : r.nontrivial_basis) basis += " " + b.to_string(names);
    MESSAGE("alpha = 1: nontrivial quotient dimension " << r.nontrivial_basis.size() << ":" << basis);
  }

  TEST_CASE("density_decompose") {
    DensityDecomposition d = density_decompose(w());
    CHECK(d.c == R(1));
    CHECK(d.exact_part.is_zero());
    d = density_decompose(w() + R(2) * w() * w(1));
    CHECK(d.c == R(1));
    CHECK(d.exact_part == w() * w());
    Hierarchy h = fs_hierarchy(3);
    CHECK(density_decompose(h.member(3)[0]).c.is_zero());
    CHECK_THROWS_AS(density_decompose(w(1) * w(1)), NotDecomposable);
    CHECK_THROWS_AS(density_decompose(z()), NotDecomposable);
  }

  TEST_CASE("substitution_check") {
    CHECK(substitution_check().ok);
    CHECK(substitution_check({BigRational(0)}).ok);
    CHECK(substitution_check({ratio(1, 2)}).ok);
    SubstitutionOptions wrong;
    wrong.w_denominator = 3;
    SubstitutionResult r = substitution_check(wrong);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.defect.is_zero());
  }
}
