#include "doctest.h"
#include "jetsym/analysis.hpp"
#include "jetsym/hierarchy.hpp"
#include "support.hpp"

using namespace jetsym;

namespace {

const RationalFunction A = RationalFunction::alpha();

DiffPoly w(std::size_t i = 0) { return DiffPoly::jet(0, i); }
DiffPoly z(std::size_t i = 0) { return DiffPoly::jet(1, i); }
RationalFunction lin(long c0, long c1) {
  return RationalFunction(AlphaPoly(std::vector<BigRational>{BigRational(c0), BigRational(c1)}));
}

bool euler_exact(const DiffPoly& f, std::size_t depvars) {
  if (!f.free_term().is_zero()) return false;
  for (std::size_t d = 0; d < depvars; ++d)
    if (!euler_operator(f, d).is_zero()) return false;
  return true;
}

}  // namespace

TEST_SUITE("varcalc") {
  TEST_CASE("Euler operator") {
    CHECK(euler_operator(w(2), 0).is_zero());
    CHECK(euler_operator(w() * w(), 0) == RationalFunction(2) * w());
    CHECK(euler_operator(w(1) * w(1), 0) == RationalFunction(-2) * w(2));
    CHECK(euler_operator(w(1) * z(), 1) == w(1));
    CHECK_THROWS_AS(euler_operator(DiffPoly::x() * w(), 0), ExplicitXTDependence);
  }

  TEST_CASE("integrate_dx") {
    ExactnessCertificate c = integrate_dx(RationalFunction(2) * w() * w(1));
    CHECK(c.exact());
    CHECK(c.antiderivative == w() * w());

    c = integrate_dx(w(1) * w(1));
    CHECK_FALSE(c.exact());
    CHECK(total_x_derivative(c.antiderivative) + c.remainder == w(1) * w(1));

    c = integrate_dx(w(1) * z() + w() * z(1));
    CHECK(c.exact());
    CHECK(c.antiderivative == w() * z());

    c = integrate_dx(DiffPoly(3));
    CHECK_FALSE(c.exact());  // constants are not integrated into x
    CHECK(c.remainder == DiffPoly(3));
    CHECK_THROWS_AS(integrate_dx(DiffPoly::t() * w(1)), ExplicitXTDependence);
  }

  TEST_CASE("integrate_dx on the extended lattice") {
    const Generator u = Generator::jet(0, 0);
    DiffPoly f(Monomial::from_twice(u, -1).times(Generator::jet(0, 1), 2), ratio(1, 2));  // D_x(u^(1/2))
    ExactnessCertificate c = integrate_dx(f, ExponentLattice::half_integer_on(u));
    CHECK(c.exact());
    CHECK(c.antiderivative == DiffPoly(Monomial::from_twice(u, 1), 1));
    // u_x / u integrates to log u, which is outside the class
    DiffPoly log_derivative(Monomial::from_twice(u, -2).times(Generator::jet(0, 1), 2), 1);
    CHECK_THROWS_AS(integrate_dx(log_derivative, ExponentLattice::half_integer_on(u)), NonIntegerExponentPath);
  }

  TEST_CASE("frechet") {
    EvoField k1({w(1), z(1)});
    CHECK(frechet(w() * w(1), k1) == w(1) * w(1) + w() * w(2));
    EvoField any({A * z(3) + w(), w(1) * z()});
    CHECK(frechet(w(), any) == any[0]);
    CHECK(frechet(z().pow(3), EvoField({DiffPoly(), z(1)})) == RationalFunction(3) * z() * z() * z(1));
    CHECK(frechet(DiffPoly::x() * w(), k1) == DiffPoly::x() * w(1));
  }

  TEST_CASE("commutator") {
    auto [k1, k2] = fs_seed();
    CHECK(commutator(k1, k1).is_zero());
    CHECK(commutator(k1, k2).is_zero());
    CHECK(commutator(scaling_symmetry(), k1) == k1);
  }

  TEST_CASE("dt_along") {
    EvolutionSystem fs = systems::fs();
    CHECK(dt_along(w(), fs) == w(2) + RationalFunction(8) * w() * w(1) + lin(2, -4) * z() * z(1));
    CHECK(dt_along(DiffPoly::t(), fs) == DiffPoly(1));
    CHECK(dt_along(DiffPoly::jet(1, 0), systems::ts1()) == DiffPoly::jet(1, 2));
  }
}

TEST_SUITE("properties") {
  TEST_CASE("Euler annihilates exact expressions on 150 samples") {
    testing::Sampler s(0x5eed0201);
    for (int i = 0; i < 150; ++i) {
      DiffPoly g = s.poly();
      DiffPoly f = total_x_derivative(g);
      CHECK(euler_operator(f, 0).is_zero());
      CHECK(euler_operator(f, 1).is_zero());
    }
  }

  TEST_CASE("integrate_dx inverts D_x on 150 samples") {
    testing::Sampler s(0x5eed0202);
    for (int i = 0; i < 150; ++i) {
      DiffPoly g = s.poly();
      ExactnessCertificate c = integrate_dx(total_x_derivative(g));
      CHECK(c.exact());
      CHECK(c.antiderivative == g);
    }
  }

  TEST_CASE("certificate identity and exactness equivalence on 200 samples") {
    testing::Sampler s(0x5eed0203);
    testing::PolyShape shape;
    shape.free_term = true;
    shape.max_terms = 5;
    int exact = 0;
    for (int i = 0; i < 200; ++i) {
      // mix exact and inexact inputs
      DiffPoly f = s.coin() ? total_x_derivative(s.poly()) + (s.coin() ? s.poly(shape) : DiffPoly()) : s.poly(shape);
      ExactnessCertificate c = integrate_dx(f);
      CHECK(total_x_derivative(c.antiderivative) + c.remainder == f);
      CHECK(c.antiderivative.free_term().is_zero());
      CHECK(c.exact() == euler_exact(f, 2));
      exact += c.exact();
    }
    CHECK(exact > 20);
    CHECK(exact < 180);
  }

  TEST_CASE("frechet is a derivation and commutes with D_x on 120 samples") {
    testing::Sampler s(0x5eed0204);
    for (int i = 0; i < 120; ++i) {
      DiffPoly f = s.poly(), g = s.poly();
      EvoField k = s.field();
      CHECK(frechet(f * g, k) == frechet(f, k) * g + f * frechet(g, k));
      CHECK(frechet(total_x_derivative(f), k) == total_x_derivative(frechet(f, k)));
    }
  }

  TEST_CASE("bracket antisymmetry on 150 pairs") {
    testing::Sampler s(0x5eed0205);
    for (int i = 0; i < 150; ++i) {
      EvoField f = s.field(), g = s.field();
      CHECK(commutator(f, g) == RationalFunction(-1) * commutator(g, f));
      CHECK(commutator(f, f).is_zero());
    }
  }

  TEST_CASE("Jacobi identity on 100 triples") {
    testing::Sampler s(0x5eed0206);
    testing::PolyShape shape;
    shape.max_order = 1;
    shape.max_degree = 2;
    shape.max_terms = 3;
    for (int i = 0; i < 100; ++i) {
      EvoField f = s.field(shape), g = s.field(shape), h = s.field(shape);
      EvoField jac = commutator(f, commutator(g, h)) + commutator(g, commutator(h, f)) + commutator(h, commutator(f, g));
      CHECK(jac.is_zero());
    }
  }
}
