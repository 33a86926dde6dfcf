#pragma once

// Seeded random samples for the property suites.

#include <cstdint>
#include <random>

#include "jetsym/jetalgebra.hpp"

namespace jetsym::testing {

struct PolyShape {
  std::size_t depvars = 2;
  std::size_t max_order = 2;
  int max_degree = 3;
  std::size_t max_terms = 4;
  bool free_term = false;
  bool xt = false;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin() { return integer(0, 1) == 1; }

  BigRational rational() {
    long n = integer(-5, 5);
    return ratio(n, integer(1, 4));
  }

  AlphaPoly alpha_poly(int max_degree) {
    std::vector<BigRational> c;
    for (int i = 0; i <= max_degree; ++i) c.push_back(rational());
    return AlphaPoly(std::move(c));
  }

  RationalFunction coefficient() {
    AlphaPoly num = alpha_poly(static_cast<int>(integer(0, 2)));
    AlphaPoly den(BigRational(1));
    switch (integer(0, 3)) {
      case 0: break;
      case 1: den = AlphaPoly(std::vector<BigRational>{BigRational(integer(-2, 2)), BigRational(1)}); break;
      case 2: den = AlphaPoly(std::vector<BigRational>{BigRational(-1), BigRational(2)}); break;
      default: {
        den = alpha_poly(2);
        if (den.is_zero()) den = AlphaPoly(BigRational(3));
      }
    }
    return RationalFunction(std::move(num), std::move(den));
  }

  RationalFunction nonzero_coefficient() {
    for (;;) {
      RationalFunction c = coefficient();
      if (!c.is_zero()) return c;
    }
  }

  Monomial monomial(const PolyShape& s) {
    Monomial m;
    int degree = static_cast<int>(integer(s.free_term ? 0 : 1, s.max_degree));
    for (int k = 0; k < degree; ++k)
      m = m.times(Generator::jet(static_cast<std::size_t>(integer(0, static_cast<long>(s.depvars) - 1)),
                                 static_cast<std::size_t>(integer(0, static_cast<long>(s.max_order)))),
                  2);
    if (s.xt) {
      if (integer(0, 3) == 0) m = m.times(Generator::x(), 2);
      if (integer(0, 3) == 0) m = m.times(Generator::t(), 2);
    }
    return m;
  }

  DiffPoly poly(const PolyShape& s = {}) {
    std::vector<DiffPoly::Term> terms;
    std::size_t n = static_cast<std::size_t>(integer(1, static_cast<long>(s.max_terms)));
    for (std::size_t k = 0; k < n; ++k) terms.emplace_back(monomial(s), nonzero_coefficient());
    return DiffPoly::from_terms(std::move(terms));
  }

  EvoField field(const PolyShape& s = {}) {
    std::vector<DiffPoly> c;
    for (std::size_t d = 0; d < s.depvars; ++d) c.push_back(poly(s));
    return EvoField(std::move(c));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace jetsym::testing
