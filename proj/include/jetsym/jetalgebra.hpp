#pragma once

// Sparse differential polynomials in jet variables d_i (d a dependent
// variable, i the x-derivative order) plus inert generators x and t.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/coeffield.hpp"

namespace jetsym {

struct Generator {
  enum class Kind : std::uint8_t { X = 0, T = 1, Jet = 2 };
  Kind kind = Kind::Jet;
  std::uint16_t depvar = 0;
  std::uint32_t order = 0;

  static Generator x() { return {Kind::X, 0, 0}; }
  static Generator t() { return {Kind::T, 0, 0}; }
  static Generator jet(std::size_t depvar, std::size_t order) {
    return {Kind::Jet, static_cast<std::uint16_t>(depvar), static_cast<std::uint32_t>(order)};
  }
  bool is_jet() const { return kind == Kind::Jet; }
  /// Canonical order: X, T, then jets by (depvar, order).
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Exponents: nonnegative integers everywhere, except that one designated
/// generator may carry half-integers of either sign.
struct ExponentLattice {
  std::optional<Generator> extended;

  static ExponentLattice standard() { return {}; }
  static ExponentLattice half_integer_on(Generator g) { return {g}; }
  /// `twice_exp` is the exponent doubled.
  bool allows(const Generator& g, int twice_exp) const;
};

/// Product of generator powers. Exponents are stored doubled so that half
/// integers stay exact; no zero exponents are stored.
class Monomial {
 public:
  using Factor = std::pair<Generator, int>;  // (generator, 2*exponent)

  Monomial() = default;
  static Monomial of(Generator g, int exponent = 1) { return from_twice(g, 2 * exponent); }
  static Monomial from_twice(Generator g, int twice_exp);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  /// Doubled exponent of g (0 when absent).
  int twice_exponent(const Generator& g) const;
  /// Sum of order * exponent over jet factors, doubled.
  long twice_weight() const { return twice_weight_; }
  /// Total degree in jet variables, doubled.
  int twice_jet_degree() const;
  bool has_xt() const;
  std::optional<std::size_t> max_jet_order() const;

  Monomial operator*(const Monomial& rhs) const;
  /// Multiplies by g^(twice_delta / 2).
  Monomial times(const Generator& g, int twice_delta) const;
  bool conforms(const ExponentLattice& lattice) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  /// Graded by total differential order, then lexicographic.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  long twice_weight_ = 0;
};

/// Display names for dependent variables and the coefficient parameter.
struct VarNames {
  std::vector<std::string> depvars;
  std::string param = "alpha";

  std::string jet_name(std::size_t depvar, std::size_t order) const;
  std::string generator_name(const Generator& g) const;
  friend bool operator==(const VarNames&, const VarNames&) = default;
};

std::string to_string(const Monomial& m, const VarNames& names);

class DiffPoly {
 public:
  using Term = std::pair<Monomial, RationalFunction>;

  DiffPoly() = default;
  DiffPoly(RationalFunction c);  // NOLINT: constants promote
  DiffPoly(long c) : DiffPoly(RationalFunction(c)) {}  // NOLINT
  DiffPoly(Monomial m, RationalFunction c);

  static DiffPoly jet(std::size_t depvar, std::size_t order) { return {Monomial::of(Generator::jet(depvar, order)), 1}; }
  static DiffPoly x() { return {Monomial::of(Generator::x()), 1}; }
  static DiffPoly t() { return {Monomial::of(Generator::t()), 1}; }
  /// Builds a canonical polynomial from terms in any order, merging duplicates.
  static DiffPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RationalFunction coefficient(const Monomial& m) const;
  RationalFunction free_term() const { return coefficient(Monomial()); }
  bool has_xt() const;
  std::optional<std::size_t> max_jet_order() const;
  bool conforms(const ExponentLattice& lattice) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& rhs);
  DiffPoly& operator-=(const DiffPoly& rhs);
  DiffPoly& operator*=(const RationalFunction& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(DiffPoly a, const RationalFunction& c) { return a *= c; }
  friend DiffPoly operator*(const RationalFunction& c, DiffPoly a) { return a *= c; }
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  DiffPoly pow(unsigned k) const;
  /// Applies `fn` to every coefficient, dropping those that become zero.
  DiffPoly map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& fn) const;

  /// Canonical text: "(coeff)*m + (coeff)*m ..." in canonical term order.
  std::string to_string(const VarNames& names) const;

 private:
  std::vector<Term> terms_;
};

/// Total x-derivative.
DiffPoly total_x_derivative(const DiffPoly& f);
DiffPoly total_x_derivative(const DiffPoly& f, std::size_t times);
/// Partial derivative with respect to one generator.
DiffPoly partial(const DiffPoly& f, const Generator& g);
/// Every coefficient evaluated at alpha = at. Throws PoleAtParameter naming the monomial.
DiffPoly specialize(const DiffPoly& f, const BigRational& at, const VarNames& names = {});
std::optional<std::size_t> max_jet_order(const DiffPoly& f);

/// Replaces every jet d_i by images[d][i]; x and t stay inert. Exponents of
/// replaced generators must be nonnegative integers.
DiffPoly compose(const DiffPoly& f, const std::vector<std::vector<DiffPoly>>& images);

/// Evolutionary field: one component per dependent variable.
struct EvoField {
  std::vector<DiffPoly> components;

  EvoField() = default;
  explicit EvoField(std::vector<DiffPoly> c) : components(std::move(c)) {}
  static EvoField zero(std::size_t n) { return EvoField(std::vector<DiffPoly>(n)); }

  std::size_t size() const { return components.size(); }
  DiffPoly& operator[](std::size_t i) { return components[i]; }
  const DiffPoly& operator[](std::size_t i) const { return components[i]; }
  bool is_zero() const;
  bool has_xt() const;
  std::optional<std::size_t> max_jet_order() const;

  EvoField& operator+=(const EvoField& rhs);
  EvoField& operator-=(const EvoField& rhs);
  friend EvoField operator+(EvoField a, const EvoField& b) { return a += b; }
  friend EvoField operator-(EvoField a, const EvoField& b) { return a -= b; }
  friend EvoField operator*(const DiffPoly& c, const EvoField& k);
  friend EvoField operator*(const RationalFunction& c, const EvoField& k);
  friend bool operator==(const EvoField&, const EvoField&) = default;
};

EvoField specialize(const EvoField& k, const BigRational& at, const VarNames& names = {});

}  // namespace jetsym

template <>
struct std::hash<jetsym::Monomial> {
  std::size_t operator()(const jetsym::Monomial& m) const noexcept { return m.hash(); }
};
