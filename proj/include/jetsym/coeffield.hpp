#pragma once

// Exact coefficient arithmetic: rationals (GMP-backed) and the rational
// function field Q(alpha) in a single parameter.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jetsym {

using BigRational = mpq_class;

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);
/// n/d in lowest terms.
BigRational ratio(long n, long d);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(alpha)") {}
};

class PoleAtParameter : public std::domain_error {
 public:
  PoleAtParameter(std::string message, BigRational at, std::string denominator)
      : std::domain_error(std::move(message)),
        at_(std::move(at)),
        denominator_(std::move(denominator)) {}
  const BigRational& at() const { return at_; }
  /// The vanishing denominator rendered with coprime integer coefficients.
  const std::string& denominator() const { return denominator_; }

 private:
  BigRational at_;
  std::string denominator_;
};

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  explicit AlphaPoly(BigRational constant);
  explicit AlphaPoly(std::vector<BigRational> ascending);

  static AlphaPoly variable();

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// nullopt is the degree of the zero polynomial (minus infinity).
  std::optional<std::size_t> degree() const;
  const BigRational& leading() const { return coeffs_.back(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  BigRational coeff(std::size_t k) const;

  BigRational eval(const BigRational& at) const;

  AlphaPoly operator-() const;
  AlphaPoly& operator+=(const AlphaPoly& rhs);
  AlphaPoly& operator-=(const AlphaPoly& rhs);
  AlphaPoly& operator*=(const BigRational& c);
  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
  friend AlphaPoly operator*(AlphaPoly a, const BigRational& c) { return a *= c; }
  friend bool operator==(const AlphaPoly&, const AlphaPoly&) = default;

  /// Euclidean division; divisor must be nonzero.
  static void divmod(const AlphaPoly& a, const AlphaPoly& b, AlphaPoly& quot, AlphaPoly& rem);
  /// Division known to be exact (asserted).
  AlphaPoly exact_div(const AlphaPoly& divisor) const;
  /// Monic gcd; gcd(0, 0) = 0.
  static AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);
  AlphaPoly monic() const;
  /// Rescaled to coprime integer coefficients with positive leading coefficient.
  AlphaPoly primitive() const;

  std::string to_string(std::string_view var = "alpha") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Element of Q(alpha) in canonical form: gcd(num, den) = 1, den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(BigRational(1)) {}
  RationalFunction(long n) : RationalFunction(BigRational(n)) {}  // NOLINT
  RationalFunction(BigRational c);                                 // NOLINT
  explicit RationalFunction(AlphaPoly p);
  RationalFunction(AlphaPoly num, AlphaPoly den);

  static RationalFunction alpha() { return RationalFunction(AlphaPoly::variable()); }

  const AlphaPoly& num() const { return num_; }
  const AlphaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; throws std::logic_error otherwise.
  BigRational constant_value() const;

  /// Value at alpha = at; throws PoleAtParameter when the denominator vanishes.
  BigRational eval(const BigRational& at, std::string_view var = "alpha") const;

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "num" or "(num)/(den)" with the denominator scaled to integer coefficients.
  std::string to_string(std::string_view var = "alpha") const;

 private:
  void normalize();
  AlphaPoly num_;
  AlphaPoly den_;
};

using RFVector = std::vector<RationalFunction>;
using RFMatrix = std::vector<RFVector>;

/// Row-sparse matrix over Q(alpha): each row is a list of (column, value).
struct SparseRFMatrix {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> rows;
};

struct LinearSolution {
  bool consistent = false;
  RFVector particular;
  std::vector<RFVector> nullspace;
};

/// Full affine solution set of A x = b. Inconsistency is reported through
/// `consistent`, not thrown. Throws std::invalid_argument on shape mismatch.
LinearSolution solve_linear(const RFMatrix& a, const RFVector& b);
LinearSolution solve_linear(const SparseRFMatrix& a, const RFVector& b);

/// Column indices of a maximal linearly independent subset of the columns.
std::vector<std::size_t> independent_columns(const SparseRFMatrix& a);

}  // namespace jetsym
