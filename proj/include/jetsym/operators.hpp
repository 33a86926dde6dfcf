#pragma once

// Matrices of formal operators sum coeff * D_x^p, p >= -1, acting on
// evolutionary fields. Only application is supported, never composition.

#include <stdexcept>
#include <string>
#include <vector>

#include "jetsym/jetalgebra.hpp"
#include "jetsym/varcalc.hpp"

namespace jetsym {

struct OpTerm {
  DiffPoly coeff;
  int power = 0;  // -1 stands for D_x^{-1}
  friend bool operator==(const OpTerm&, const OpTerm&) = default;
};

/// One matrix entry: terms with distinct powers, highest power first, no
/// zero coefficients.
class OpEntry {
 public:
  OpEntry() = default;
  explicit OpEntry(std::vector<OpTerm> terms);

  const std::vector<OpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  OpEntry specialize(const BigRational& at, const VarNames& names) const;
  friend bool operator==(const OpEntry&, const OpEntry&) = default;

 private:
  std::vector<OpTerm> terms_;
};

/// Raised when D_x^{-1} is applied to something outside Im D_x.
class NonlocalObstruction : public std::runtime_error {
 public:
  NonlocalObstruction(DiffPoly remainder, std::size_t row = 0, std::size_t col = 0);
  const DiffPoly& remainder() const { return remainder_; }
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  DiffPoly remainder_;
  std::size_t row_, col_;
};

struct OperatorMatrix {
  std::vector<std::vector<OpEntry>> entries;

  static OperatorMatrix zero(std::size_t n) { return {std::vector<std::vector<OpEntry>>(n, std::vector<OpEntry>(n))}; }
  std::size_t rows() const { return entries.size(); }
  OperatorMatrix specialize(const BigRational& at, const VarNames& names) const;
  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;
};

/// coeff * D_x^power(f). Throws NonlocalObstruction for an inexact argument of D_x^{-1}.
DiffPoly apply_term(const OpTerm& term, const DiffPoly& f);
DiffPoly apply_entry(const OpEntry& entry, const DiffPoly& f);
EvoField apply_matrix(const OperatorMatrix& m, const EvoField& k);

/// Renders e.g. "(1)*D + ((4)*w) + ((4)*w_x)*Dinv".
std::string to_string(const OpEntry& entry, const VarNames& names);

}  // namespace jetsym
