#include "jetsym/operators.hpp"

#include <algorithm>
#include <map>

namespace jetsym {

OpEntry::OpEntry(std::vector<OpTerm> terms) {
  std::map<int, DiffPoly, std::greater<>> by_power;
  for (auto& t : terms) {
    if (t.power < -1) throw std::invalid_argument("operator power below -1");
    by_power[t.power] += t.coeff;
  }
  for (auto& [p, c] : by_power)
    if (!c.is_zero()) terms_.push_back({std::move(c), p});
}

OpEntry OpEntry::specialize(const BigRational& at, const VarNames& names) const {
  std::vector<OpTerm> out;
  for (const auto& t : terms_) out.push_back({jetsym::specialize(t.coeff, at, names), t.power});
  return OpEntry(std::move(out));
}

NonlocalObstruction::NonlocalObstruction(DiffPoly remainder, std::size_t row, std::size_t col)
    : std::runtime_error("D_x^{-1} applied outside Im D_x"), remainder_(std::move(remainder)), row_(row), col_(col) {}

OperatorMatrix OperatorMatrix::specialize(const BigRational& at, const VarNames& names) const {
  OperatorMatrix out = *this;
  for (auto& row : out.entries)
    for (auto& e : row) e = e.specialize(at, names);
  return out;
}

DiffPoly apply_term(const OpTerm& term, const DiffPoly& f) {
  if (term.power == -1) {
    ExactnessCertificate cert = integrate_dx(f);
    if (!cert.exact()) throw NonlocalObstruction(cert.remainder);
    return term.coeff * cert.antiderivative;
  }
  return term.coeff * total_x_derivative(f, static_cast<std::size_t>(term.power));
}

DiffPoly apply_entry(const OpEntry& entry, const DiffPoly& f) {
  DiffPoly out;
  if (f.is_zero()) return out;
  // Reuse the derivative chain across the terms of one entry.
  std::vector<DiffPoly> chain{f};
  for (const auto& t : entry.terms()) {
    if (t.power < 0) {
      out += apply_term(t, f);
      continue;
    }
    while (chain.size() <= static_cast<std::size_t>(t.power)) chain.push_back(total_x_derivative(chain.back()));
    out += t.coeff * chain[static_cast<std::size_t>(t.power)];
  }
  return out;
}

EvoField apply_matrix(const OperatorMatrix& m, const EvoField& k) {
  if (m.rows() != k.size()) throw std::invalid_argument("apply_matrix: size mismatch");
  EvoField out = EvoField::zero(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < k.size(); ++j) {
      try {
        out[i] += apply_entry(m.entries[i][j], k[j]);
      } catch (const NonlocalObstruction& e) {
        throw NonlocalObstruction(e.remainder(), i, j);
      }
    }
  }
  return out;
}

std::string to_string(const OpEntry& entry, const VarNames& names) {
  if (entry.is_zero()) return "0";
  std::string out;
  for (const auto& t : entry.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string(names) + ")";
    if (t.power == -1) out += "*Dinv";
    else if (t.power == 1) out += "*D";
    else if (t.power > 1) out += "*D^" + std::to_string(t.power);
  }
  return out;
}

}  // namespace jetsym
