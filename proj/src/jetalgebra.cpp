#include "jetsym/jetalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace jetsym {
namespace {

using Accumulator = std::unordered_map<Monomial, RationalFunction>;

void accumulate(Accumulator& acc, const Monomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second += c;
}

DiffPoly drain(Accumulator& acc) {
  std::vector<DiffPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  return DiffPoly::from_terms(std::move(terms));
}

std::string exponent_suffix(int twice_exp) {
  if (twice_exp == 2) return "";
  if (twice_exp % 2 == 0) {
    int e = twice_exp / 2;
    return e < 0 ? "^(" + std::to_string(e) + ")" : "^" + std::to_string(e);
  }
  return "^(" + std::to_string(twice_exp) + "/2)";
}

}  // namespace

bool ExponentLattice::allows(const Generator& g, int twice_exp) const {
  if (extended && *extended == g) return true;
  return twice_exp >= 0 && twice_exp % 2 == 0;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_twice(Generator g, int twice_exp) { return Monomial().times(g, twice_exp); }

int Monomial::twice_exponent(const Generator& g) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), g,
                             [](const Factor& f, const Generator& key) { return f.first < key; });
  return (it != factors_.end() && it->first == g) ? it->second : 0;
}

int Monomial::twice_jet_degree() const {
  int d = 0;
  for (const auto& [g, e] : factors_)
    if (g.is_jet()) d += e;
  return d;
}

bool Monomial::has_xt() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const Factor& f) { return !f.first.is_jet(); });
}

std::optional<std::size_t> Monomial::max_jet_order() const {
  std::optional<std::size_t> best;
  for (const auto& [g, e] : factors_)
    if (g.is_jet() && (!best || g.order > *best)) best = g.order;
  return best;
}

Monomial Monomial::times(const Generator& g, int twice_delta) const {
  Monomial r = *this;
  if (twice_delta == 0) return r;
  auto it = std::lower_bound(r.factors_.begin(), r.factors_.end(), g,
                             [](const Factor& f, const Generator& key) { return f.first < key; });
  if (it != r.factors_.end() && it->first == g) {
    it->second += twice_delta;
    if (it->second == 0) r.factors_.erase(it);
  } else {
    r.factors_.insert(it, {g, twice_delta});
  }
  if (g.is_jet()) r.twice_weight_ += static_cast<long>(g.order) * twice_delta;
  return r;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin(), b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      r.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      r.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) r.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  r.twice_weight_ = twice_weight_ + rhs.twice_weight_;
  return r;
}

bool Monomial::conforms(const ExponentLattice& lattice) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Factor& f) { return lattice.allows(f.first, f.second); });
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.twice_weight_ <=> b.twice_weight_; c != 0) return c;
  return a.factors_ <=> b.factors_;
}

std::size_t Monomial::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [g, e] : factors_) {
    std::size_t k = (static_cast<std::size_t>(g.kind) << 56) ^ (static_cast<std::size_t>(g.depvar) << 40) ^
                    (static_cast<std::size_t>(g.order) << 8) ^ static_cast<std::size_t>(e & 0xff);
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- VarNames

std::string VarNames::jet_name(std::size_t depvar, std::size_t order) const {
  std::string base = depvar < depvars.size() ? depvars[depvar] : "u" + std::to_string(depvar);
  if (order == 0) return base;
  if (order <= 2) return base + "_" + std::string(order, 'x');
  return base + "_" + std::to_string(order);
}

std::string VarNames::generator_name(const Generator& g) const {
  switch (g.kind) {
    case Generator::Kind::X: return "x";
    case Generator::Kind::T: return "t";
    case Generator::Kind::Jet: break;
  }
  return jet_name(g.depvar, g.order);
}

std::string to_string(const Monomial& m, const VarNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [g, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += names.generator_name(g) + exponent_suffix(e);
  }
  return out;
}

// ---------------------------------------------------------------- DiffPoly

DiffPoly::DiffPoly(RationalFunction c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), std::move(c));
}

DiffPoly::DiffPoly(Monomial m, RationalFunction c) {
  if (!c.is_zero()) terms_.emplace_back(std::move(m), std::move(c));
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  DiffPoly out;
  out.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second.is_zero()) out.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

RationalFunction DiffPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) { return t.first < key; });
  return (it != terms_.end() && it->first == m) ? it->second : RationalFunction();
}

bool DiffPoly::has_xt() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.has_xt(); });
}

std::optional<std::size_t> DiffPoly::max_jet_order() const {
  std::optional<std::size_t> best;
  for (const auto& [m, c] : terms_) {
    auto o = m.max_jet_order();
    if (o && (!best || *o > *best)) best = o;
  }
  return best;
}

bool DiffPoly::conforms(const ExponentLattice& lattice) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.conforms(lattice); });
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      RationalFunction c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) merged.emplace_back(std::move(a->first), std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& rhs) { return *this += -rhs; }

DiffPoly& DiffPoly::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.is_one()) return b * a.terms_[0].second;
  if (b.size() == 1 && b.terms_[0].first.is_one()) return a * b.terms_[0].second;
  Accumulator acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) accumulate(acc, ma * mb, ca * cb);
  return drain(acc);
}

DiffPoly DiffPoly::pow(unsigned k) const {
  DiffPoly result(1);
  DiffPoly base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

DiffPoly DiffPoly::map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& fn) const {
  DiffPoly r;
  for (const auto& [m, c] : terms_) {
    RationalFunction v = fn(c);
    if (!v.is_zero()) r.terms_.emplace_back(m, std::move(v));
  }
  return r;
}

std::string DiffPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string(names.param) << ")";
    for (const auto& [g, e] : m.factors()) os << "*" << names.generator_name(g) << exponent_suffix(e);
  }
  return os.str();
}

// -------------------------------------------------------------- operations

DiffPoly total_x_derivative(const DiffPoly& f) {
  Accumulator acc;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [g, e] : m.factors()) {
      if (g.kind == Generator::Kind::T) continue;
      RationalFunction coeff = c * RationalFunction(ratio(e, 2));
      Monomial lowered = m.times(g, -2);
      if (g.kind == Generator::Kind::X) {
        accumulate(acc, lowered, coeff);
      } else {
        accumulate(acc, lowered.times(Generator::jet(g.depvar, g.order + 1), 2), coeff);
      }
    }
  }
  return drain(acc);
}

DiffPoly total_x_derivative(const DiffPoly& f, std::size_t times) {
  DiffPoly r = f;
  for (std::size_t i = 0; i < times; ++i) r = total_x_derivative(r);
  return r;
}

DiffPoly partial(const DiffPoly& f, const Generator& g) {
  std::vector<DiffPoly::Term> out;
  for (const auto& [m, c] : f.terms()) {
    int e = m.twice_exponent(g);
    if (e == 0) continue;
    out.emplace_back(m.times(g, -2), c * RationalFunction(ratio(e, 2)));
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly specialize(const DiffPoly& f, const BigRational& at, const VarNames& names) {
  std::vector<DiffPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    try {
      BigRational v = c.eval(at, names.param);
      if (v != 0) out.emplace_back(m, RationalFunction(v));
    } catch (const PoleAtParameter& pole) {
      throw PoleAtParameter(std::string(pole.what()) + " (coefficient of " + to_string(m, names) + ")", pole.at(),
                            pole.denominator());
    }
  }
  return DiffPoly::from_terms(std::move(out));
}

std::optional<std::size_t> max_jet_order(const DiffPoly& f) { return f.max_jet_order(); }

DiffPoly compose(const DiffPoly& f, const std::vector<std::vector<DiffPoly>>& images) {
  DiffPoly result;
  for (const auto& [m, c] : f.terms()) {
    DiffPoly term(Monomial(), c);
    Monomial inert;
    for (const auto& [g, e] : m.factors()) {
      if (!g.is_jet()) {
        inert = inert.times(g, e);
        continue;
      }
      if (e < 0 || e % 2 != 0) throw std::invalid_argument("compose: non-polynomial exponent on a replaced jet");
      if (g.depvar >= images.size() || g.order >= images[g.depvar].size())
        throw std::out_of_range("compose: no image for jet variable");
      term = term * images[g.depvar][g.order].pow(static_cast<unsigned>(e / 2));
    }
    if (!inert.is_one()) term = term * DiffPoly(inert, 1);
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------- EvoField

bool EvoField::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const DiffPoly& p) { return p.is_zero(); });
}

bool EvoField::has_xt() const {
  return std::any_of(components.begin(), components.end(), [](const DiffPoly& p) { return p.has_xt(); });
}

std::optional<std::size_t> EvoField::max_jet_order() const {
  std::optional<std::size_t> best;
  for (const auto& p : components) {
    auto o = p.max_jet_order();
    if (o && (!best || *o > *best)) best = o;
  }
  return best;
}

EvoField& EvoField::operator+=(const EvoField& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("EvoField: component count mismatch");
  for (std::size_t i = 0; i < size(); ++i) components[i] += rhs.components[i];
  return *this;
}

EvoField& EvoField::operator-=(const EvoField& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("EvoField: component count mismatch");
  for (std::size_t i = 0; i < size(); ++i) components[i] -= rhs.components[i];
  return *this;
}

EvoField operator*(const DiffPoly& c, const EvoField& k) {
  EvoField r = k;
  for (auto& p : r.components) p = c * p;
  return r;
}

EvoField operator*(const RationalFunction& c, const EvoField& k) {
  EvoField r = k;
  for (auto& p : r.components) p *= c;
  return r;
}

EvoField specialize(const EvoField& k, const BigRational& at, const VarNames& names) {
  EvoField r;
  for (const auto& p : k.components) r.components.push_back(specialize(p, at, names));
  return r;
}

}  // namespace jetsym
