#include "jetsym/coeffield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace jetsym {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  auto slash = s.find('/');
  auto digits_ok = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    return std::all_of(s.begin() + from, s.begin() + to, [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!digits_ok(start, s.size())) throw std::invalid_argument("bad rational literal: " + s);
  } else if (!digits_ok(start, slash) || !digits_ok(slash + 1, s.size())) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  BigRational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

BigRational ratio(long n, long d) {
  if (d == 0) throw DivisionByZero();
  BigRational q(n, 1);
  q /= d;
  return q;
}

// ---------------------------------------------------------------- AlphaPoly

AlphaPoly::AlphaPoly(BigRational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

AlphaPoly::AlphaPoly(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

AlphaPoly AlphaPoly::variable() { return AlphaPoly(std::vector<BigRational>{0, 1}); }

void AlphaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> AlphaPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

BigRational AlphaPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigRational(0); }

BigRational AlphaPoly::eval(const BigRational& at) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return AlphaPoly(std::move(out));
}

void AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b, AlphaPoly& quot, AlphaPoly& rem) {
  if (b.is_zero()) throw DivisionByZero();
  rem = a;
  quot = AlphaPoly();
  if (rem.coeffs_.size() < b.coeffs_.size()) return;
  std::vector<BigRational> q(rem.coeffs_.size() - b.coeffs_.size() + 1);
  const BigRational& lead = b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigRational& top = rem.coeffs_[k + b.coeffs_.size() - 1];
    if (top == 0) continue;
    BigRational f = top / lead;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem.coeffs_[k + j] -= f * b.coeffs_[j];
    q[k] = std::move(f);
  }
  rem.trim();
  quot = AlphaPoly(std::move(q));
}

AlphaPoly AlphaPoly::exact_div(const AlphaPoly& divisor) const {
  if (divisor.coeffs_.size() == 1) {
    AlphaPoly r = *this;
    r *= BigRational(1) / divisor.coeffs_[0];
    return r;
  }
  AlphaPoly q, r;
  divmod(*this, divisor, q, r);
  assert(r.is_zero());
  return q;
}

AlphaPoly AlphaPoly::monic() const {
  if (is_zero() || leading() == 1) return *this;
  AlphaPoly r = *this;
  r *= BigRational(1) / leading();
  return r;
}

AlphaPoly AlphaPoly::gcd(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.coeffs_.size() == 1 || b.coeffs_.size() == 1) return AlphaPoly(BigRational(1));
  AlphaPoly x = a.monic(), y = b.monic();
  AlphaPoly q, r;
  while (!y.is_zero()) {
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

AlphaPoly AlphaPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    mpz_class n = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  BigRational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (leading() < 0) scale = -scale;
  AlphaPoly r = *this;
  r *= scale;
  return r;
}

std::string AlphaPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigRational& c = coeffs_[k];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// --------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(BigRational c) : num_(std::move(c)), den_(BigRational(1)) {}

RationalFunction::RationalFunction(AlphaPoly p) : num_(std::move(p)), den_(BigRational(1)) {}

RationalFunction::RationalFunction(AlphaPoly num, AlphaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = AlphaPoly(BigRational(1));
    return;
  }
  if (!den_.is_constant()) {
    AlphaPoly g = AlphaPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  if (den_.leading() != 1) {
    BigRational s = BigRational(1) / den_.leading();
    num_ *= s;
    den_ *= s;
  }
}

BigRational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("coefficient depends on the parameter");
  return num_.coeff(0) / den_.coeff(0);
}

BigRational RationalFunction::eval(const BigRational& at, std::string_view var) const {
  BigRational d = den_.eval(at);
  if (d == 0) {
    throw PoleAtParameter("pole at " + std::string(var) + " = " + at.get_str() + ": denominator " +
                              den_.primitive().to_string(var) + " vanishes",
                          at, den_.primitive().to_string(var));
  }
  return num_.eval(at) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.leading() != 1) {
    BigRational s = BigRational(1) / r.den_.leading();
    r.num_ *= s;
    r.den_ *= s;
  }
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = AlphaPoly(BigRational(1));
    return *this;
  }
  AlphaPoly g = AlphaPoly::gcd(den_, rhs.den_);
  AlphaPoly left = rhs.den_.exact_div(g);
  AlphaPoly right = den_.exact_div(g);
  num_ = num_ * left + rhs.num_ * right;
  den_ = den_ * left;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RationalFunction();
  if (rhs.is_constant()) {
    num_ *= rhs.constant_value();
    return *this;
  }
  if (is_constant()) {
    BigRational c = constant_value();
    *this = rhs;
    num_ *= c;
    return *this;
  }
  // Cross-cancel before multiplying so intermediate degrees stay small.
  AlphaPoly g1 = AlphaPoly::gcd(num_, rhs.den_);
  AlphaPoly g2 = AlphaPoly::gcd(rhs.num_, den_);
  AlphaPoly n = num_.exact_div(g1) * rhs.num_.exact_div(g2);
  AlphaPoly d = den_.exact_div(g2) * rhs.den_.exact_div(g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (den_.leading() != 1) {
    BigRational s = BigRational(1) / den_.leading();
    num_ *= s;
    den_ *= s;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) { return *this *= rhs.inverse(); }

std::string RationalFunction::to_string(std::string_view var) const {
  if (den_.is_one()) return num_.to_string(var);
  // Present the denominator with coprime integer coefficients.
  AlphaPoly d = den_.primitive();
  BigRational scale = d.leading() / den_.leading();
  AlphaPoly n = num_ * scale;
  return "(" + n.to_string(var) + ")/(" + d.to_string(var) + ")";
}

}  // namespace jetsym
