#include "jetsym/hierarchy.hpp"

namespace jetsym {
namespace {

RationalFunction lin(long c0, long c1) {
  return RationalFunction(AlphaPoly(std::vector<BigRational>{BigRational(c0), BigRational(c1)}));
}

const RationalFunction& two_alpha_minus_one() {
  static const RationalFunction v = lin(-1, 2);
  return v;
}

DiffPoly w(std::size_t i = 0) { return DiffPoly::jet(0, i); }
DiffPoly z(std::size_t i = 0) { return DiffPoly::jet(1, i); }

const VarNames& fs_names() {
  static const VarNames names{{"w", "z"}, "alpha"};
  return names;
}

}  // namespace

HierarchyObstruction::HierarchyObstruction(std::size_t step, const NonlocalObstruction& cause)
    : std::runtime_error("nonlocal term while generating member " + std::to_string(step)),
      step_(step),
      remainder_(cause.remainder()),
      row_(cause.row()),
      col_(cause.col()) {}

std::pair<EvoField, EvoField> fs_seed(const std::optional<BigRational>& alpha) {
  const RationalFunction a = RationalFunction::alpha();
  const RationalFunction inv = two_alpha_minus_one().inverse();
  EvoField k1({w(1), z(1)});
  DiffPoly k2w = -inv * (w(2) + RationalFunction(8) * w() * w(1)) + RationalFunction(2) * z() * z(1);
  // K_2 is the time translation F/(1 - 2 alpha); note the + on the 4z(...) term.
  DiffPoly k2z = z(2) + RationalFunction(4) * w() * z(1) +
                 (RationalFunction(4) * inv) * z() * (a * w(1) + lin(1, 2) * w() * w()) -
                 RationalFunction(2) * z().pow(3);
  EvoField k2({k2w, k2z});
  if (alpha) return {specialize(k1, *alpha, fs_names()), specialize(k2, *alpha, fs_names())};
  return {k1, k2};
}

OperatorMatrix fs_recursion_matrix() {
  OperatorMatrix r = OperatorMatrix::zero(2);
  r.entries[0][0] = OpEntry({{1, 1}, {RationalFunction(4) * w(), 0}, {RationalFunction(4) * w(1), -1}});
  r.entries[1][0] = OpEntry({{RationalFunction(2) * (z(1) - RationalFunction(2) * w() * z()), -1}});
  r.entries[1][1] = OpEntry({{1, 1}, {RationalFunction(2) * w(), 0}});
  return r;
}

OperatorMatrix fs_m_matrix() {
  const RationalFunction a = RationalFunction::alpha();
  const RationalFunction c = two_alpha_minus_one();
  const RationalFunction pre = -c.inverse();
  OperatorMatrix m = OperatorMatrix::zero(2);

  DiffPoly zero_order = RationalFunction(2) * (a * (RationalFunction(6) * w(1) + RationalFunction(8) * w() * w()) -
                                               c * z() * z());
  DiffPoly nonlocal = RationalFunction(4) * (a * (w(2) + RationalFunction(8) * w() * w(1)) - c * z() * z(1));
  m.entries[0][0] = OpEntry({{DiffPoly(pre * a), 2},
                             {pre * (RationalFunction(8) * a) * w(), 1},
                             {pre * zero_order, 0},
                             {pre * nonlocal, -1}});
  m.entries[0][1] = OpEntry({{z(), 1}, {z(1), 0}});

  const RationalFunction ratio = RationalFunction(2) * a / c;
  m.entries[1][0] = OpEntry({{ratio * z(), 1},
                             {(RationalFunction(16) * a / c) * w() * z(), 0},
                             {RationalFunction(4) * (ratio * (w(1) + RationalFunction(4) * w() * w()) * z() - z().pow(3)), -1}});
  m.entries[1][1] = OpEntry({{RationalFunction(-2) * z() * z(), 0}});
  return m;
}

EvoField fs_step(const EvoField& prev, const EvoField& prevprev, const OperatorMatrix& r, const OperatorMatrix& m) {
  return apply_matrix(r, prev) + apply_matrix(m, prevprev);
}

EvoField fs_step(const EvoField& prev, const EvoField& prevprev) {
  static const OperatorMatrix r = fs_recursion_matrix();
  static const OperatorMatrix m = fs_m_matrix();
  return fs_step(prev, prevprev, r, m);
}

Hierarchy fs_hierarchy(std::size_t n, const std::optional<BigRational>& alpha) {
  if (n < 1) throw std::invalid_argument("hierarchy length must be at least 1");
  Hierarchy h;
  h.system = alpha ? specialize(systems::fs(), *alpha) : systems::fs();
  h.parameter = "alpha";
  h.specialization = alpha;

  auto [k1, k2] = fs_seed(alpha);
  OperatorMatrix r = fs_recursion_matrix();
  OperatorMatrix m = fs_m_matrix();
  if (alpha) {
    r = r.specialize(*alpha, fs_names());
    m = m.specialize(*alpha, fs_names());
  }

  auto record = [&](EvoField k, std::string how) {
    const std::size_t index = h.members.size() + 1;
    ExactnessCertificate cert = integrate_dx(k[0]);
    if (!cert.exact()) throw HierarchyObstruction(index, NonlocalObstruction(cert.remainder, 0, 0));
    h.members.push_back(std::move(k));
    h.provenance.push_back(std::move(how));
    h.certificates.push_back(std::move(cert.antiderivative));
  };
  record(k1, "seed");
  if (n >= 2) record(k2, "seed");
  for (std::size_t j = 3; j <= n; ++j) {
    EvoField next;
    try {
      next = fs_step(h.members[j - 2], h.members[j - 3], r, m);
    } catch (const NonlocalObstruction& e) {
      throw HierarchyObstruction(j, e);
    }
    record(std::move(next), "recursion(" + std::to_string(j - 1) + "," + std::to_string(j - 2) + ")");
  }
  return h;
}

TriangularCoeffs ts1_coeffs(std::size_t n) {
  const RationalFunction a = RationalFunction::alpha();
  const RationalFunction half_gap = (RationalFunction(1) - a) / RationalFunction(2);
  const DiffPoly v = DiffPoly::jet(1, 0);
  TriangularCoeffs tc;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == 1) {
      tc.b.emplace_back(1);
      tc.q.emplace_back();
    } else if (k == 2) {
      tc.b.push_back(a);
      tc.q.push_back(v * v);
    } else {
      tc.b.push_back(tc.b[k - 2] - half_gap * tc.b[k - 3]);
      tc.q.push_back(total_x_derivative(tc.q[k - 2]) - half_gap * total_x_derivative(tc.q[k - 3], 2) +
                     v * DiffPoly::jet(1, k - 2));
    }
  }
  return tc;
}

Hierarchy ts1_hierarchy(std::size_t n, const std::optional<BigRational>& a) {
  if (n < 1) throw std::invalid_argument("hierarchy length must be at least 1");
  Hierarchy h;
  h.system = a ? specialize(systems::ts1(), *a) : systems::ts1();
  h.parameter = "a";
  h.specialization = a;
  TriangularCoeffs tc = ts1_coeffs(n);
  for (std::size_t k = 1; k <= n; ++k) {
    EvoField g({tc.b[k - 1] * DiffPoly::jet(0, k) + tc.q[k - 1], DiffPoly::jet(1, k)});
    RationalFunction bk = tc.b[k - 1];
    if (a) {
      g = specialize(g, *a, h.system.names);
      bk = RationalFunction(bk.eval(*a, "a"));
    }
    h.members.push_back(std::move(g));
    h.b.push_back(std::move(bk));
    h.provenance.push_back(k <= 2 ? "seed" : "recursion(" + std::to_string(k - 1) + "," + std::to_string(k - 2) + ")");
  }
  return h;
}

EvoField scaling_symmetry(const std::optional<BigRational>& alpha) {
  auto [k1, k2] = fs_seed();
  EvoField s = (RationalFunction(2) * lin(1, -2) * DiffPoly::t()) * k2 + DiffPoly::x() * k1 + EvoField({w(), z()});
  return alpha ? specialize(s, *alpha, fs_names()) : s;
}

StructuralForm structural_check(const EvoField& k, std::size_t j) {
  if (k.size() != 2) throw std::invalid_argument("structural_check expects a two-component field");
  if (j < 1) throw std::invalid_argument("structural_check: order must be positive");
  RationalFunction lead[2];
  for (std::size_t c = 0; c < 2; ++c) {
    const Monomial leading = Monomial::of(Generator::jet(c, j));
    for (const auto& [m, coeff] : k[c].terms()) {
      if (m == leading) {
        lead[c] = coeff;
        continue;
      }
      if (m.has_xt()) throw StructuralViolation("explicit x or t dependence", c, m);
      if (m.is_one()) throw StructuralViolation("free term in tail", c, m);
      if (m.twice_jet_degree() == 2) throw StructuralViolation("linear term in tail", c, m);
      if (auto o = m.max_jet_order(); o && *o >= j)
        throw StructuralViolation("tail term of order " + std::to_string(*o) + " >= " + std::to_string(j), c, m);
    }
  }
  return {lead[0], lead[1]};
}

}  // namespace jetsym
