#include <algorithm>
#include <numeric>

#include "jetsym/coeffield.hpp"

namespace jetsym {
namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

using PolyRow = std::vector<AlphaPoly>;

// Fraction-free forward elimination over Q[alpha]. The last `extra` columns
// never receive pivots (the augmented right-hand side). Returns pivot columns;
// rows [0, rank) hold the echelon form afterwards.
std::vector<std::size_t> bareiss(std::vector<PolyRow>& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t width = m[0].size();
  AlphaPoly prev(BigRational(1));
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.size(); ++c) {
    std::size_t best = m.size();
    std::size_t best_deg = 0, best_fill = 0;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      std::size_t deg = *m[i][c].degree();
      std::size_t fill = 0;
      for (std::size_t j = c; j < width; ++j) fill += !m[i][j].is_zero();
      if (best == m.size() || deg < best_deg || (deg == best_deg && fill < best_fill)) {
        best = i;
        best_deg = deg;
        best_fill = fill;
      }
    }
    if (best == m.size()) continue;
    std::swap(m[r], m[best]);
    const AlphaPoly pivot = m[r][c];
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      AlphaPoly factor = m[i][c];
      for (std::size_t j = c + 1; j < width; ++j) {
        bool own = !m[i][j].is_zero();
        bool other = !factor.is_zero() && !m[r][j].is_zero();
        if (!own && !other) continue;
        AlphaPoly v = own ? pivot * m[i][j] : AlphaPoly();
        if (other) v -= factor * m[r][j];
        m[i][j] = v.is_zero() ? AlphaPoly() : v.exact_div(prev);
      }
      m[i][c] = AlphaPoly();
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

struct Block {
  std::vector<std::size_t> cols;  // global column ids, ascending
  std::vector<std::size_t> rows;  // global row ids
};

std::vector<Block> split_components(const SparseRFMatrix& a) {
  DisjointSets sets(a.cols);
  std::vector<bool> used(a.cols, false);
  for (const auto& row : a.rows) {
    for (const auto& [c, v] : row) {
      used[c] = true;
      sets.unite(c, row.front().first);
    }
  }
  std::vector<std::size_t> block_of(a.cols, a.cols);
  std::vector<Block> blocks;
  for (std::size_t c = 0; c < a.cols; ++c) {
    if (!used[c]) continue;
    std::size_t root = sets.find(c);
    if (block_of[root] == a.cols) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].cols.push_back(c);
  }
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].empty()) continue;
    blocks[block_of[sets.find(a.rows[i].front().first)]].rows.push_back(i);
  }
  return blocks;
}

// Clears denominators row by row so the block has entries in Q[alpha].
std::vector<PolyRow> dense_block(const SparseRFMatrix& a, const RFVector* b, const Block& blk) {
  std::vector<std::size_t> local(a.cols, 0);
  for (std::size_t k = 0; k < blk.cols.size(); ++k) local[blk.cols[k]] = k;
  const std::size_t width = blk.cols.size() + (b ? 1 : 0);
  std::vector<PolyRow> out;
  out.reserve(blk.rows.size());
  for (std::size_t i : blk.rows) {
    AlphaPoly lcm(BigRational(1));
    auto absorb = [&](const RationalFunction& v) {
      if (v.den().is_one()) return;
      AlphaPoly g = AlphaPoly::gcd(lcm, v.den());
      lcm = lcm * v.den().exact_div(g);
    };
    for (const auto& [c, v] : a.rows[i]) absorb(v);
    if (b) absorb((*b)[i]);
    PolyRow row(width);
    for (const auto& [c, v] : a.rows[i]) {
      if (v.is_zero()) continue;
      row[local[c]] = v.num() * lcm.exact_div(v.den());
    }
    if (b && !(*b)[i].is_zero()) row.back() = (*b)[i].num() * lcm.exact_div((*b)[i].den());
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

LinearSolution solve_linear(const SparseRFMatrix& a, const RFVector& b) {
  if (b.size() != a.rows.size()) throw std::invalid_argument("solve_linear: rhs length does not match row count");
  for (const auto& row : a.rows)
    for (const auto& [c, v] : row)
      if (c >= a.cols) throw std::invalid_argument("solve_linear: column index out of range");

  LinearSolution sol;
  sol.particular.assign(a.cols, RationalFunction());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    bool empty = std::all_of(a.rows[i].begin(), a.rows[i].end(), [](const auto& e) { return e.second.is_zero(); });
    if (empty && !b[i].is_zero()) return sol;
  }

  // Drop explicit zeros so component detection sees the true sparsity pattern.
  SparseRFMatrix clean{a.cols, {}};
  RFVector clean_b;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    std::vector<std::pair<std::size_t, RationalFunction>> row;
    for (const auto& e : a.rows[i])
      if (!e.second.is_zero()) row.push_back(e);
    if (row.empty()) continue;
    clean.rows.push_back(std::move(row));
    clean_b.push_back(b[i]);
  }

  std::vector<bool> covered(a.cols, false);
  for (const Block& blk : split_components(clean)) {
    auto m = dense_block(clean, &clean_b, blk);
    const std::size_t n = blk.cols.size();
    auto pivots = bareiss(m, n);
    const std::size_t rank = pivots.size();
    for (std::size_t i = rank; i < m.size(); ++i)
      if (!m[i][n].is_zero()) return LinearSolution{};

    // Gauss-Jordan finish over the field.
    std::vector<RFVector> rref(rank, RFVector(n + 1));
    for (std::size_t i = 0; i < rank; ++i) {
      RationalFunction inv = RationalFunction(m[i][pivots[i]]).inverse();
      for (std::size_t j = pivots[i]; j <= n; ++j)
        if (!m[i][j].is_zero()) rref[i][j] = RationalFunction(m[i][j]) * inv;
    }
    for (std::size_t i = rank; i-- > 0;) {
      for (std::size_t k = 0; k < i; ++k) {
        RationalFunction f = rref[k][pivots[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = pivots[i]; j <= n; ++j)
          if (!rref[i][j].is_zero()) rref[k][j] -= f * rref[i][j];
      }
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < rank; ++i) {
      is_pivot[pivots[i]] = true;
      sol.particular[blk.cols[pivots[i]]] = rref[i][n];
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      RFVector v(a.cols);
      v[blk.cols[f]] = RationalFunction(1);
      for (std::size_t i = 0; i < rank; ++i)
        if (!rref[i][f].is_zero()) v[blk.cols[pivots[i]]] = -rref[i][f];
      sol.nullspace.push_back(std::move(v));
    }
    for (std::size_t c : blk.cols) covered[c] = true;
  }
  // Columns touched by no equation are unconstrained.
  for (std::size_t c = 0; c < a.cols; ++c) {
    if (covered[c]) continue;
    RFVector v(a.cols);
    v[c] = RationalFunction(1);
    sol.nullspace.push_back(std::move(v));
  }
  std::sort(sol.nullspace.begin(), sol.nullspace.end(), [](const RFVector& x, const RFVector& y) {
    auto lead = [](const RFVector& v) {
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) return i;
      return v.size();
    };
    return lead(x) < lead(y);
  });
  sol.consistent = true;
  return sol;
}

LinearSolution solve_linear(const RFMatrix& a, const RFVector& b) {
  SparseRFMatrix s;
  s.cols = a.empty() ? 0 : a[0].size();
  for (const auto& row : a) {
    if (row.size() != s.cols) throw std::invalid_argument("solve_linear: ragged matrix");
    std::vector<std::pair<std::size_t, RationalFunction>> sparse;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) sparse.emplace_back(j, row[j]);
    s.rows.push_back(std::move(sparse));
  }
  return solve_linear(s, b);
}

std::vector<std::size_t> independent_columns(const SparseRFMatrix& a) {
  SparseRFMatrix clean{a.cols, {}};
  for (const auto& row : a.rows) {
    std::vector<std::pair<std::size_t, RationalFunction>> r;
    for (const auto& e : row)
      if (!e.second.is_zero()) r.push_back(e);
    if (!r.empty()) clean.rows.push_back(std::move(r));
  }
  std::vector<std::size_t> out;
  for (const Block& blk : split_components(clean)) {
    auto m = dense_block(clean, nullptr, blk);
    for (std::size_t p : bareiss(m, blk.cols.size())) out.push_back(blk.cols[p]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jetsym
