#pragma once

// Brute-force dense reference implementations used as independent oracles in
// tests. Deliberately naive: no sparsity, no blocks, no weight filtering, no
// modular arithmetic. Any agreement with the production path is therefore a
// genuine cross-check of two different routes.

#include <vector>

#include "commutant/chain.hpp"
#include "commutant/invariants.hpp"
#include "commutant/sparse_linalg.hpp"

namespace oracle {

using commutant::ChainSpec;
using commutant::GaussianRational;
using commutant::Monomial;
using commutant::Polynomial;
using commutant::SparseMatrixQ;
using commutant::SparseVec;

using DenseMatrix = std::vector<std::vector<GaussianRational>>;

inline DenseMatrix to_dense(const SparseMatrixQ& m) {
  DenseMatrix d(m.rows.size(),
                std::vector<GaussianRational>(std::size_t(m.ncols)));
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (const auto& [c, v] : m.rows[r]) d[r][std::size_t(c)] = v;
  return d;
}

/// Gauss-Jordan kernel of a dense matrix; canonical reduced echelon basis.
inline std::vector<std::vector<GaussianRational>> dense_kernel(DenseMatrix a,
                                                               std::size_t ncols) {
  std::vector<int> pivot_of_col(ncols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
    std::size_t sel = rank;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[rank], a[sel]);
    GaussianRational inv = a[rank][col].inverse();
    for (auto& v : a[rank]) v = v * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      GaussianRational f = a[r][col];
      for (std::size_t c = 0; c < ncols; ++c) a[r][c] -= f * a[rank][c];
    }
    pivot_of_col[col] = int(rank);
    ++rank;
  }
  std::vector<std::vector<GaussianRational>> kernel;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<GaussianRational> k(ncols);
    k[f] = GaussianRational(1);
    for (std::size_t c = 0; c < ncols; ++c)
      if (pivot_of_col[c] >= 0) k[c] = -a[std::size_t(pivot_of_col[c])][f];
    kernel.push_back(std::move(k));
  }
  // canonical reduced echelon of the kernel set (pivots are the first
  // nonzero entries; the construction above already gives distinct pivots
  // per free column but possibly unsorted leads)
  std::vector<std::vector<GaussianRational>> rows;
  for (auto& k : kernel) {
    for (const auto& row : rows) {
      std::size_t lead = 0;
      while (lead < ncols && row[lead].is_zero()) ++lead;
      if (lead < ncols && !k[lead].is_zero()) {
        GaussianRational f = k[lead];
        for (std::size_t c = 0; c < ncols; ++c) k[c] -= f * row[c];
      }
    }
    std::size_t lead = 0;
    while (lead < ncols && k[lead].is_zero()) ++lead;
    if (lead == ncols) continue;
    GaussianRational inv = k[lead].inverse();
    for (auto& v : k) v = v * inv;
    for (auto& row : rows) {
      if (!row[lead].is_zero()) {
        GaussianRational f = row[lead];
        for (std::size_t c = 0; c < ncols; ++c) row[c] -= f * k[c];
      }
    }
    rows.push_back(std::move(k));
  }
  std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
    std::size_t lx = 0, ly = 0;
    while (lx < ncols && x[lx].is_zero()) ++lx;
    while (ly < ncols && y[ly].is_zero()) ++ly;
    return lx < ly;
  });
  return rows;
}

/// Degree-k invariant space by brute force: all monomials, all subalgebra
/// coordinates as constraints, dense elimination.
inline std::vector<Polynomial> dense_invariant_space(const ChainSpec& chain,
                                                     int k) {
  const std::size_t n = chain.algebra().dim();
  std::vector<Monomial> monos;
  Monomial cur(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos,
                                                       unsigned rem) {
    if (pos + 1 == n) {
      cur.set_deg(pos, rem);
      monos.push_back(cur);
      cur.set_deg(pos, 0);
      return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
      cur.set_deg(pos, e);
      rec(pos + 1, rem - e);
    }
    cur.set_deg(pos, 0);
  };
  rec(0, unsigned(k));
  std::sort(monos.begin(), monos.end(), commutant::MonomialDesc{});

  std::map<std::pair<int, Monomial>, std::vector<GaussianRational>> rows;
  for (std::size_t c = 0; c < monos.size(); ++c) {
    Polynomial xm = Polynomial::monomial_term(monos[c], GaussianRational(1));
    for (int u : chain.subalgebra()) {
      Polynomial img = commutant::bracket_with_coordinate(u, xm, chain.algebra());
      for (const auto& t : img.terms()) {
        auto& row = rows[{u, t.mono}];
        row.resize(monos.size());
        row[c] += t.coeff;
      }
    }
  }
  DenseMatrix mat;
  for (auto& [key, row] : rows) {
    row.resize(monos.size());
    mat.push_back(row);
  }
  auto kernel = dense_kernel(std::move(mat), monos.size());
  std::vector<Polynomial> out;
  for (const auto& kv : kernel) {
    std::vector<Polynomial::Term> raw;
    for (std::size_t c = 0; c < kv.size(); ++c)
      if (!kv[c].is_zero()) raw.push_back({monos[c], kv[c]});
    out.push_back(Polynomial::normal_form(n, std::move(raw)));
  }
  return out;
}

}  // namespace oracle
