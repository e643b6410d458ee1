#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "commutant/gaussian.hpp"
#include "commutant/polynomial.hpp"

namespace commutant {

/// Sparse row over Q(i), entries sorted by column index.
using SparseVec = std::vector<std::pair<std::int32_t, GaussianRational>>;

inline SparseVec sparse_axpy(const SparseVec& a, const SparseVec& b,
                             const GaussianRational& c) {
  SparseVec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      GaussianRational v = b[j].second * c;
      if (!v.is_zero()) r.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      GaussianRational v = a[i].second + b[j].second * c;
      if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

struct SparseMatrixQ {
  std::int32_t ncols = 0;
  std::vector<SparseVec> rows;
};

/// Reduced-echelon set of sparse vectors over column indices; the canonical
/// (unique) reduced basis of the span. Columns are ordered by index, pivots
/// are the smallest indices.
class VecEchelon {
public:
  /// Reduces v against the basis; if a nonzero remainder survives it is
  /// normalized and inserted (and existing rows are back-reduced). Returns
  /// true if the rank grew.
  bool insert(SparseVec v) {
    reduce_in_place(v);
    if (v.empty()) return false;
    GaussianRational inv = v.front().second.inverse();
    for (auto& e : v) e.second = e.second * inv;
    for (auto& row : rows_) {
      GaussianRational c = value_at(row, v.front().first);
      if (!c.is_zero()) row = sparse_axpy(row, v, -c);
    }
    rows_.push_back(std::move(v));
    std::sort(rows_.begin(), rows_.end(),
              [](const SparseVec& a, const SparseVec& b) {
                return a.front().first < b.front().first;
              });
    return true;
  }

  void reduce_in_place(SparseVec& v) const {
    for (const auto& row : rows_) {
      if (v.empty()) return;
      GaussianRational c = value_at(v, row.front().first);
      if (!c.is_zero()) v = sparse_axpy(v, row, -c);
    }
  }

  const std::vector<SparseVec>& rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }

private:
  static GaussianRational value_at(const SparseVec& v, std::int32_t col) {
    auto it = std::lower_bound(
        v.begin(), v.end(), col,
        [](const auto& e, std::int32_t c) { return e.first < c; });
    if (it != v.end() && it->first == col) return it->second;
    return GaussianRational();
  }

  std::vector<SparseVec> rows_;  // sorted by pivot column, fully reduced
};

/// Exact kernel of a sparse matrix over Q(i), returned as the canonical
/// reduced-echelon basis of the nullspace (pivots = smallest column indices,
/// leading coefficients 1). Deterministic.
inline std::vector<SparseVec> kernel_exact(const SparseMatrixQ& m) {
  // forward elimination with a pivot-per-column map
  std::vector<std::int32_t> pivot_row(m.ncols, -1);
  std::vector<SparseVec> pivots;

  std::vector<std::size_t> order(m.rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.rows[a].size() < m.rows[b].size();
  });

  for (std::size_t oi : order) {
    SparseVec row = m.rows[oi];
    while (!row.empty()) {
      std::int32_t lead = row.front().first;
      std::int32_t pr = pivot_row[lead];
      if (pr < 0) break;
      row = sparse_axpy(row, pivots[pr], -row.front().second);
    }
    if (row.empty()) continue;
    GaussianRational inv = row.front().second.inverse();
    for (auto& e : row) e.second = e.second * inv;
    pivot_row[row.front().first] = std::int32_t(pivots.size());
    pivots.push_back(std::move(row));
  }

  // backward pass: clean pivot columns from all other pivot rows,
  // rightmost pivot first so each row is touched with final values only
  std::vector<std::int32_t> pivot_cols;
  for (std::int32_t c = 0; c < m.ncols; ++c)
    if (pivot_row[c] >= 0) pivot_cols.push_back(c);
  for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
    const SparseVec& prow = pivots[pivot_row[*it]];
    for (std::int32_t c2 : pivot_cols) {
      if (c2 >= *it) break;
      SparseVec& other = pivots[pivot_row[c2]];
      auto pos = std::lower_bound(
          other.begin(), other.end(), *it,
          [](const auto& e, std::int32_t c) { return e.first < c; });
      if (pos != other.end() && pos->first == *it) {
        GaussianRational c = pos->second;
        other = sparse_axpy(other, prow, -c);
      }
    }
  }

  // kernel vectors: one per free column
  std::vector<SparseVec> kernel;
  for (std::int32_t f = 0; f < m.ncols; ++f) {
    if (pivot_row[f] >= 0) continue;
    SparseVec k;
    for (std::int32_t c : pivot_cols) {
      if (c >= f) break;
      const SparseVec& prow = pivots[pivot_row[c]];
      auto pos = std::lower_bound(
          prow.begin(), prow.end(), f,
          [](const auto& e, std::int32_t cc) { return e.first < cc; });
      if (pos != prow.end() && pos->first == f)
        k.emplace_back(c, -pos->second);
    }
    k.emplace_back(f, GaussianRational(1));
    kernel.push_back(std::move(k));
  }

  // canonicalize the kernel basis itself
  VecEchelon ech;
  for (auto& k : kernel) ech.insert(std::move(k));
  return ech.rows();
}

/// Reduced-echelon basis of a set of polynomials under the global term
/// order, with optional history: each inserted polynomial is tracked as a
/// linear combination of the previously inserted ones, which yields syzygies
/// and span coordinates for free.
class PolyEchelon {
public:
  explicit PolyEchelon(bool track_history = false) : track_(track_history) {}

  struct InsertOutcome {
    bool added;
    /// when !added and history is on: coefficients c with
    /// inserted_k = sum_j c_j * inserted_j (j over previous insertions)
    std::vector<GaussianRational> dependency;
  };

  InsertOutcome insert(Polynomial p) {
    std::vector<GaussianRational> expr(track_ ? inserted_ + 1 : 0);
    if (track_) expr[inserted_] = GaussianRational(1);
    reduce_tracked(p, expr);
    ++inserted_;
    if (p.is_zero()) {
      InsertOutcome out{false, {}};
      if (track_) {
        // inserted = sum c_j inserted_j with the trailing 1 removed
        out.dependency.assign(expr.begin(), expr.end() - 1);
        for (auto& c : out.dependency) c = -c;
      }
      return out;
    }
    GaussianRational inv = p.leading_coefficient().inverse();
    p = p.scaled(inv);
    if (track_)
      for (auto& c : expr) c = c * inv;
    // back-reduce existing rows
    for (auto& row : rows_) {
      GaussianRational c = row.poly.coefficient(p.leading_monomial());
      if (!c.is_zero()) {
        row.poly.add_scaled(p, -c);
        if (track_) {
          row.expr.resize(std::max(row.expr.size(), expr.size()));
          for (std::size_t j = 0; j < expr.size(); ++j)
            row.expr[j] -= c * expr[j];
        }
      }
    }
    rows_.push_back({std::move(p), std::move(expr)});
    std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) {
      return a.poly.leading_monomial() > b.poly.leading_monomial();
    });
    return {true, {}};
  }

  /// Remainder of p modulo the span (the canonical normal form wrt the term
  /// order) plus, when tracking, the coordinates of p - remainder over the
  /// *inserted* items.
  std::pair<Polynomial, std::vector<GaussianRational>> reduce(
      Polynomial p) const {
    std::vector<GaussianRational> expr(track_ ? inserted_ : 0);
    reduce_tracked_const(p, expr);
    for (auto& c : expr) c = -c;
    return {std::move(p), std::move(expr)};
  }

  /// Coordinates of p in the row basis (row order), or nullopt if p is not
  /// in the span.
  std::optional<std::vector<GaussianRational>> coordinates(
      Polynomial p) const {
    std::vector<GaussianRational> coords(rows_.size());
    while (!p.is_zero()) {
      bool hit = false;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].poly.leading_monomial() == p.leading_monomial()) {
          GaussianRational c = p.leading_coefficient();
          coords[r] = c;
          p.add_scaled(rows_[r].poly, -c);
          hit = true;
          break;
        }
        if (rows_[r].poly.leading_monomial() < p.leading_monomial()) break;
      }
      if (!hit) return std::nullopt;
    }
    return coords;
  }

  std::vector<Polynomial> rows() const {
    std::vector<Polynomial> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.poly);
    return out;
  }

  /// History expression of row r over inserted items.
  const std::vector<GaussianRational>& row_expr(std::size_t r) const {
    return rows_[r].expr;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted_count() const { return inserted_; }

private:
  struct Row {
    Polynomial poly;
    std::vector<GaussianRational> expr;
  };

  void reduce_tracked(Polynomial& p, std::vector<GaussianRational>& expr) const {
    reduce_impl(p, track_ ? &expr : nullptr, true);
  }
  void reduce_tracked_const(Polynomial& p,
                            std::vector<GaussianRational>& expr) const {
    reduce_impl(p, track_ ? &expr : nullptr, false);
  }

  void reduce_impl(Polynomial& p, std::vector<GaussianRational>* expr,
                   bool /*inserting*/) const {
    // rows_ are sorted by leading monomial descending and fully reduced, so
    // one pass suffices
    for (std::size_t r = 0; r < rows_.size() && !p.is_zero(); ++r) {
      GaussianRational c = p.coefficient(rows_[r].poly.leading_monomial());
      if (c.is_zero()) continue;
      p.add_scaled(rows_[r].poly, -c);
      if (expr) {
        for (std::size_t j = 0; j < rows_[r].expr.size(); ++j)
          (*expr)[j] -= c * rows_[r].expr[j];
      }
    }
  }

  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
};

}  // namespace commutant
