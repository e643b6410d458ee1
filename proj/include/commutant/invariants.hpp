#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "commutant/chain.hpp"
#include "commutant/kernel_solver.hpp"
#include "commutant/parallel.hpp"
#include "commutant/sparse_linalg.hpp"

namespace commutant {

struct InvariantOptions {
  /// Hard cap on the number of monomial columns at one degree.
  unsigned long long monomial_budget = 2'000'000ull;
  SolverOptions solver;
  int threads = 1;
};

/// Canonical basis of the degree-k invariant space. Rows are in reduced
/// echelon form with respect to the global term order (unique for the
/// space); bidegree_split groups row indices by their grading component set
/// (a singleton for bidegree-homogeneous rows, composite otherwise).
struct DegreeBasis {
  int degree = 0;
  std::vector<Polynomial> rows;
  std::map<std::set<Bidegree>, std::vector<std::size_t>> bidegree_split;

  std::size_t dimension() const { return rows.size(); }
};

struct DegreeDiagnostics {
  int degree = 0;
  std::size_t dimension = 0;
  std::size_t decomposable_rank = 0;
  std::size_t indecomposable_count = 0;
  unsigned long long columns = 0;
  bool from_cache = false;
};

struct GradedCommutant {
  int max_degree = 0;
  std::map<int, DegreeBasis> per_degree;
  std::map<int, std::vector<Polynomial>> indecomposables;
  std::vector<DegreeDiagnostics> diagnostics;
  /// set when a degree failed on the monomial budget; lower degrees are
  /// still populated
  std::optional<std::pair<int, std::string>> resource_failure;
};

namespace detail {

inline unsigned long long count_monomials(std::size_t nvars, unsigned k,
                                          unsigned long long cap) {
  // binom(nvars + k - 1, k), saturating at > cap
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), nvars + k - 1, k);
  if (b > mpz_class(std::to_string(cap))) return cap + 1;
  return b.get_ui();
}

/// All degree-k exponent vectors over the given variable subset, combined
/// into n-variable monomials, sorted descending by term order.
inline void enumerate_on_subset(std::size_t nvars,
                                const std::vector<int>& vars, unsigned k,
                                std::vector<Monomial>& out) {
  Monomial cur(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos,
                                                       unsigned rem) {
    if (pos + 1 == vars.size()) {
      cur.set_deg(vars[pos], rem);
      out.push_back(cur);
      cur.set_deg(vars[pos], 0);
      return;
    }
    for (unsigned e = 0; e <= rem; ++e) {
      cur.set_deg(vars[pos], e);
      rec(pos + 1, rem - e);
    }
    cur.set_deg(vars[pos], 0);
  };
  if (!vars.empty() || k == 0) {
    if (vars.empty()) {
      out.push_back(cur);
    } else {
      rec(0, k);
    }
  }
}

struct ChainAnalysis {
  /// constraint operators preserve bidegree blocks
  bool bidegree_blocks = false;
  /// subalgebra coordinates acting diagonally on every coordinate, with
  /// their weight vectors
  std::vector<std::pair<int, std::vector<GaussianRational>>> diagonal;
  /// non-diagonal constraint coordinates generating the subalgebra together
  /// with the diagonal ones
  std::vector<int> constraints;
};

inline ChainAnalysis analyze_chain(const ChainSpec& chain) {
  const auto& alg = chain.algebra();
  const std::size_t n = alg.dim();
  ChainAnalysis a;

  a.bidegree_blocks = true;
  for (int u : chain.subalgebra()) {
    for (std::size_t v = 0; v < n && a.bidegree_blocks; ++v) {
      if (chain.in_subalgebra(int(v))) continue;
      for (const auto& t : alg.bracket_of(u, int(v)))
        if (chain.in_subalgebra(t.target)) a.bidegree_blocks = false;
    }
  }

  for (int u : chain.subalgebra()) {
    std::vector<GaussianRational> w(n);
    bool diag = true;
    for (std::size_t v = 0; v < n && diag; ++v) {
      auto terms = alg.bracket_of(u, int(v));
      if (terms.empty()) continue;
      if (terms.size() == 1 && terms[0].target == int(v))
        w[v] = terms[0].coeff;
      else
        diag = false;
    }
    if (diag) a.diagonal.emplace_back(u, std::move(w));
  }

  // greedy generating subset: kernels of a generating set pin the kernel of
  // the whole subalgebra ({a,p}=0 and {b,p}=0 force {{a,b},p}=0 by Jacobi)
  VecEchelon closure;
  auto vec_of = [&](int idx) {
    SparseVec v{{std::int32_t(idx), GaussianRational(1)}};
    return v;
  };
  std::vector<SparseVec> members;
  auto close_under_brackets = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<SparseVec> fresh;
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          // bracket of two subalgebra-span vectors
          std::map<std::int32_t, GaussianRational> acc;
          for (const auto& [vi, ci] : members[i])
            for (const auto& [vj, cj] : members[j])
              for (const auto& t : alg.bracket_of(vi, vj))
                acc[t.target] += ci * cj * t.coeff;
          SparseVec br;
          for (auto& [c, v] : acc)
            if (!v.is_zero()) br.emplace_back(c, v);
          if (!br.empty() && closure.insert(br)) {
            fresh.push_back(br);
            grew = true;
          }
        }
      }
      for (auto& f : fresh) members.push_back(std::move(f));
    }
  };
  for (const auto& [u, w] : a.diagonal) {
    SparseVec v = vec_of(u);
    if (closure.insert(v)) members.push_back(v);
  }
  close_under_brackets();
  for (int u : chain.subalgebra()) {
    if (closure.rank() == chain.subalgebra().size()) break;
    SparseVec v = vec_of(u);
    if (closure.insert(v)) {
      members.push_back(v);
      a.constraints.push_back(u);
      close_under_brackets();
    }
  }
  return a;
}

/// Monomial weight under one diagonal coordinate.
inline GaussianRational weight_of(const Monomial& m,
                                  const std::vector<GaussianRational>& w) {
  GaussianRational s;
  for (std::size_t v = 0; v < m.nvars(); ++v) {
    unsigned e = m.deg(v);
    if (e && !w[v].is_zero()) s += w[v] * GaussianRational(long(e));
  }
  return s;
}

}  // namespace detail

/// The exact kernel of p -> ({x_u, p})_{u in S} on degree-k homogeneous
/// polynomials, as the canonical reduced-echelon basis. Solved per bidegree
/// block when the complement is ad(S)-invariant, with zero-weight column
/// filtering for diagonally-acting subalgebra coordinates. Every returned
/// row is re-verified against all subalgebra coordinates post hoc,
/// independently of the solver path.
inline DegreeBasis invariant_space(const ChainSpec& chain, int k,
                                   const InvariantOptions& opts = {},
                                   SolverStats* stats = nullptr) {
  if (k < 1) throw std::invalid_argument("invariant_space: degree must be >= 1");
  const auto& alg = chain.algebra();
  const std::size_t n = alg.dim();

  unsigned long long cols =
      detail::count_monomials(n, unsigned(k), opts.monomial_budget);
  if (cols > opts.monomial_budget)
    throw ResourceError("monomial budget at degree " + std::to_string(k), cols,
                        opts.monomial_budget);

  detail::ChainAnalysis an = detail::analyze_chain(chain);

  // column blocks
  std::vector<std::vector<Monomial>> blocks;
  if (an.bidegree_blocks) {
    std::vector<int> sub = chain.subalgebra();
    std::vector<int> comp = chain.complement();
    for (int a = k; a >= 0; --a) {
      int b = k - a;
      std::vector<Monomial> subpart, comppart;
      detail::enumerate_on_subset(n, sub, unsigned(a), subpart);
      detail::enumerate_on_subset(n, comp, unsigned(b), comppart);
      std::vector<Monomial> block;
      block.reserve(subpart.size() * comppart.size());
      for (const auto& ms : subpart)
        for (const auto& mc : comppart) block.push_back(ms * mc);
      if (!block.empty()) blocks.push_back(std::move(block));
    }
  } else {
    std::vector<int> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = int(v);
    std::vector<Monomial> block;
    detail::enumerate_on_subset(n, all, unsigned(k), block);
    blocks.push_back(std::move(block));
  }

  std::vector<std::vector<Polynomial>> block_rows(blocks.size());
  parallel_for(blocks.size(), opts.threads, [&](std::size_t bi) {
    std::vector<Monomial>& cols_m = blocks[bi];
    // zero-weight filter for each diagonal coordinate
    for (const auto& [u, w] : an.diagonal) {
      std::vector<Monomial> keep;
      keep.reserve(cols_m.size());
      for (auto& m : cols_m)
        if (detail::weight_of(m, w).is_zero()) keep.push_back(std::move(m));
      cols_m = std::move(keep);
      if (cols_m.empty()) break;
    }
    if (cols_m.empty()) return;
    std::sort(cols_m.begin(), cols_m.end(), MonomialDesc{});

    std::map<std::pair<int, Monomial>, SparseVec,
             std::less<std::pair<int, Monomial>>>
        rows;
    for (std::size_t c = 0; c < cols_m.size(); ++c) {
      Polynomial xm = Polynomial::monomial_term(cols_m[c], GaussianRational(1));
      for (int u : an.constraints) {
        Polynomial img = bracket_with_coordinate(u, xm, alg);
        for (const auto& t : img.terms())
          rows[{u, t.mono}].emplace_back(std::int32_t(c), t.coeff);
      }
    }

    SparseMatrixQ mat;
    mat.ncols = std::int32_t(cols_m.size());
    mat.rows.reserve(rows.size());
    for (auto& [key, row] : rows) {
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      mat.rows.push_back(std::move(row));
    }

    std::vector<SparseVec> kern = kernel_basis(mat, opts.solver, stats);
    for (const auto& kv : kern) {
      std::vector<Polynomial::Term> raw;
      raw.reserve(kv.size());
      for (const auto& [c, v] : kv) raw.push_back({cols_m[c], v});
      block_rows[bi].push_back(Polynomial::normal_form(n, std::move(raw)));
    }
  });

  // canonical union; in block mode supports are disjoint and already echelon,
  // but run the reduction anyway so the unsplit path is covered too
  PolyEchelon ech;
  for (const auto& br : block_rows)
    for (const auto& p : br) ech.insert(p);

  DegreeBasis basis;
  basis.degree = k;
  basis.rows = ech.rows();

  for (const auto& row : basis.rows) {
    if (!is_invariant(row, chain))
      throw InternalError(
          "invariant_space: solver row failed exact post-hoc invariance");
  }

  for (std::size_t r = 0; r < basis.rows.size(); ++r)
    basis.bidegree_split[bidegree_components(basis.rows[r], chain)].push_back(r);
  return basis;
}

namespace detail {

struct GeneratorRef {
  int degree;
  std::size_t index;
};

/// Multisets of lower-degree indecomposables with total degree k, as
/// products. Enumeration order is deterministic.
inline std::vector<Polynomial> decomposable_products(
    const GradedCommutant& lower, int k, std::size_t nvars) {
  std::vector<GeneratorRef> gens;
  for (const auto& [d, list] : lower.indecomposables) {
    if (d >= k) continue;
    for (std::size_t i = 0; i < list.size(); ++i)
      gens.push_back({d, i});
  }
  std::vector<Polynomial> out;
  std::vector<GeneratorRef> pick;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int rem) {
    if (rem == 0) {
      Polynomial p = Polynomial::constant(nvars, GaussianRational(1));
      for (const auto& g : pick)
        p = p * lower.indecomposables.at(g.degree)[g.index];
      out.push_back(std::move(p));
      return;
    }
    for (std::size_t gi = start; gi < gens.size(); ++gi) {
      if (gens[gi].degree > rem) continue;
      pick.push_back(gens[gi]);
      rec(gi, rem - gens[gi].degree);
      pick.pop_back();
    }
  };
  rec(0, k);
  return out;
}

}  // namespace detail

/// Reduced-echelon basis of the span of all products of lower-degree
/// indecomposables with total degree k; a subspace of invariant_space(k).
inline DegreeBasis decomposable_span(const ChainSpec& chain,
                                     const GradedCommutant& lower, int k,
                                     const InvariantOptions& opts = {}) {
  (void)opts;
  PolyEchelon ech;
  for (auto& p : detail::decomposable_products(lower, k, chain.algebra().dim()))
    ech.insert(std::move(p));
  DegreeBasis basis;
  basis.degree = k;
  basis.rows = ech.rows();
  for (std::size_t r = 0; r < basis.rows.size(); ++r)
    basis.bidegree_split[bidegree_components(basis.rows[r], chain)].push_back(r);
  return basis;
}

/// Canonical complement of the decomposable span inside the invariant
/// space: invariant rows echelon-reduced against the span, survivors
/// inter-reduced. Count = dim invariant - dim decomposable.
inline std::vector<Polynomial> indecomposable_generators(
    const ChainSpec& chain, int k, const GradedCommutant& lower,
    const DegreeBasis& invariants, const InvariantOptions& opts = {}) {
  (void)opts;
  PolyEchelon ech;
  for (auto& p : detail::decomposable_products(lower, k, chain.algebra().dim()))
    ech.insert(std::move(p));
  std::size_t dec_rank = ech.rank();
  std::vector<Polynomial> out;
  for (const auto& row : invariants.rows) {
    Polynomial rem = ech.reduce(row).first;
    if (rem.is_zero()) continue;
    ech.insert(rem);
    out.push_back(std::move(rem));
  }
  // inter-reduce the survivors into their own canonical echelon set
  PolyEchelon canon;
  for (auto& p : out) canon.insert(std::move(p));
  auto rows = canon.rows();
  if (rows.size() != invariants.rows.size() - dec_rank)
    throw InternalError("indecomposable_generators: rank bookkeeping mismatch");
  return rows;
}

using BasisProvider = std::function<DegreeBasis(const ChainSpec&, int)>;

/// Runs invariant_space and indecomposable extraction for k = 1..zeta.
/// `provider` may serve cached bases; when empty the spaces are computed
/// directly. On a budget blow-up the failure is recorded and lower-degree
/// results are preserved.
inline GradedCommutant sweep(const ChainSpec& chain, int zeta,
                             const InvariantOptions& opts = {},
                             SolverStats* stats = nullptr,
                             const BasisProvider& provider = {}) {
  if (zeta < 1) throw std::invalid_argument("sweep: zeta must be >= 1");
  GradedCommutant out;
  out.max_degree = zeta;
  for (int k = 1; k <= zeta; ++k) {
    DegreeDiagnostics diag;
    diag.degree = k;
    try {
      diag.columns = detail::count_monomials(chain.algebra().dim(), unsigned(k),
                                             opts.monomial_budget);
      DegreeBasis basis = provider ? provider(chain, k)
                                   : invariant_space(chain, k, opts, stats);
      auto indec = indecomposable_generators(chain, k, out, basis, opts);
      diag.dimension = basis.dimension();
      diag.indecomposable_count = indec.size();
      diag.decomposable_rank = basis.dimension() - indec.size();
      out.per_degree.emplace(k, std::move(basis));
      out.indecomposables.emplace(k, std::move(indec));
      out.diagnostics.push_back(diag);
    } catch (const ResourceError& re) {
      out.resource_failure = {k, re.what()};
      out.diagnostics.push_back(diag);
      break;
    }
  }
  return out;
}

/// Exact coordinates of p in the echelon basis, or nullopt when p is not in
/// the span. p must be homogeneous of the basis degree.
inline std::optional<std::vector<GaussianRational>> span_membership(
    const Polynomial& p, const DegreeBasis& basis) {
  if (p.is_zero()) return std::vector<GaussianRational>(basis.rows.size());
  if (!p.is_homogeneous() || p.degree() != basis.degree)
    throw std::invalid_argument("span_membership: degree mismatch");
  PolyEchelon ech;
  for (const auto& row : basis.rows) ech.insert(row);
  return ech.coordinates(p);
}

}  // namespace commutant
