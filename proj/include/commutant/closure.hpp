#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commutant/chain.hpp"
#include "commutant/invariants.hpp"
#include "commutant/parallel.hpp"
#include "commutant/sparse_linalg.hpp"

namespace commutant {

/// One labeled generator p_m^(k) of the polynomial Poisson algebra.
struct GeneratorEntry {
  std::string label;  // "p1^(2)" style
  Polynomial poly{0};
  int degree = 0;
  /// Poisson-commutes with every coordinate of g (Casimir of the full
  /// algebra); the detect_central criterion.
  bool is_central = false;
  /// Poisson-commutes with every indecomposable generator (zero row in the
  /// closure table). Every Casimir is algebra-central; the converse fails
  /// (e.g. a subalgebra Casimir built from subalgebra coordinates).
  bool is_algebra_central = false;
};

/// Generators per degree, centrals listed first within each degree.
struct GeneratorSet {
  std::vector<GeneratorEntry> entries;

  const GeneratorEntry* find(const std::string& label) const {
    for (const auto& e : entries)
      if (e.label == label) return &e;
    return nullptr;
  }
  std::size_t index_of(const std::string& label) const {
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k].label == label) return k;
    throw std::invalid_argument("unknown generator label " + label);
  }
};

namespace detail {

/// Canonical refinement of one degree's indecomposable complement:
/// Casimir combinations first, then algebra-central ones, then the rest,
/// each sub-basis in reduced echelon form.
inline std::vector<std::pair<Polynomial, int>> refine_degree(
    const ChainSpec& chain, const std::vector<Polynomial>& rows,
    const std::vector<Polynomial>& all_generator_rows) {
  const auto& alg = chain.algebra();
  const std::size_t n = alg.dim();
  if (rows.empty()) return {};

  // kernel of alpha -> sum_i alpha_i {x_v, w_i} over all coordinates v
  auto central_subspace = [&](const std::vector<Polynomial>& test_targets,
                              bool against_coordinates) {
    std::map<std::pair<int, Monomial>, SparseVec> sys;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (against_coordinates) {
        for (std::size_t v = 0; v < n; ++v) {
          Polynomial br = bracket_with_coordinate(int(v), rows[i], alg);
          for (const auto& t : br.terms())
            sys[{int(v), t.mono}].emplace_back(std::int32_t(i), t.coeff);
        }
      } else {
        for (std::size_t g = 0; g < test_targets.size(); ++g) {
          Polynomial br = poisson_bracket(rows[i], test_targets[g], alg);
          for (const auto& t : br.terms())
            sys[{int(g), t.mono}].emplace_back(std::int32_t(i), t.coeff);
        }
      }
    }
    SparseMatrixQ mat;
    mat.ncols = std::int32_t(rows.size());
    for (auto& [key, row] : sys) mat.rows.push_back(std::move(row));
    return kernel_exact(mat);
  };

  auto combine = [&](const SparseVec& alpha) {
    Polynomial p(n);
    for (const auto& [i, c] : alpha) p.add_scaled(rows[i], c);
    return p;
  };

  std::vector<SparseVec> casimir = central_subspace({}, true);
  std::vector<SparseVec> algebra_central =
      central_subspace(all_generator_rows, false);

  // classes: 0 = casimir, 1 = algebra-central (non-casimir), 2 = generic
  PolyEchelon ech;
  std::vector<std::pair<Polynomial, int>> out;
  auto take = [&](const Polynomial& p, int cls) {
    auto [rem, coords] = ech.reduce(p);
    (void)coords;
    if (rem.is_zero()) return;
    rem = rem.scaled(rem.leading_coefficient().inverse());
    ech.insert(rem);
    out.emplace_back(std::move(rem), cls);
  };
  for (const auto& a : casimir) take(combine(a), 0);
  for (const auto& a : algebra_central) take(combine(a), 1);
  for (const auto& r : rows) take(r, 2);
  return out;
}

}  // namespace detail

/// Labels the sweep's indecomposables as generators p_m^(k), refining each
/// degree so that Casimir directions come first, then algebra-central ones.
inline GeneratorSet build_generator_set(const ChainSpec& chain,
                                        const GradedCommutant& commutant) {
  GeneratorSet gens;
  std::vector<Polynomial> all_rows;
  for (const auto& [k, list] : commutant.indecomposables)
    for (const auto& p : list) all_rows.push_back(p);

  for (const auto& [k, list] : commutant.indecomposables) {
    if (list.empty()) continue;
    auto refined = detail::refine_degree(chain, list, all_rows);
    int m = 1;
    for (auto& [poly, cls] : refined) {
      GeneratorEntry e;
      e.label = "p" + std::to_string(m) + "^(" + std::to_string(k) + ")";
      e.poly = std::move(poly);
      e.degree = k;
      e.is_central = (cls == 0);
      e.is_algebra_central = (cls <= 1);
      gens.entries.push_back(std::move(e));
      ++m;
    }
  }
  return gens;
}

/// Labels whose polynomials Poisson-commute with every coordinate of g
/// (exact check against all n coordinates, not only the subalgebra).
inline std::vector<std::string> detect_central(const GeneratorSet& gens,
                                               const ChainSpec& chain) {
  std::vector<std::string> out;
  for (const auto& e : gens.entries)
    if (is_casimir(e.poly, chain.algebra())) out.push_back(e.label);
  return out;
}

/// Exponent vector over the generator list.
using GeneratorMonomial = std::vector<unsigned>;

/// Bracket of two generators expanded in the degree-(k_i + k_j - 1)
/// generator ansatz. residual == 0 iff the bracket lies in the ansatz span.
struct ClosureRelation {
  std::string left, right;
  std::vector<std::pair<GeneratorMonomial, GaussianRational>> expansion;
  Polynomial residual{0};
  int target_degree = 0;
  int max_total_degree = 0;       // generator factors per monomial, maximum
  int max_noncentral_degree = 0;  // counting non-algebra-central factors
};

namespace detail {

/// All exponent vectors e with sum e_i * deg_i = target, in a fixed
/// deterministic order (lexicographic descending over the entry order).
inline std::vector<GeneratorMonomial> generator_monomials(
    const GeneratorSet& gens, int target) {
  std::vector<GeneratorMonomial> out;
  GeneratorMonomial cur(gens.entries.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    if (pos >= gens.entries.size()) return;
    int d = gens.entries[pos].degree;
    int maxe = rem / d;
    for (int e = maxe; e >= 0; --e) {
      cur[pos] = unsigned(e);
      rec(pos + 1, rem - e * d);
    }
    cur[pos] = 0;
  };
  rec(0, target);
  return out;
}

inline Polynomial expand_generator_monomial(const GeneratorSet& gens,
                                            const GeneratorMonomial& e,
                                            std::size_t nvars) {
  Polynomial p = Polynomial::constant(nvars, GaussianRational(1));
  for (std::size_t g = 0; g < e.size(); ++g)
    for (unsigned t = 0; t < e[g]; ++t) p = p * gens.entries[g].poly;
  return p;
}

inline int noncentral_degree(const GeneratorSet& gens,
                             const GeneratorMonomial& e) {
  int d = 0;
  for (std::size_t g = 0; g < e.size(); ++g)
    if (!gens.entries[g].is_algebra_central) d += int(e[g]);
  return d;
}

inline int total_factor_degree(const GeneratorMonomial& e) {
  int d = 0;
  for (unsigned x : e) d += int(x);
  return d;
}

}  // namespace detail

/// Expresses {p_i, p_j} in the generator ansatz of Eq-degree k_i + k_j - 1.
/// When syzygies make the expansion non-unique the echelon-minimal solution
/// for the fixed candidate order is returned; the syzygy space is available
/// via syzygies_at_degree.
inline ClosureRelation express_bracket(const std::string& left,
                                       const std::string& right,
                                       const GeneratorSet& gens,
                                       const ChainSpec& chain) {
  const auto& alg = chain.algebra();
  const std::size_t n = alg.dim();
  const GeneratorEntry& gi = gens.entries[gens.index_of(left)];
  const GeneratorEntry& gj = gens.entries[gens.index_of(right)];

  ClosureRelation rel;
  rel.left = left;
  rel.right = right;
  rel.target_degree = gi.degree + gj.degree - 1;

  Polynomial bracket = poisson_bracket(gi.poly, gj.poly, alg);

  auto candidates = detail::generator_monomials(gens, rel.target_degree);
  PolyEchelon ech(/*track_history=*/true);
  for (const auto& cand : candidates)
    ech.insert(detail::expand_generator_monomial(gens, cand, n));

  auto [residual, coords] = ech.reduce(bracket);
  rel.residual = std::move(residual);
  for (std::size_t c = 0; c < coords.size(); ++c)
    if (!coords[c].is_zero()) rel.expansion.emplace_back(candidates[c], coords[c]);

  for (const auto& [e, c] : rel.expansion) {
    rel.max_total_degree =
        std::max(rel.max_total_degree, detail::total_factor_degree(e));
    rel.max_noncentral_degree =
        std::max(rel.max_noncentral_degree, detail::noncentral_degree(gens, e));
  }
  return rel;
}

/// One syzygy: a linear dependency among generator products at fixed degree.
using Syzygy = std::vector<std::pair<GeneratorMonomial, GaussianRational>>;

/// All linear dependencies among formal degree-k generator monomials
/// (single generators of degree k included).
inline std::vector<Syzygy> syzygies_at_degree(const GeneratorSet& gens, int k,
                                              const ChainSpec& chain) {
  auto candidates = detail::generator_monomials(gens, k);
  PolyEchelon ech(/*track_history=*/true);
  std::vector<Syzygy> out;
  for (const auto& cand : candidates) {
    auto res = ech.insert(
        detail::expand_generator_monomial(gens, cand, chain.algebra().dim()));
    if (!res.added) {
      Syzygy s;
      for (std::size_t j = 0; j < res.dependency.size(); ++j)
        if (!res.dependency[j].is_zero())
          s.emplace_back(candidates[j], -res.dependency[j]);
      s.emplace_back(cand, GaussianRational(1));
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// All pairwise relations (left index < right index), with non-closing
/// pairs flagged and per-relation degree profiles.
struct StructureReport {
  GeneratorSet generators;
  std::vector<ClosureRelation> relations;
  std::vector<std::pair<std::string, std::string>> non_closing;
  /// labels confirmed algebra-central by their zero rows
  std::vector<std::string> zero_rows;
};

inline StructureReport closure_table(const GeneratorSet& gens,
                                     const ChainSpec& chain, int threads = 1) {
  StructureReport rep;
  rep.generators = gens;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < gens.entries.size(); ++i)
    for (std::size_t j = i + 1; j < gens.entries.size(); ++j)
      pairs.emplace_back(i, j);
  rep.relations.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    rep.relations[k] = express_bracket(gens.entries[pairs[k].first].label,
                                       gens.entries[pairs[k].second].label,
                                       gens, chain);
  });
  for (const auto& rel : rep.relations)
    if (!rel.residual.is_zero())
      rep.non_closing.emplace_back(rel.left, rel.right);
  for (std::size_t i = 0; i < gens.entries.size(); ++i) {
    bool zero = true;
    for (const auto& rel : rep.relations) {
      if (rel.left != gens.entries[i].label &&
          rel.right != gens.entries[i].label)
        continue;
      if (!rel.expansion.empty() || !rel.residual.is_zero()) zero = false;
    }
    if (zero) rep.zero_rows.push_back(gens.entries[i].label);
  }
  return rep;
}

}  // namespace commutant
