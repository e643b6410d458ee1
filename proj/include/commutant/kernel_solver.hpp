#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "commutant/errors.hpp"
#include "commutant/modular.hpp"
#include "commutant/sparse_linalg.hpp"

namespace commutant {

struct SolverOptions {
  enum class Mode { auto_select, exact, multimodular };
  Mode mode = Mode::auto_select;
  /// auto_select uses the exact path at or below this many columns
  std::size_t exact_threshold = 320;
  std::size_t max_primes = 40;
};

struct SolverStats {
  std::size_t exact_solves = 0;
  std::size_t modular_solves = 0;
  std::size_t primes_used = 0;
};

namespace detail {

/// Rows scaled to Gaussian-integer entries (kernel unchanged); keeps every
/// 31-bit prime usable for reduction.
inline SparseMatrixQ clear_denominators(const SparseMatrixQ& m) {
  SparseMatrixQ out;
  out.ncols = m.ncols;
  out.rows.reserve(m.rows.size());
  for (const auto& row : m.rows) {
    mpz_class l(1);
    for (const auto& [c, v] : row) {
      mpz_class l2;
      mpz_lcm(l2.get_mpz_t(), l.get_mpz_t(), v.re().get_den().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l2.get_mpz_t(), v.im().get_den().get_mpz_t());
    }
    SparseVec r;
    r.reserve(row.size());
    GaussianRational scale((mpq_class(l)), mpq_class(0));
    for (const auto& [c, v] : row) r.emplace_back(c, v * scale);
    out.rows.push_back(std::move(r));
  }
  return out;
}

inline bool in_kernel_exact(const SparseMatrixQ& m,
                            const std::vector<SparseVec>& basis) {
  for (const auto& row : m.rows) {
    for (const auto& k : basis) {
      GaussianRational dot;
      std::size_t i = 0, j = 0;
      while (i < row.size() && j < k.size()) {
        if (row[i].first < k[j].first) {
          ++i;
        } else if (k[j].first < row[i].first) {
          ++j;
        } else {
          dot += row[i].second * k[j].second;
          ++i;
          ++j;
        }
      }
      if (!dot.is_zero()) return false;
    }
  }
  return true;
}

inline std::vector<SparseVec> kernel_multimodular(const SparseMatrixQ& m,
                                                  const SolverOptions& opts,
                                                  SolverStats* stats) {
  SparseMatrixQ cleared = clear_denominators(m);

  // One accumulator per observed (rank, lead-column) signature. Good primes
  // all share the true signature; unlucky primes land elsewhere and are
  // starved out.
  struct Accum {
    std::size_t rank = 0;
    std::size_t primes = 0;
    mpz_class modulus{1};
    std::vector<std::map<std::int32_t, std::pair<modular::CrtValue,
                                                 modular::CrtValue>>> entries;
  };
  std::map<std::pair<std::size_t, std::vector<std::int32_t>>, Accum> accums;

  for (std::size_t pi = 0; pi < opts.max_primes; ++pi) {
    std::uint32_t p = modular::nth_solver_prime(pi);
    modular::KernelModP kp = modular::kernel_mod_p(cleared, p);
    if (stats) ++stats->primes_used;

    auto key = std::make_pair(kp.rank, kp.lead_cols);
    Accum& acc = accums[key];
    if (acc.entries.empty()) acc.entries.assign(kp.basis.size(), {});
    acc.rank = kp.rank;
    ++acc.primes;
    for (std::size_t r = 0; r < kp.basis.size(); ++r)
      for (const auto& [col, val] : kp.basis[r]) {
        auto& cell = acc.entries[r][col];
        cell.first.absorb(val.re, p);
        cell.second.absorb(val.im, p);
      }
    acc.modulus *= p;

    // reconstruct from the best signature: max rank, then most primes
    const Accum* best = nullptr;
    for (const auto& [k, a] : accums)
      if (!best || a.rank > best->rank ||
          (a.rank == best->rank && a.primes > best->primes))
        best = &a;
    if (!best || best != &acc) continue;  // latest prime didn't help the best

    bool ok = true;
    std::vector<SparseVec> candidate(best->entries.size());
    for (std::size_t r = 0; r < best->entries.size() && ok; ++r) {
      for (const auto& [col, cell] : best->entries[r]) {
        if (cell.first.modulus != best->modulus ||
            cell.second.modulus != best->modulus) {
          ok = false;
          break;
        }
        auto re = modular::rational_reconstruct(cell.first.value, best->modulus);
        auto im = modular::rational_reconstruct(cell.second.value, best->modulus);
        if (!re || !im) {
          ok = false;
          break;
        }
        GaussianRational g(*re, *im);
        if (!g.is_zero()) candidate[r].emplace_back(col, std::move(g));
      }
    }
    if (!ok) continue;
    if (!in_kernel_exact(cleared, candidate)) continue;

    // Certificate: rank_p <= rank_Q gives dim ker_Q <= ncols - rank_p =
    // |candidate|; the candidate rows are exactly-verified independent
    // members, so they are a full basis.
    return candidate;
  }
  // pathological prime sequence; decide it exactly instead
  if (stats) ++stats->exact_solves;
  return kernel_exact(m);
}

}  // namespace detail

/// Exact kernel of a sparse matrix over Q(i) in canonical reduced-echelon
/// form. Large systems run multi-modular (CRT + rational reconstruction,
/// certified by exact verification and a rank bound); small systems use
/// exact fraction elimination. Both paths produce identical output.
inline std::vector<SparseVec> kernel_basis(const SparseMatrixQ& m,
                                           const SolverOptions& opts = {},
                                           SolverStats* stats = nullptr) {
  bool exact = opts.mode == SolverOptions::Mode::exact ||
               (opts.mode == SolverOptions::Mode::auto_select &&
                std::size_t(m.ncols) <= opts.exact_threshold);
  if (exact) {
    if (stats) ++stats->exact_solves;
    return kernel_exact(m);
  }
  if (stats) ++stats->modular_solves;
  return detail::kernel_multimodular(m, opts, stats);
}

}  // namespace commutant
