#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commutant/chain.hpp"
#include "commutant/closure.hpp"
#include "commutant/sparse_linalg.hpp"

namespace commutant {

/// The label-counting formulas: i0 = (dim g + l)/2 labels from a maximal
/// commutative subalgebra, rho0 = (dim g' + l')/2 - l0 supplied by the
/// subalgebra, n0 = (dim g - l - dim g' - l')/2 + l0 missing labels.
/// The rho0 reading resolves the source's unbalanced parenthesis as
/// (dim g' + l')/2 - l0.
struct LabelCounts {
  long i0 = 0, rho0 = 0, n0 = 0;
  long dim_g = 0, rank_g = 0, dim_sub = 0, rank_sub = 0, common_casimirs = 0;
};

/// Exact evaluation with parity enforcement; ranks and l0 are caller
/// supplied (computing ranks from structure constants is out of scope).
inline LabelCounts label_counts(const ChainSpec& chain, long rank_g,
                                long rank_sub, long common_casimirs = 0) {
  LabelCounts c;
  c.dim_g = long(chain.algebra().dim());
  c.rank_g = rank_g;
  c.dim_sub = long(chain.subalgebra().size());
  c.rank_sub = rank_sub;
  c.common_casimirs = common_casimirs;
  if ((c.dim_g + rank_g) % 2)
    throw ValidationError("label_counts: dim g + rank g is odd (i0 formula)");
  if ((c.dim_sub + rank_sub) % 2)
    throw ValidationError(
        "label_counts: dim g' + rank g' is odd (rho0 formula)");
  c.i0 = (c.dim_g + rank_g) / 2;
  c.rho0 = (c.dim_sub + rank_sub) / 2 - common_casimirs;
  c.n0 = (c.dim_g - rank_g - c.dim_sub - rank_sub) / 2 + common_casimirs;
  if (c.i0 < 0 || c.rho0 < 0 || c.n0 < 0)
    throw ValidationError("label_counts: negative count");
  return c;
}

namespace detail {

/// splitmix64: tiny deterministic PRNG, stable across platforms.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

}  // namespace detail

/// Maximal rank over `trials` random rational points of the exact Jacobian
/// of the given polynomials: a certified lower bound on the generic rank
/// (deterministic for a fixed seed). Bounded by min(#polys, n).
inline int functional_rank(const std::vector<Polynomial>& polys,
                           std::size_t nvars, int trials,
                           std::uint64_t seed) {
  if (polys.empty() || trials < 1) return 0;
  detail::SplitMix64 rng(seed ^ 0x7001BA5EC0FFEEull);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<GaussianRational> pt(nvars);
    for (auto& v : pt) {
      long num = long(rng.next() % 19) - 9;
      long den = 1 + long(rng.next() % 4);
      v = GaussianRational::ratio(num, den);
    }
    VecEchelon ech;
    for (const auto& p : polys) {
      SparseVec grad;
      for (std::size_t v = 0; v < nvars; ++v) {
        GaussianRational g = p.derivative(v).evaluate(pt);
        if (!g.is_zero()) grad.emplace_back(std::int32_t(v), std::move(g));
      }
      if (!grad.empty()) ech.insert(std::move(grad));
    }
    best = std::max(best, int(ech.rank()));
  }
  return best;
}

/// All unordered generator pairs whose Poisson bracket is exactly zero.
inline std::vector<std::pair<std::string, std::string>> commuting_pairs(
    const GeneratorSet& gens, const ChainSpec& chain) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < gens.entries.size(); ++i)
    for (std::size_t j = i + 1; j < gens.entries.size(); ++j)
      if (poisson_bracket(gens.entries[i].poly, gens.entries[j].poly,
                          chain.algebra())
              .is_zero())
        out.emplace_back(gens.entries[i].label, gens.entries[j].label);
  return out;
}

}  // namespace commutant
