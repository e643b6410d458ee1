#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "commutant/errors.hpp"
#include "commutant/gaussian.hpp"
#include "commutant/polynomial.hpp"

namespace commutant {

/// One term C_ij^k x_k of a bracket table entry.
struct BracketTerm {
  int target;
  GaussianRational coeff;
};

/// A finite-dimensional Lie algebra given by named generators and structure
/// constants over Q(i). Only ordered pairs i<j are stored; (j,i) is the
/// negation by construction, so antisymmetry cannot be violated.
class LieAlgebraSpec {
public:
  LieAlgebraSpec(std::string name, std::vector<std::string> generators)
      : name_(std::move(name)), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
      if (g == "i")
        throw ValidationError("generator name 'i' collides with the imaginary unit");
    }
  }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t dim() const { return generators_.size(); }

  std::optional<int> index_of(const std::string& gen) const {
    for (std::size_t k = 0; k < generators_.size(); ++k)
      if (generators_[k] == gen) return int(k);
    return std::nullopt;
  }

  /// Sets {x_i, x_j} = sum of terms, i < j required. Terms are normalized
  /// (sorted by target, zero coefficients dropped).
  void set_bracket(int i, int j, std::vector<BracketTerm> terms) {
    if (i >= j) throw ValidationError("set_bracket requires i < j");
    check_index(i);
    check_index(j);
    std::map<int, GaussianRational> acc;
    for (auto& t : terms) {
      check_index(t.target);
      acc[t.target] += t.coeff;
    }
    std::vector<BracketTerm> norm;
    for (auto& [k, c] : acc)
      if (!c.is_zero()) norm.push_back({k, c});
    if (norm.empty())
      table_.erase({i, j});
    else
      table_[{i, j}] = std::move(norm);
  }

  void add_bracket_term(int i, int j, int target, GaussianRational c) {
    if (i == j || c.is_zero()) return;
    if (i > j) {
      std::swap(i, j);
      c = -c;
    }
    auto& vec = table_[{i, j}];
    for (auto& t : vec) {
      if (t.target == target) {
        t.coeff += c;
        if (t.coeff.is_zero())
          vec.erase(std::remove_if(vec.begin(), vec.end(),
                                   [&](const BracketTerm& u) {
                                     return u.coeff.is_zero();
                                   }),
                    vec.end());
        if (vec.empty()) table_.erase({i, j});
        return;
      }
    }
    vec.push_back({target, std::move(c)});
    std::sort(vec.begin(), vec.end(),
              [](const BracketTerm& a, const BracketTerm& b) {
                return a.target < b.target;
              });
  }

  /// {x_i, x_j} for any i, j (sign handled).
  std::vector<BracketTerm> bracket_of(int i, int j) const {
    if (i == j) return {};
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = table_.find({i, j});
    if (it == table_.end()) return {};
    if (!flip) return it->second;
    std::vector<BracketTerm> out = it->second;
    for (auto& t : out) t.coeff = -t.coeff;
    return out;
  }

  const std::map<std::pair<int, int>, std::vector<BracketTerm>>& table() const {
    return table_;
  }

private:
  void check_index(int k) const {
    if (k < 0 || std::size_t(k) >= generators_.size())
      throw ValidationError("generator index out of range");
  }

  std::string name_;
  std::vector<std::string> generators_;
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table_;
};

/// Outcome of the exact Jacobi check. Failures are report content, not
/// faults.
struct ValidationReport {
  bool passed = true;
  std::vector<std::array<int, 3>> failing_triples;  // 0-based indices i<j<k
  std::size_t triples_checked = 0;
};

/// A reduction chain: algebra plus a bracket-closed subalgebra given by a
/// sorted index subset.
class ChainSpec {
public:
  ChainSpec(LieAlgebraSpec algebra, std::vector<int> subalgebra)
      : algebra_(std::move(algebra)), subalgebra_(std::move(subalgebra)) {
    std::sort(subalgebra_.begin(), subalgebra_.end());
    subalgebra_.erase(std::unique(subalgebra_.begin(), subalgebra_.end()),
                      subalgebra_.end());
    if (subalgebra_.empty())
      throw ValidationError("subalgebra is empty");
    if (subalgebra_.size() >= algebra_.dim())
      throw ValidationError("subalgebra equals the full algebra");
    for (int u : subalgebra_)
      if (u < 0 || std::size_t(u) >= algebra_.dim())
        throw ValidationError("subalgebra index out of range");
    check_closure();
  }

  const LieAlgebraSpec& algebra() const { return algebra_; }
  const std::vector<int>& subalgebra() const { return subalgebra_; }

  bool in_subalgebra(int k) const {
    return std::binary_search(subalgebra_.begin(), subalgebra_.end(), k);
  }

  std::vector<int> complement() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < algebra_.dim(); ++k)
      if (!in_subalgebra(int(k))) out.push_back(int(k));
    return out;
  }

  friend bool operator==(const ChainSpec& a, const ChainSpec& b) {
    if (a.subalgebra_ != b.subalgebra_) return false;
    if (a.algebra_.generators() != b.algebra_.generators()) return false;
    const auto& ta = a.algebra_.table();
    const auto& tb = b.algebra_.table();
    if (ta.size() != tb.size()) return false;
    for (auto ia = ta.begin(), ib = tb.begin(); ia != ta.end(); ++ia, ++ib) {
      if (ia->first != ib->first) return false;
      if (ia->second.size() != ib->second.size()) return false;
      for (std::size_t k = 0; k < ia->second.size(); ++k)
        if (ia->second[k].target != ib->second[k].target ||
            ia->second[k].coeff != ib->second[k].coeff)
          return false;
    }
    return true;
  }

private:
  void check_closure() const {
    for (int i : subalgebra_) {
      for (int j : subalgebra_) {
        if (i >= j) continue;
        for (const auto& t : algebra_.bracket_of(i, j)) {
          if (!in_subalgebra(t.target))
            throw ValidationError(
                "subalgebra not closed: {" + algebra_.generators()[i] + "," +
                algebra_.generators()[j] + "} hits " +
                algebra_.generators()[t.target]);
        }
      }
    }
  }

  LieAlgebraSpec algebra_;
  std::vector<int> subalgebra_;
};

/// {x_u, p}: the coadjoint action of a coordinate on a polynomial.
inline Polynomial bracket_with_coordinate(int u, const Polynomial& p,
                                          const LieAlgebraSpec& alg) {
  std::vector<Polynomial::Term> raw;
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < alg.dim(); ++v) {
      unsigned e = t.mono.deg(v);
      if (!e) continue;
      auto entry = alg.bracket_of(u, int(v));
      if (entry.empty()) continue;
      Monomial base = t.mono.without_one(v);
      GaussianRational scale = t.coeff * GaussianRational(long(e));
      for (const auto& bt : entry)
        raw.push_back({base * Monomial::unit(alg.dim(), bt.target),
                       scale * bt.coeff});
    }
  }
  return Polynomial::normal_form(alg.dim(), std::move(raw));
}

/// The Lie-Poisson bracket {p,q} = sum C_ij^k x_k d_i p d_j q, exact.
/// For homogeneous inputs of degrees d_p, d_q the result is zero or
/// homogeneous of degree d_p + d_q - 1.
inline Polynomial poisson_bracket(const Polynomial& p, const Polynomial& q,
                                  const LieAlgebraSpec& alg) {
  std::vector<Polynomial::Term> raw;
  const std::size_t n = alg.dim();
  for (const auto& tp : p.terms()) {
    for (const auto& tq : q.terms()) {
      GaussianRational c0 = tp.coeff * tq.coeff;
      for (std::size_t i = 0; i < n; ++i) {
        unsigned ei = tp.mono.deg(i);
        if (!ei) continue;
        for (std::size_t j = 0; j < n; ++j) {
          unsigned ej = tq.mono.deg(j);
          if (!ej) continue;
          auto entry = alg.bracket_of(int(i), int(j));
          if (entry.empty()) continue;
          Monomial base = tp.mono.without_one(i) * tq.mono.without_one(j);
          GaussianRational scale = c0 * GaussianRational(long(ei) * long(ej));
          for (const auto& bt : entry)
            raw.push_back(
                {base * Monomial::unit(n, bt.target), scale * bt.coeff});
        }
      }
    }
  }
  return Polynomial::normal_form(n, std::move(raw));
}

/// Exact Jacobi check over all i<j<k triples.
inline ValidationReport validate_structure(const LieAlgebraSpec& alg) {
  ValidationReport rep;
  const std::size_t n = alg.dim();
  auto lin = [&](int v) { return Polynomial::variable(n, v); };
  for (int i = 0; i < int(n); ++i) {
    for (int j = i + 1; j < int(n); ++j) {
      for (int k = j + 1; k < int(n); ++k) {
        Polynomial s =
            poisson_bracket(lin(i), poisson_bracket(lin(j), lin(k), alg), alg);
        s += poisson_bracket(lin(j), poisson_bracket(lin(k), lin(i), alg), alg);
        s += poisson_bracket(lin(k), poisson_bracket(lin(i), lin(j), alg), alg);
        ++rep.triples_checked;
        if (!s.is_zero()) {
          rep.passed = false;
          rep.failing_triples.push_back({i, j, k});
        }
      }
    }
  }
  return rep;
}

/// True iff {x_u, p} = 0 for every subalgebra coordinate u. This is the
/// membership test for the Poisson centralizer, used post hoc on every
/// solver result.
inline bool is_invariant(const Polynomial& p, const ChainSpec& chain) {
  for (int u : chain.subalgebra())
    if (!bracket_with_coordinate(u, p, chain.algebra()).is_zero()) return false;
  return true;
}

/// True iff p Poisson-commutes with every coordinate of the full algebra.
inline bool is_casimir(const Polynomial& p, const LieAlgebraSpec& alg) {
  for (std::size_t v = 0; v < alg.dim(); ++v)
    if (!bracket_with_coordinate(int(v), p, alg).is_zero()) return false;
  return true;
}

/// Bidegree = (degree in subalgebra coordinates, degree in complement
/// coordinates).
using Bidegree = std::pair<unsigned, unsigned>;

inline Bidegree bidegree_of(const Monomial& m, const ChainSpec& chain) {
  unsigned a = 0;
  for (int u : chain.subalgebra()) a += m.deg(u);
  return {a, m.total_degree() - a};
}

/// The set of bidegrees occurring among the monomials of p. Errors on the
/// zero polynomial (no grading).
inline std::set<Bidegree> bidegree_components(const Polynomial& p,
                                              const ChainSpec& chain) {
  if (p.is_zero())
    throw std::invalid_argument("bidegree_components: zero polynomial");
  std::set<Bidegree> out;
  for (const auto& t : p.terms()) out.insert(bidegree_of(t.mono, chain));
  return out;
}

}  // namespace commutant
