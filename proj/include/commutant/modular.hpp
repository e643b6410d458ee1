#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "commutant/sparse_linalg.hpp"

namespace commutant {
namespace modular {

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return std::uint64_t((unsigned __int128)(a) * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Fixed descending sequence of 31-bit primes p = 3 (mod 4), so that
/// F_p[i]/(i^2+1) is the field F_{p^2}. Deterministic.
inline std::uint32_t nth_solver_prime(std::size_t k) {
  static std::vector<std::uint32_t> cache;
  if (cache.empty()) cache.push_back(2147483647u);  // 2^31-1, = 3 mod 4
  while (cache.size() <= k) {
    std::uint64_t c = cache.back() - 4;
    while (!is_prime_u64(c)) c -= 4;  // stay = 3 mod 4
    cache.push_back(std::uint32_t(c));
  }
  return cache[k];
}

/// Arithmetic in F_{p^2} = F_p[i], p = 3 mod 4.
struct Fp2 {
  std::uint32_t re = 0, im = 0;
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const Fp2&) const = default;
};

class Fp2Context {
public:
  explicit Fp2Context(std::uint32_t p) : p_(p) {}
  std::uint32_t prime() const { return p_; }

  Fp2 add(Fp2 a, Fp2 b) const {
    return {addp(a.re, b.re), addp(a.im, b.im)};
  }
  Fp2 sub(Fp2 a, Fp2 b) const {
    return {subp(a.re, b.re), subp(a.im, b.im)};
  }
  Fp2 neg(Fp2 a) const { return {negp(a.re), negp(a.im)}; }
  Fp2 mul(Fp2 a, Fp2 b) const {
    std::uint64_t p = p_;
    std::uint64_t ac = std::uint64_t(a.re) * b.re % p;
    std::uint64_t bd = std::uint64_t(a.im) * b.im % p;
    std::uint64_t ad = std::uint64_t(a.re) * b.im % p;
    std::uint64_t bc = std::uint64_t(a.im) * b.re % p;
    return {std::uint32_t((ac + p - bd) % p), std::uint32_t((ad + bc) % p)};
  }
  Fp2 inv(Fp2 a) const {
    // (a - bi) / (a^2 + b^2); the norm is nonzero for p = 3 mod 4
    std::uint64_t p = p_;
    std::uint64_t n = (std::uint64_t(a.re) * a.re + std::uint64_t(a.im) * a.im) % p;
    std::uint64_t ninv = inv_u(std::uint32_t(n));
    return {std::uint32_t(std::uint64_t(a.re) * ninv % p),
            std::uint32_t(std::uint64_t(negp(a.im)) * ninv % p)};
  }

  /// Image of an exact Gaussian rational; nullopt if a denominator vanishes
  /// mod p (bad prime).
  std::optional<Fp2> image(const GaussianRational& g) const {
    auto part = [&](const mpq_class& q) -> std::optional<std::uint32_t> {
      std::uint32_t den = std::uint32_t(mpz_fdiv_ui(q.get_den().get_mpz_t(), p_));
      if (den == 0) return std::nullopt;
      std::uint32_t num = std::uint32_t(mpz_fdiv_ui(q.get_num().get_mpz_t(), p_));
      return std::uint32_t(std::uint64_t(num) * inv_u(den) % p_);
    };
    auto re = part(g.re());
    auto im = part(g.im());
    if (!re || !im) return std::nullopt;
    return Fp2{*re, *im};
  }

private:
  std::uint32_t addp(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t subp(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t negp(std::uint32_t a) const { return a ? p_ - a : 0; }
  std::uint32_t inv_u(std::uint32_t a) const {
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr) {
      std::int64_t q = r / nr;
      std::swap(t -= q * nt, nt);
      std::swap(r -= q * nr, nr);
    }
    if (t < 0) t += p_;
    return std::uint32_t(t);
  }

  std::uint32_t p_;
};

using SparseVecP = std::vector<std::pair<std::int32_t, Fp2>>;

struct KernelModP {
  std::uint32_t prime;
  std::size_t rank;
  /// canonical reduced-echelon kernel basis mod p, leading columns ascending
  std::vector<SparseVecP> basis;
  std::vector<std::int32_t> lead_cols;
};

inline void canonicalize(KernelModP& k, const Fp2Context& F);

/// Kernel of an integer-cleared sparse matrix mod p, in canonical
/// reduced-echelon form. Mirrors kernel_exact.
inline KernelModP kernel_mod_p(const SparseMatrixQ& m, std::uint32_t p) {
  Fp2Context F(p);
  std::vector<SparseVecP> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    SparseVecP rp;
    rp.reserve(r.size());
    for (const auto& [c, v] : r) {
      auto img = F.image(v);
      if (!img) return {p, 0, {}, {}};  // bad prime (caller cleared dens, so unreachable)
      if (!img->is_zero()) rp.emplace_back(c, *img);
    }
    if (!rp.empty()) rows.push_back(std::move(rp));
  }

  auto axpy = [&](const SparseVecP& a, const SparseVecP& b, Fp2 c) {
    SparseVecP r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Fp2 v = F.mul(b[j].second, c);
        if (!v.is_zero()) r.emplace_back(b[j].first, v);
        ++j;
      } else {
        Fp2 v = F.add(a[i].second, F.mul(b[j].second, c));
        if (!v.is_zero()) r.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return r;
  };

  std::vector<std::int32_t> pivot_row(m.ncols, -1);
  std::vector<SparseVecP> pivots;

  std::vector<std::size_t> order(rows.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return rows[a].size() < rows[b].size();
  });

  for (std::size_t oi : order) {
    SparseVecP row = std::move(rows[oi]);
    while (!row.empty()) {
      std::int32_t lead = row.front().first;
      std::int32_t pr = pivot_row[lead];
      if (pr < 0) break;
      row = axpy(row, pivots[pr], F.neg(row.front().second));
    }
    if (row.empty()) continue;
    Fp2 inv = F.inv(row.front().second);
    for (auto& e : row) e.second = F.mul(e.second, inv);
    pivot_row[row.front().first] = std::int32_t(pivots.size());
    pivots.push_back(std::move(row));
  }

  std::vector<std::int32_t> pivot_cols;
  for (std::int32_t c = 0; c < m.ncols; ++c)
    if (pivot_row[c] >= 0) pivot_cols.push_back(c);
  for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
    const SparseVecP& prow = pivots[pivot_row[*it]];
    for (std::int32_t c2 : pivot_cols) {
      if (c2 >= *it) break;
      SparseVecP& other = pivots[pivot_row[c2]];
      auto pos = std::lower_bound(
          other.begin(), other.end(), *it,
          [](const auto& e, std::int32_t c) { return e.first < c; });
      if (pos != other.end() && pos->first == *it)
        other = axpy(other, prow, F.neg(pos->second));
    }
  }

  KernelModP out{p, pivot_cols.size(), {}, {}};
  for (std::int32_t f = 0; f < m.ncols; ++f) {
    if (pivot_row[f] >= 0) continue;
    SparseVecP k;
    for (std::int32_t c : pivot_cols) {
      if (c >= f) break;
      const SparseVecP& prow = pivots[pivot_row[c]];
      auto pos = std::lower_bound(
          prow.begin(), prow.end(), f,
          [](const auto& e, std::int32_t cc) { return e.first < cc; });
      if (pos != prow.end() && pos->first == f)
        k.emplace_back(c, F.neg(pos->second));
    }
    k.emplace_back(f, Fp2{1, 0});
    out.lead_cols.push_back(k.front().first);
    out.basis.push_back(std::move(k));
  }
  // free-column kernel vectors are already a reduced echelon set: vector f
  // has a 1 at free column f and zeros at all other free columns, and its
  // remaining support is on pivot columns, none of which is a lead of
  // another kernel vector... leads can collide on pivot columns, so
  // canonicalize explicitly.
  canonicalize(out, F);
  return out;
}

inline void canonicalize(KernelModP& k, const Fp2Context& F) {
  // reduced echelon over ascending column index
  std::vector<SparseVecP> rows;
  auto axpy = [&](const SparseVecP& a, const SparseVecP& b, Fp2 c) {
    SparseVecP r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        Fp2 v = F.mul(b[j].second, c);
        if (!v.is_zero()) r.emplace_back(b[j].first, v);
        ++j;
      } else {
        Fp2 v = F.add(a[i].second, F.mul(b[j].second, c));
        if (!v.is_zero()) r.emplace_back(a[i].first, v);
        ++i;
        ++j;
      }
    }
    return r;
  };
  auto value_at = [](const SparseVecP& v, std::int32_t col) {
    auto it = std::lower_bound(
        v.begin(), v.end(), col,
        [](const auto& e, std::int32_t c) { return e.first < c; });
    return (it != v.end() && it->first == col) ? it->second : Fp2{};
  };
  for (SparseVecP v : k.basis) {
    for (const auto& row : rows) {
      if (v.empty()) break;
      Fp2 c = value_at(v, row.front().first);
      if (!c.is_zero()) v = axpy(v, row, F.neg(c));
    }
    if (v.empty()) continue;
    Fp2 inv = F.inv(v.front().second);
    for (auto& e : v) e.second = F.mul(e.second, inv);
    for (auto& row : rows) {
      Fp2 c = value_at(row, v.front().first);
      if (!c.is_zero()) row = axpy(row, v, F.neg(c));
    }
    rows.push_back(std::move(v));
    std::sort(rows.begin(), rows.end(),
              [](const SparseVecP& a, const SparseVecP& b) {
                return a.front().first < b.front().first;
              });
  }
  k.basis = std::move(rows);
  k.lead_cols.clear();
  for (const auto& r : k.basis) k.lead_cols.push_back(r.front().first);
}

/// Chinese remainder accumulator for one residue.
struct CrtValue {
  mpz_class value{0};
  mpz_class modulus{1};

  void absorb(std::uint32_t residue, std::uint32_t prime) {
    mpz_class p(prime);
    if (modulus == 1) {
      value = residue;
      modulus = p;
      return;
    }
    // x = value (mod modulus), x = residue (mod p)
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
    mpz_class diff = (mpz_class(residue) - value) % p;
    if (diff < 0) diff += p;
    mpz_class t = diff * inv % p;
    value += modulus * t;
    modulus *= p;
  }
};

/// Wang rational reconstruction: num/den with |num|, den <= sqrt(M/2).
inline std::optional<mpq_class> rational_reconstruct(const mpz_class& a,
                                                     const mpz_class& m) {
  mpz_class bound;
  mpz_class m2 = m / 2;
  mpz_sqrt(bound.get_mpz_t(), m2.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  if (t1 > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;  // not in lowest terms: reject, add primes
  mpq_class q(r1);
  q /= mpq_class(t1);
  q.canonicalize();
  return q;
}

}  // namespace modular
}  // namespace commutant
