#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>

#include "commutant/errors.hpp"

namespace commutant {

/// Exponent vector of a monomial x_1^{e_1}...x_n^{e_n}. Exponents are capped
/// at 255 per variable; exceeding the cap is a hard error, never wraparound.
///
/// The single global term order is graded reverse lexicographic with respect
/// to the stored generator order; it makes every canonical basis, report and
/// cache byte-reproducible.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}

  static Monomial unit(std::size_t nvars, std::size_t var) {
    Monomial m(nvars);
    m.e_[var] = 1;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned deg(std::size_t var) const { return e_[var]; }

  void set_deg(std::size_t var, unsigned d) {
    if (d > 255) throw ResourceError("monomial exponent cap", d, 255);
    e_[var] = static_cast<std::uint8_t>(d);
  }

  unsigned total_degree() const {
    unsigned s = 0;
    for (auto v : e_) s += v;
    return s;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) {
      unsigned s = unsigned(r.e_[k]) + unsigned(o.e_[k]);
      if (s > 255) throw ResourceError("monomial exponent cap", s, 255);
      r.e_[k] = static_cast<std::uint8_t>(s);
    }
    return r;
  }

  /// This monomial with one power of `var` removed. Requires deg(var) > 0.
  Monomial without_one(std::size_t var) const {
    Monomial r(*this);
    r.e_[var] -= 1;
    return r;
  }

  /// grevlex: degrees compare first; ties break by the last differing
  /// exponent, where the *smaller* entry wins (belongs to the larger
  /// monomial). Returns <0 if a < b, 0 if equal, >0 if a > b.
  static int cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = a.e_.size(); k-- > 0;) {
      if (a.e_[k] != b.e_[k]) return a.e_[k] > b.e_[k] ? -1 : 1;
    }
    return 0;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator>(const Monomial& a, const Monomial& b) {
    return cmp(a, b) > 0;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e_) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }

private:
  boost::container::small_vector<std::uint8_t, 16> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Comparator putting the largest monomial first (canonical storage order).
struct MonomialDesc {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

}  // namespace commutant
