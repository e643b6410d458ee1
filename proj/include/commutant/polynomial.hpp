#pragma once

#include <algorithm>
#include <cctype>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "commutant/gaussian.hpp"
#include "commutant/monomial.hpp"

namespace commutant {

/// Sparse multivariate polynomial over Q(i). Terms are kept sorted in
/// descending term order with no zero coefficients; two polynomials are equal
/// iff their term lists are identical.
class Polynomial {
public:
  struct Term {
    Monomial mono;
    GaussianRational coeff;
  };

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Canonical form of an arbitrary term list: sorts, merges duplicates,
  /// drops zeros. Idempotent.
  static Polynomial normal_form(std::size_t nvars, std::vector<Term> raw) {
    Polynomial p(nvars);
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
      return a.mono > b.mono;
    });
    for (auto& t : raw) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
      } else if (!t.coeff.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial constant(std::size_t nvars, GaussianRational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t var) {
    Polynomial p(nvars);
    p.terms_.push_back({Monomial::unit(nvars, var), GaussianRational(1)});
    return p;
  }

  static Polynomial monomial_term(Monomial m, GaussianRational c) {
    Polynomial p(m.nvars());
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const GaussianRational& leading_coefficient() const {
    return terms_.front().coeff;
  }

  /// Total degree of the highest term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, int(t.mono.total_degree()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().mono.total_degree();
    for (auto& t : terms_)
      if (t.mono.total_degree() != d) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    *this = merged(*this, o, false);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    *this = merged(*this, o, true);
    return *this;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merged(a, b, true);
  }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, -t.coeff});
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (auto& ta : a.terms_)
      for (auto& tb : b.terms_)
        raw.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
    return normal_form(a.nvars_, std::move(raw));
  }

  Polynomial scaled(const GaussianRational& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  /// add c * q into this (fused reduce step of the linear algebra layer).
  void add_scaled(const Polynomial& q, const GaussianRational& c) {
    *this = merged_scaled(*this, q, c);
  }

  /// Coefficient of a monomial (zero if absent).
  GaussianRational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, const Monomial& mm) { return t.mono > mm; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return GaussianRational();
  }

  /// Exact substitution; a ring homomorphism.
  GaussianRational evaluate(std::span<const GaussianRational> point) const {
    if (point.size() != nvars_)
      throw std::invalid_argument("evaluate: point length != variable count");
    GaussianRational sum;
    for (auto& t : terms_) {
      GaussianRational v = t.coeff;
      for (std::size_t k = 0; k < nvars_; ++k)
        for (unsigned e = 0; e < t.mono.deg(k); ++e) v *= point[k];
      sum += v;
    }
    return sum;
  }

  /// d/dx_var, exact.
  Polynomial derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (auto& t : terms_) {
      unsigned e = t.mono.deg(var);
      if (e == 0) continue;
      r.terms_.push_back(
          {t.mono.without_one(var), t.coeff * GaussianRational(long(e))});
    }
    // grevlex respects multiplication, so dividing the surviving terms by
    // x_var keeps them sorted.
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
      if (a.terms_[k].mono != b.terms_[k].mono ||
          a.terms_[k].coeff != b.terms_[k].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Canonical textual rendering, descending term order: coefficients in
  /// GaussianRational::str form, monomials as `name^e` products. Bit-stable.
  std::string str(std::span<const std::string> names) const;

  /// Parses the rendering grammar (plus parenthesized subexpressions, for
  /// tests and cached bases). Throws ParseError.
  static Polynomial parse(const std::string& text,
                          std::span<const std::string> names);

private:
  static Polynomial merged(const Polynomial& a, const Polynomial& b,
                           bool subtract) {
    return merged_scaled(
        a, b, subtract ? GaussianRational(-1) : GaussianRational(1));
  }

  static Polynomial merged_scaled(const Polynomial& a, const Polynomial& b,
                                  const GaussianRational& c) {
    Polynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() ||
          (i < a.terms_.size() && a.terms_[i].mono > b.terms_[j].mono)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].mono > a.terms_[i].mono) {
        GaussianRational v = b.terms_[j].coeff * c;
        if (!v.is_zero()) r.terms_.push_back({b.terms_[j].mono, std::move(v)});
        ++j;
      } else {
        GaussianRational v = a.terms_[i].coeff + b.terms_[j].coeff * c;
        if (!v.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_;
  std::vector<Term> terms_;
};

inline std::string Polynomial::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : terms_) {
    std::string c = t.coeff.str();
    bool neg = !c.empty() && c[0] == '-' && t.coeff.im() * t.coeff.re() == 0;
    if (neg) c = c.substr(1);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      unsigned e = t.mono.deg(k);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

namespace detail {

/// Recursive-descent parser for the polynomial rendering grammar.
class PolyParser {
public:
  PolyParser(const std::string& text, std::span<const std::string> names)
      : s_(text), names_(names) {}

  Polynomial run() {
    Polynomial p = parse_sum();
    skip_ws();
    if (pos_ != s_.size())
      throw ParseError("poly-syntax", "trailing characters", 1, int(pos_) + 1);
    return p;
  }

private:
  Polynomial parse_sum() {
    Polynomial acc(names_.size());
    bool neg = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    acc += parse_term(neg);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      get();
      acc += parse_term(c == '-');
    }
    return acc;
  }

  Polynomial parse_term(bool negated) {
    Polynomial acc = parse_factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc = acc * parse_factor();
      } else {
        break;
      }
    }
    return negated ? -acc : acc;
  }

  Polynomial parse_factor() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial inner = parse_sum();
      skip_ws();
      if (get() != ')')
        throw ParseError("poly-syntax", "expected ')'", 1, int(pos_));
      return maybe_power(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q = parse_rational();
      return Polynomial::constant(names_.size(), GaussianRational(q));
    }
    if (is_name_char(c)) {
      std::string name = parse_name();
      if (name == "i")
        return Polynomial::constant(names_.size(), GaussianRational::i());
      for (std::size_t k = 0; k < names_.size(); ++k) {
        if (names_[k] == name)
          return maybe_power(Polynomial::variable(names_.size(), k));
      }
      throw ParseError("unknown-generator", "unknown name '" + name + "'", 1,
                       int(pos_));
    }
    throw ParseError("poly-syntax", std::string("unexpected character '") + c + "'",
                     1, int(pos_) + 1);
  }

  Polynomial maybe_power(Polynomial base) {
    skip_ws();
    if (peek() != '^') return base;
    get();
    skip_ws();
    unsigned e = parse_uint();
    Polynomial acc = Polynomial::constant(names_.size(), GaussianRational(1));
    for (unsigned k = 0; k < e; ++k) acc = acc * base;
    return acc;
  }

  mpq_class parse_rational() {
    std::string num = parse_digits();
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      std::string den = parse_digits();
      mpq_class q(num + "/" + den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  unsigned parse_uint() { return unsigned(std::stoul(parse_digits())); }

  std::string parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError("poly-syntax", "expected number", 1, int(pos_) + 1);
    return s_.substr(start, pos_ - start);
  }

  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  const std::string& s_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text,
                                    std::span<const std::string> names) {
  return detail::PolyParser(text, names).run();
}

}  // namespace commutant
