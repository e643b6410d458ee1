#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace commutant {

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// All arithmetic is exact; values are always in lowest terms with positive
/// denominators (mpq_class canonical form).
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(mpq_class re, mpq_class im = mpq_class(0))
      : re_(std::move(re)), im_(std::move(im)) {
    // lowest terms with positive denominators, always (mpq arithmetic
    // requires canonical operands)
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return GaussianRational(0, 1); }

  /// re = n/d, exact.
  static GaussianRational ratio(long n, long d) {
    return GaussianRational(canonical(n, d));
  }
  /// (n/d)*i, exact.
  static GaussianRational imag_ratio(long n, long d) {
    return GaussianRational(0, canonical(n, d));
  }

  GaussianRational(long re, long im) : re_(re), im_(im) {}

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return im_ == 0 && re_ == 1; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    a *= b;
    return a;
  }
  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  /// Multiplicative inverse; undefined on zero (asserts via division).
  GaussianRational inverse() const {
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussianRational(re_ / n, -im_ / n);
  }
  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    return a * b.inverse();
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  /// Canonical rendering: "2/3", "i", "-5*i", "(1/2-2/3*i)". Bit-stable;
  /// round-trips through the polynomial/chain parsers.
  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string imag = imag_part_str(im_);
    if (re_ == 0) return imag;
    std::string s = "(" + re_.get_str();
    if (im_ > 0) s += "+";
    s += imag + ")";
    return s;
  }

private:
  static mpq_class canonical(long n, long d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }
  static std::string imag_part_str(const mpq_class& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return im.get_str() + "*i";
  }

  mpq_class re_, im_;
};

}  // namespace commutant
