#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace qlk {

using Rational = mpq_class;

// Exact element of Q(i).
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(runtime/explicit)
  GaussianRational(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Rational(0), Rational(1)}; }
  static GaussianRational fraction(long num, long den) { return Rational(num, den); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

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
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
  // Lexicographic, only for use as a map key.
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ != b.re_ ? a.re_ < b.re_ : a.im_ < b.im_;
  }

  // "3/4", "-1/2+5i", "i/3" style text.
  std::string to_string() const;
  // Accepts "a", "a/b", "a+bi", "a/b-c/di", "i", "-i/2".
  static GaussianRational parse(const std::string& text);

 private:
  Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace qlk
