#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "qlk/gaussian_rational.hpp"

namespace qlk {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

// Sets the decimal working precision for all Real values created afterwards.
void set_working_precision(unsigned digits);
unsigned working_precision();

// Scoped precision change, restored on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(working_precision()) {
    set_working_precision(digits);
  }
  ~PrecisionGuard() { set_working_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);

class BigComplex {
 public:
  BigComplex() : re_(0), im_(0) {}
  BigComplex(long v) : re_(v), im_(0) {}  // NOLINT(runtime/explicit)
  BigComplex(Real re, Real im = Real(0)) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  BigComplex(const GaussianRational& g) : re_(to_real(g.re())), im_(to_real(g.im())) {}  // NOLINT

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real abs() const;
  Real norm() const { return re_ * re_ + im_ * im_; }
  bool is_zero() const { return re_ == 0 && im_ == 0; }
  BigComplex conj() const { return {re_, -im_}; }

  BigComplex& operator+=(const BigComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re_, -im_}; }

  // Exact equality of the stored values; numerical comparisons use abs().
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string(int digits = 0) const;

 private:
  Real re_, im_;
};

// Square root with the argument taken in [0, 2pi) and halved, so sqrt(-1) = i.
BigComplex sqrt_halved_argument(const BigComplex& z);

inline bool is_zero(const BigComplex& x) { return x.is_zero(); }
inline Real magnitude(const BigComplex& x) { return x.abs(); }

std::ostream& operator<<(std::ostream& os, const BigComplex& x);

}  // namespace qlk
