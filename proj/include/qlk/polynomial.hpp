#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qlk/big_complex.hpp"
#include "qlk/gaussian_rational.hpp"
#include "qlk/series.hpp"

namespace qlk {

// Polynomial in one formal parameter (the spin z or the Lorentz parameter p).
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) { set_constant(C(c)); }  // NOLINT(runtime/explicit)
  Polynomial(const C& c) { set_constant(c); }  // NOLINT(runtime/explicit)
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  // The monomial x.
  static Polynomial variable() { return Polynomial(std::vector<C>{C(0), C(1)}); }
  static Polynomial monomial(const C& coef, int degree) {
    std::vector<C> v(static_cast<size_t>(degree) + 1, C(0));
    v.back() = coef;
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  C coefficient(int k) const { return k >= 0 && k <= degree() ? c_[k] : C(0); }
  const std::vector<C>& coeffs() const { return c_; }
  bool is_constant() const { return degree() <= 0; }

  C operator()(const C& x) const {
    C r(0);
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
  }

  // P(a x + b).
  Polynomial compose_linear(const C& a, const C& b) const {
    Polynomial lin(std::vector<C>{b, a});
    Polynomial r;
    for (int k = degree(); k >= 0; --k) r = r * lin + Polynomial(c_[k]);
    return r;
  }

  // True when only even powers occur.
  bool is_even() const {
    for (int k = 1; k <= degree(); k += 2)
      if (!detail::coeff_is_zero(c_[k])) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
  }
  // Division by a constant polynomial only.
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    if (!b.is_constant() || b.is_zero()) throw std::domain_error("polynomial division by a non-constant");
    C inv = C(1) / b.c_[0];
    Polynomial r(a);
    for (auto& x : r.c_) x *= inv;
    r.trim();
    return r;
  }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  template <class D, class F>
  Polynomial<D> map(F&& f) const {
    std::vector<D> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return Polynomial<D>(std::move(v));
  }

 private:
  void set_constant(const C& c) {
    c_.clear();
    if (!detail::coeff_is_zero(c)) c_.push_back(c);
  }
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <class C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

using ParamPolynomial = Polynomial<GaussianRational>;
using FloatPolynomial = Polynomial<BigComplex>;
using PolySeries = Series<ParamPolynomial>;

// Text such as "1/6*z^2 + 1/6*z".
std::string to_string(const ParamPolynomial& p, const std::string& var);

// Substitutes a point for the parameter in every coefficient.
Series<GaussianRational> specialize(const PolySeries& s, const GaussianRational& point);
Series<BigComplex> specialize(const Series<FloatPolynomial>& s, const BigComplex& point);

// Exact Lagrange interpolation through (x_k, y_k); the x_k must be distinct.
ParamPolynomial interpolate(const std::vector<GaussianRational>& xs,
                            const std::vector<GaussianRational>& ys);

FloatPolynomial to_float(const ParamPolynomial& p);
Series<BigComplex> to_float(const Series<GaussianRational>& s);
Series<BigComplex> to_float(const Series<Rational>& s);
Series<GaussianRational> to_gaussian(const Series<Rational>& s);

}  // namespace qlk
