#pragma once

#include "qlk/big_complex.hpp"
#include "qlk/gaussian_rational.hpp"
#include "qlk/series.hpp"

namespace qlk {

template <class C>
C from_rational(const Rational& r);
template <>
inline Rational from_rational<Rational>(const Rational& r) {
  return r;
}
template <>
inline GaussianRational from_rational<GaussianRational>(const Rational& r) {
  return GaussianRational(r);
}
template <>
inline BigComplex from_rational<BigComplex>(const Rational& r) {
  return BigComplex(to_real(r));
}

// e^{r h}.
template <class C = GaussianRational>
Series<C> exp_scaled(Rational r, int order) {
  r.canonicalize();
  Series<C> s(order);
  Rational term(1);
  s[0] = from_rational<C>(term);
  for (int k = 1; k <= order; ++k) {
    term = term * r / k;
    s[k] = from_rational<C>(term);
  }
  return s;
}

// q^e with q = e^{h/2}.
template <class C = GaussianRational>
Series<C> q_power(Rational e, int order) {
  e.canonicalize();
  return exp_scaled<C>(e / 2, order);
}

// [n] = (q^n - q^-n)/(q - q^-1) = sinh(n h/2)/sinh(h/2).
template <class C = GaussianRational>
Series<C> q_integer(long n, int order) {
  if (n == 0) return Series<C>(order);
  // sinh(x h)/h = sum_j x^{2j+1} h^{2j}/(2j+1)!
  auto sinh_over_h = [order](Rational x) {
    x.canonicalize();
    Series<Rational> s(order);
    Rational term = x;  // x^{2j+1}/(2j+1)!
    for (int j = 0; 2 * j <= order; ++j) {
      s[2 * j] = term;
      term = term * x * x / ((2 * j + 2) * (2 * j + 3));
    }
    return s;
  };
  Series<Rational> num = sinh_over_h(Rational(n, 2));
  Series<Rational> den = sinh_over_h(Rational(1, 2));
  Series<Rational> r = num / den;
  return r.template map<C>([](const Rational& x) { return from_rational<C>(x); });
}

// [n]! = [1][2]...[n].
template <class C = GaussianRational>
Series<C> q_factorial(long n, int order) {
  if (n < 0) throw std::domain_error("q_factorial of a negative integer");
  Series<C> r = Series<C>::one(order);
  for (long k = 2; k <= n; ++k) r *= q_integer<C>(k, order);
  return r;
}

// Quantum dimension [2 alpha + 1].
template <class C = GaussianRational>
Series<C> q_dim(long two_alpha, int order) {
  return q_integer<C>(two_alpha + 1, order);
}

// Square root of a series with nonzero constant term; the constant term uses the
// halved-argument branch.
Series<BigComplex> sqrt_series(const Series<BigComplex>& s);

}  // namespace qlk
