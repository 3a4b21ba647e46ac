#pragma once

// Reference values computed independently of the library's own pipelines.

#include <algorithm>
#include <array>

#include "qlk/big_complex.hpp"
#include "qlk/polynomial.hpp"
#include "qlk/series.hpp"

namespace qlk::oracle {

// Taylor expansion of sinh((2z+1)h/2) / ((2z+1) sinh(h/2)) in h, coefficients
// polynomial in z. Uses sinh(x h/2)/(x h) = sum_j x^{2j} h^{2j} / (2^{2j+1} (2j+1)!).
inline PolySeries unknot_taylor(int order) {
  ParamPolynomial x(std::vector<GaussianRational>{1, 2});
  PolySeries num(order), den(order);
  ParamPolynomial xpow(1);
  Rational scale(1, 2);  // 1/(2^{2j+1} (2j+1)!)
  for (int j = 0; 2 * j <= order; ++j) {
    num[2 * j] = xpow * ParamPolynomial(GaussianRational(scale));
    den[2 * j] = ParamPolynomial(GaussianRational(scale));
    xpow = xpow * x * x;
    scale /= 4 * (2 * j + 2) * (2 * j + 3);
    scale.canonicalize();
  }
  return num / den;
}

// Eigenvalues of the two Casimirs on the Lorentz module (m, p): (p^2 +- 2mp + m^2 - 1)/8.
inline ParamPolynomial casimir(long m, int sign) {
  GaussianRational e = GaussianRational::fraction(1, 8);
  return ParamPolynomial(std::vector<GaussianRational>{GaussianRational(m * m - 1) * e,
                                                       GaussianRational(2 * sign * m) * e, e});
}

// q^a with q = e^{h/2}.
inline Series<BigComplex> qpow(const BigComplex& a, int order) {
  return exp_series<BigComplex>(a * BigComplex(Real(1) / 2), order);
}

// Closed forms of Lambda^{A 1/2 B}_D(p) for the four admissible label patterns
// around spin C; form 0 needs C > 0.
inline Series<BigComplex> half_spin_lambda(int form, int C, const BigComplex& p, int order) {
  auto q = [&](const BigComplex& a) { return qpow(a, order); };
  Series<BigComplex> one = Series<BigComplex>::one(order);
  Series<BigComplex> qp = q(p), qm = q(-p);
  switch (form) {
    case 0:
      return q(C) * (qp + qm) / (q(2 * C) + one);
    case 1:
      return -(q(C + 1) * (qp + qm) / (q(2 * C + 2) + one));
    case 2:
      return (q(2 * C + 2) * qp - qm) / (q(2 * C + 2) + one);
    default:
      return (q(2 * C + 2) * qm - qp) / (q(2 * C + 2) + one);
  }
}

// Doubled labels (A, B, C, D) of Lambda^{ABC}_D for the closed forms above.
inline std::array<int, 4> half_spin_labels(int form, int C) {
  switch (form) {
    case 0: return {2 * C, 1, 2 * C - 1, 2 * C};
    case 1: return {2 * C, 1, 2 * C + 1, 2 * C};
    case 2: return {2 * C, 1, 2 * C + 1, 2 * C + 2};
    default: return {2 * C + 2, 1, 2 * C + 1, 2 * C};
  }
}

inline Real max_abs_diff(const Series<BigComplex>& a, const Series<BigComplex>& b) {
  Real m = 0;
  for (int k = 0; k <= std::min(a.order(), b.order()); ++k) m = std::max(m, (a[k] - b[k]).abs());
  return m;
}

}  // namespace qlk::oracle
