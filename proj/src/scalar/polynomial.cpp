#include "qlk/polynomial.hpp"

#include "qlk/errors.hpp"

namespace qlk {

std::string to_string(const ParamPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussianRational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    if (!out.empty()) {
      if (cs[0] == '-') {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += cs;
    } else {
      if (cs != "1") out += (cs == "-1" ? std::string("-") : cs + "*");
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Series<GaussianRational> specialize(const PolySeries& s, const GaussianRational& point) {
  Series<GaussianRational> r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = s[k](point);
  return r;
}

Series<BigComplex> specialize(const Series<FloatPolynomial>& s, const BigComplex& point) {
  Series<BigComplex> r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = s[k](point);
  return r;
}

ParamPolynomial interpolate(const std::vector<GaussianRational>& xs,
                            const std::vector<GaussianRational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  size_t n = xs.size();
  // Newton divided differences.
  std::vector<GaussianRational> d(ys);
  for (size_t level = 1; level < n; ++level)
    for (size_t k = n - 1; k >= level; --k) {
      GaussianRational dx = xs[k] - xs[k - level];
      if (dx.is_zero()) throw std::invalid_argument("interpolate: repeated node");
      d[k] = (d[k] - d[k - 1]) / dx;
      if (k == level) break;
    }
  ParamPolynomial p;
  for (size_t k = n; k-- > 0;) {
    p = p * ParamPolynomial(std::vector<GaussianRational>{-xs[k], GaussianRational(1)}) +
        ParamPolynomial(d[k]);
  }
  return p;
}

FloatPolynomial to_float(const ParamPolynomial& p) {
  return p.map<BigComplex>([](const GaussianRational& c) { return BigComplex(c); });
}

Series<BigComplex> to_float(const Series<GaussianRational>& s) {
  return s.map<BigComplex>([](const GaussianRational& c) { return BigComplex(c); });
}

Series<BigComplex> to_float(const Series<Rational>& s) {
  return s.map<BigComplex>([](const Rational& c) { return BigComplex(to_real(c)); });
}

Series<GaussianRational> to_gaussian(const Series<Rational>& s) {
  return s.map<GaussianRational>([](const Rational& c) { return GaussianRational(c); });
}

}  // namespace qlk
