#include "qlk/io.hpp"

#include "qlk/errors.hpp"

namespace qlk {

namespace {

Json rational_pair(const Rational& r) { return {r.get_num().get_str(), r.get_den().get_str()}; }

Rational rational_from(const Json& num, const Json& den) {
  Rational r(mpz_class(num.get<std::string>()), mpz_class(den.get<std::string>()));
  r.canonicalize();
  return r;
}

Json float_json(const BigComplex& c, int digits) {
  return {{"re", c.re().str(digits, std::ios_base::scientific)},
          {"im", c.im().str(digits, std::ios_base::scientific)}};
}

}  // namespace

Json to_json(const GaussianRational& x) {
  Json a = rational_pair(x.re()), b = rational_pair(x.im());
  return {a[0], a[1], b[0], b[1]};
}

GaussianRational gaussian_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw UsageError("exact coefficient must be [re_num, re_den, im_num, im_den]");
  return {rational_from(j[0], j[1]), rational_from(j[2], j[3])};
}

Json to_json(const Series<GaussianRational>& s) {
  Json c = Json::array();
  for (int k = 0; k <= s.order(); ++k) c.push_back(to_json(s[k]));
  return {{"order", s.order()}, {"coeffs", c}};
}

Json to_json(const Series<BigComplex>& s, int digits) {
  Json c = Json::array();
  for (int k = 0; k <= s.order(); ++k) c.push_back(float_json(s[k], digits));
  return {{"order", s.order()}, {"coeffs", c}};
}

Series<GaussianRational> series_from_json(const Json& j) {
  int order = j.at("order").get<int>();
  const Json& c = j.at("coeffs");
  if (static_cast<int>(c.size()) != order + 1) throw UsageError("series needs order+1 coefficients");
  Series<GaussianRational> s(order);
  for (int k = 0; k <= order; ++k) s[k] = gaussian_from_json(c[k]);
  return s;
}

Json to_json(const ParamPolynomial& p) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(to_json(x));
  return c;
}

Json to_json(const PolySeries& s) {
  Json c = Json::array();
  for (int k = 0; k <= s.order(); ++k) c.push_back(to_json(s[k]));
  return {{"order", s.order()}, {"coeffs", c}};
}

Json to_json(const FloatPolynomial& p, int digits) {
  Json c = Json::array();
  for (const auto& x : p.coeffs()) c.push_back(float_json(x, digits));
  return c;
}

Json to_json(const Series<FloatPolynomial>& s, int digits) {
  Json c = Json::array();
  for (int k = 0; k <= s.order(); ++k) c.push_back(to_json(s[k], digits));
  return {{"order", s.order()}, {"coeffs", c}};
}

Json to_json(const DiagramSum& d) {
  Json out = Json::array();
  for (const auto& [dia, c] : d.terms()) out.push_back({{"word", dia.to_string()}, {"coeff", to_json(c)}});
  return out;
}

DiagramSum diagram_sum_from_json(const Json& j) {
  DiagramSum d;
  for (const auto& t : j) d.add(ChordDiagram::parse(t.at("word").get<std::string>()), gaussian_from_json(t.at("coeff")));
  return d;
}

}  // namespace qlk
