#include <random>

#include "doctest.h"
#include "qlk/big_complex.hpp"
#include "qlk/chord_diagram.hpp"
#include "qlk/io.hpp"
#include "qlk/polynomial.hpp"
#include "qlk/q_arith.hpp"
#include "qlk/series.hpp"

using namespace qlk;

namespace {

GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

Series<GaussianRational> random_series(std::mt19937& rng, int order, bool unit = false) {
  Series<GaussianRational> s(order);
  for (int k = 0; k <= order; ++k) s[k] = random_gaussian(rng);
  if (unit && s[0].is_zero()) s[0] = 1;
  return s;
}

ParamPolynomial random_poly(std::mt19937& rng, int degree) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_gaussian(rng));
  return ParamPolynomial(c);
}

}  // namespace

TEST_CASE("gaussian rationals form a field") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == GaussianRational(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
  }
}

TEST_CASE("gaussian rational text round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    GaussianRational a = random_gaussian(rng);
    CHECK(GaussianRational::parse(a.to_string()) == a);
  }
  CHECK(GaussianRational::parse("i") == GaussianRational::i());
  CHECK(GaussianRational::parse("-i/2") == GaussianRational(Rational(0), Rational(-1, 2)));
  CHECK(GaussianRational::parse("3/4") == GaussianRational::fraction(3, 4));
  CHECK_THROWS(GaussianRational::parse("x"));
}

TEST_CASE("series ring and inverse") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = random_series(rng, 6), b = random_series(rng, 6), u = random_series(rng, 6, true);
    CHECK(a * b == b * a);
    CHECK(u * u.inverse() == Series<GaussianRational>::one(6));
    CHECK((a + b) * u == a * u + b * u);
    CHECK(u.pow(3) == u * u * u);
    CHECK(u.pow(-2) * u.pow(2) == Series<GaussianRational>::one(6));
  }
}

TEST_CASE("exponentials add exponents") {
  GaussianRational a = GaussianRational::fraction(2, 3), b(Rational(-1, 5), Rational(1, 2));
  CHECK(exp_series(a, 8) * exp_series(b, 8) == exp_series(a + b, 8));
  Series<GaussianRational> x(8);
  x[1] = a;
  CHECK(exp_of(x) == exp_series(a, 8));
}

TEST_CASE("quantum integers") {
  const int n_order = 8;
  Series<Rational> q = q_power<Rational>(Rational(1), n_order), qi = q_power<Rational>(Rational(-1), n_order);
  for (long n = 0; n <= 6; ++n) {
    Series<Rational> lhs = q_integer<Rational>(n, n_order) * (q - qi);
    Series<Rational> rhs = q_power<Rational>(Rational(n), n_order) - q_power<Rational>(Rational(-n), n_order);
    CHECK(lhs == rhs);
    CHECK(q_integer<Rational>(n, n_order)[0] == Rational(n));
    for (long m = 0; m <= 6; ++m)
      CHECK(q_integer<Rational>(n, n_order) * q_integer<Rational>(m, n_order) ==
            q_integer<Rational>(m, n_order) * q_integer<Rational>(n, n_order));
  }
  CHECK(q_factorial<Rational>(4, 6) ==
        q_integer<Rational>(2, 6) * q_integer<Rational>(3, 6) * q_integer<Rational>(4, 6));
}

TEST_CASE("interpolation recovers polynomials") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    ParamPolynomial p = random_poly(rng, 5);
    std::vector<GaussianRational> xs, ys;
    for (int k = 0; k <= 5; ++k) {
      xs.push_back(GaussianRational::fraction(k, 2));
      ys.push_back(p(xs.back()));
    }
    CHECK(interpolate(xs, ys) == p);
  }
}

TEST_CASE("specialization commutes with series products") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    PolySeries a(4), b(4);
    for (int k = 0; k <= 4; ++k) {
      a[k] = random_poly(rng, 3);
      b[k] = random_poly(rng, 2);
    }
    GaussianRational x = random_gaussian(rng);
    CHECK(specialize(a * b, x) == specialize(a, x) * specialize(b, x));
    CHECK(specialize(a + b, x) == specialize(a, x) + specialize(b, x));
  }
}

TEST_CASE("polynomial helpers") {
  ParamPolynomial p(std::vector<GaussianRational>{1, 0, 3});
  CHECK(p.is_even());
  CHECK(p.compose_linear(2, 1) == ParamPolynomial(std::vector<GaussianRational>{4, 12, 12}));
  CHECK(to_string(p, "z") == "3*z^2 + 1");
}

TEST_CASE("big complex arithmetic at the working precision") {
  PrecisionGuard guard(50);
  BigComplex i = sqrt_halved_argument(BigComplex(-1));
  CHECK((i - BigComplex(Real(0), Real(1))).abs() < Real(1e-48));
  BigComplex z(Real(3), Real(-4));
  CHECK(abs(z.abs() - Real(5)) < Real(1e-48));
  CHECK(((z / z) - BigComplex(1)).abs() < Real(1e-48));
  Series<BigComplex> s = to_float(exp_scaled(Rational(1, 3), 6));
  Series<BigComplex> r = sqrt_series(s);
  Series<BigComplex> back = r * r;
  for (int k = 0; k <= 6; ++k) CHECK((back[k] - s[k]).abs() < Real(1e-45));
}

TEST_CASE("precision guard restores the previous precision") {
  unsigned before = working_precision();
  {
    PrecisionGuard g(90);
    CHECK(working_precision() == 90);
  }
  CHECK(working_precision() == before);
}

TEST_CASE("json round trips") {
  std::mt19937 rng(13);
  auto s = random_series(rng, 5);
  CHECK(series_from_json(Json::parse(to_json(s).dump())) == s);
  Json j = to_json(s);
  CHECK(j["order"] == 5);
  CHECK(j["coeffs"].size() == 6);
  CHECK(j["coeffs"][0].size() == 4);
  DiagramSum d(ChordDiagram::parse("ABAB"), GaussianRational::fraction(-3, 2));
  d.add(ChordDiagram::parse("AABB"), GaussianRational::i());
  CHECK(diagram_sum_from_json(Json::parse(to_json(d).dump())) == d);
}
