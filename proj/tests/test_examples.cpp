// Worked examples for individual operations, one group per module.

#include "doctest.h"
#include "oracles.hpp"
#include "qlk/braid.hpp"
#include "qlk/chord_diagram.hpp"
#include "qlk/jones.hpp"
#include "qlk/lorentz_invariants.hpp"
#include "qlk/lorentz_qgroup.hpp"
#include "qlk/q_arith.hpp"
#include "qlk/weight_systems.hpp"

using namespace qlk;

namespace {

GaussianRational fr(long a, long b) { return GaussianRational::fraction(a, b); }

Series<GaussianRational> series_of(std::vector<GaussianRational> c) {
  Series<GaussianRational> s(static_cast<int>(c.size()) - 1);
  for (size_t k = 0; k < c.size(); ++k) s[static_cast<int>(k)] = c[k];
  return s;
}

// (q^n - q^-n)/(q - q^-1) by dividing the two Taylor series after removing h.
Series<Rational> quantum_ratio(long n, int order) {
  auto diff = [order](long e) {
    return exp_scaled<Rational>(Rational(e, 2), order + 1) - exp_scaled<Rational>(Rational(-e, 2), order + 1);
  };
  return diff(n).divide_by_h_power(1) / diff(1).divide_by_h_power(1);
}

Real close(const Series<BigComplex>& a, const Series<BigComplex>& b) { return oracle::max_abs_diff(a, b); }

}  // namespace

TEST_CASE("scalar series examples") {
  CHECK(exp_scaled(Rational(0), 4) == Series<GaussianRational>::one(4));
  CHECK(exp_scaled(Rational(1, 2), 2) == series_of({1, fr(1, 2), fr(1, 8)}));
  CHECK(exp_scaled(Rational(-1, 2), 2) * exp_scaled(Rational(1, 2), 2) == Series<GaussianRational>::one(2));
  CHECK(q_integer<Rational>(1, 4) == Series<Rational>::one(4));
  CHECK(q_integer<Rational>(2, 2) == quantum_ratio(2, 2));
  CHECK(q_integer<Rational>(2, 2)[2] == Rational(1, 4));
  for (long n = 1; n <= 10; ++n) CHECK(q_integer<Rational>(n, 3)[0] == Rational(n));
  CHECK(q_factorial<Rational>(0, 3) == Series<Rational>::one(3));
  CHECK(q_dim<Rational>(0, 3) == Series<Rational>::one(3));
  CHECK(q_dim<Rational>(2, 4)[0] == Rational(3));
  CHECK(q_dim<Rational>(2, 4) == quantum_ratio(3, 4));
}

TEST_CASE("square roots of series") {
  PrecisionGuard g(60);
  CHECK(close(sqrt_series(Series<BigComplex>::one(4)), Series<BigComplex>::one(4)) < Real(1e-55));
  Series<BigComplex> two = to_float(q_integer<Rational>(2, 6));
  Series<BigComplex> r = sqrt_series(two);
  CHECK(close(r * r, two) < Real(1e-50));
  Series<BigComplex> neg = -Series<BigComplex>::one(3);
  neg[1] = BigComplex(2);
  Series<BigComplex> s = sqrt_series(neg);
  CHECK((s[0] - BigComplex(Real(0), Real(1))).abs() < Real(1e-55));
  CHECK(close(s * s, neg) < Real(1e-50));
}

TEST_CASE("chord diagram examples") {
  CHECK(ChordDiagram::parse("AA").chords() == 1);
  CHECK(ChordDiagram::parse("ABAB") != ChordDiagram::parse("AABB"));
  // ABBA is AABB read from another base point.
  CHECK(ChordDiagram::parse("ABBA") == ChordDiagram::parse("AABB"));
  CHECK(enumerate_diagrams(0) == std::vector<ChordDiagram>{ChordDiagram()});
  CHECK(enumerate_diagrams(1) == std::vector<ChordDiagram>{ChordDiagram::parse("AA")});
  CHECK(connected_sum(ChordDiagram(), ChordDiagram::parse("ABCACB")) == ChordDiagram::parse("ABCACB"));
}

TEST_CASE("coproduct examples") {
  ChordDiagram unit, theta = ChordDiagram::parse("AA");
  TensorDiagramSum u;
  u.add(unit, unit, 1);
  CHECK(coproduct(unit) == u);
  TensorDiagramSum t;
  t.add(theta, unit, 1);
  t.add(unit, theta, 1);
  CHECK(coproduct(theta) == t);
  // exp of one chord is grouplike through four chords
  std::vector<DiagramSum> powers{DiagramSum(unit)};
  for (int k = 1; k <= 4; ++k) powers.push_back(connected_sum(powers.back(), DiagramSum(theta)));
  Rational f(1);
  std::vector<Rational> inv_fact{1};
  for (int k = 1; k <= 4; ++k) inv_fact.push_back(inv_fact.back() / k);
  for (int k = 0; k <= 4; ++k) {
    TensorDiagramSum lhs = coproduct(powers[k] * GaussianRational(inv_fact[k])), rhs;
    for (int i = 0; i <= k; ++i)
      for (const auto& [a, ca] : powers[i].terms())
        for (const auto& [b, cb] : powers[k - i].terms())
          rhs.add(a, b, ca * cb * GaussianRational(inv_fact[i] * inv_fact[k - i]));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("weight map examples") {
  auto w = phi_words(t_jones(), ChordDiagram());
  REQUIRE(w.size() == 1);
  CHECK(w[0].letters.empty());
  CHECK(w[0].coeff == GaussianRational(1));
  auto one = phi_words(t_jones(), ChordDiagram::parse("AA"));
  CHECK(one.size() == t_jones().terms().size());
  for (const auto& x : one) CHECK(x.letters.size() == 2);
  // With a single term a (x) b the first endpoint of each chord carries a and the second b,
  // and the letters are read from the last point of the circle to the first.
  InfinitesimalRMatrix ef("ef", Alphabet::SL2, {{GaussianRational(1), Gen::E, Gen::F}});
  ChordDiagram d3 = ChordDiagram::parse("ABCACB");
  auto three = phi_words(ef, d3);
  REQUIRE(three.size() == 1);
  std::vector<Gen> expected;
  std::vector<bool> seen(3, false);
  for (int c : d3.word()) {
    expected.insert(expected.begin(), seen[c] ? Gen::F : Gen::E);
    seen[c] = true;
  }
  CHECK(three[0].letters == expected);
  CHECK(lambda_z_sl2(ChordDiagram(), t_jones()) == ParamPolynomial(1));
  for (const auto& d : enumerate_diagrams(4)) CHECK(lambda_z_sl2(d, t_jones()).degree() <= 8);
}

TEST_CASE("Lorentz character examples") {
  CHECK(lambda_mp_factorized(ChordDiagram(), Rational(1)) == ParamPolynomial(1));
  CHECK(lambda_mp_direct(ChordDiagram(), 1) == ParamPolynomial(1));
  ChordDiagram theta = ChordDiagram::parse("AA");
  for (long m : {0L, 1L, 2L}) {
    // minus (C^l - C^r) = -mp/2
    ParamPolynomial expected = ParamPolynomial::monomial(fr(-m, 2), 1);
    CHECK(lambda_mp_factorized(theta, Rational(m)) == expected);
    CHECK(lambda_mp_direct(theta, m, t_lorentz()) == expected);
  }
  auto trivial = casimir_eigenvalues(0, 1);
  CHECK(trivial.first.is_zero());
  CHECK(trivial.second.is_zero());
  auto [l, r] = casimir_polynomials(0);
  ParamPolynomial p2(std::vector<GaussianRational>{fr(-1, 8), 0, fr(1, 8)});
  CHECK(l == p2);
  CHECK(r == p2);
}

TEST_CASE("braid examples") {
  CHECK(is_knot(parse_braid("s1 s2", 3)));
  CHECK_FALSE(is_knot(parse_braid("s1", 3)));
  CHECK(writhe(catalog_knot("T+").braid) == 3);
  auto v = markov_variants(parse_braid("", 1));
  CHECK(std::find(v.begin(), v.end(), parse_braid("s1", 2)) != v.end());
  BraidWord t = catalog_knot("T+").braid;
  for (const auto& x : markov_variants(t)) {
    int dw = writhe(x) - writhe(t);
    if (x.strands == t.strands)
      CHECK(dw == 0);
    else
      CHECK(std::abs(dw) == 1);
  }
}

TEST_CASE("R-matrix examples") {
  SeriesOperator r0 = r_matrix(0, 3);
  CHECK(r0 == SeriesOperator::identity(1, 3));
  for (int ta : {1, 2}) {
    SeriesOperator sq = r_matrix(ta, 3) * r_matrix(ta, 3);
    int d = (ta + 1) * (ta + 1);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) CHECK(sq.at(i, j)[0] == Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("framing factor examples") {
  CHECK(framing_factor(0, 4) == Series<GaussianRational>::one(4));
  PolySeries f = framing_factor_symbolic(4);
  PolySeries x(4);
  x[1] = lambda_z_sl2(ChordDiagram::parse("AA"), t_cartan_killing()) * ParamPolynomial(2);
  CHECK(f * exp_of(x) == PolySeries::one(4));
  BraidWord t = catalog_knot("T+").braid;
  BraidWord up = t, down = t;
  up.strands = down.strands = 3;
  up.letters.push_back(2);
  down.letters.push_back(-2);
  for (int ta = 0; ta <= 3; ++ta) {
    CHECK(jones_framed(up, ta, 4) == jones_framed(t, ta, 4) * framing_factor(ta, 4));
    CHECK(jones_framed(down, ta, 4) == jones_framed(t, ta, 4) * framing_factor(ta, 4).inverse());
  }
}

TEST_CASE("Jones examples") {
  // The framed unknot is the quantum dimension over the classical one.
  for (int ta = 0; ta <= 3; ++ta) {
    Series<GaussianRational> expected = to_gaussian(q_dim<Rational>(ta, 4)) * fr(1, ta + 1);
    CHECK(jones_framed(parse_braid("", 1), ta, 4) == expected);
  }
  CHECK(jones_framed(catalog_knot("T+").braid, 1, 4)[0] == GaussianRational(1));
  PolySeries u = jones_z_interpolated(parse_braid("", 1), 3);
  CHECK(u[2] == ParamPolynomial(std::vector<GaussianRational>{0, fr(1, 6), fr(1, 6)}));
  for (const auto& name : catalog_names()) CHECK(jones_z_interpolated(catalog_knot(name).braid, 2)[0] == ParamPolynomial(1));
}

TEST_CASE("quantum group examples") {
  PrecisionGuard g(60);
  const int n = 3;
  CHECK(close(quantum_cg(0, 0, 0, 0, 0, 0, n), Series<BigComplex>::one(n)) < Real(1e-55));
  BigComplex rho(3);
  // <v^0_0, g v^beta> and the v^0_0 image of g, with all normalizers 1.
  for (int a = 0; a <= 2; ++a)
    for (int i = -a; i <= a; ++i)
      for (int j = -a; j <= a; ++j) {
        for (int b = 0; b <= 3; ++b)
          for (int k = -b; k <= b; ++k) {
            auto out = g_action(2 * a, 2 * i, 2 * j, {b, k}, rho, n);
            auto it = out.find({0, 0});
            Series<BigComplex> lhs = it == out.end() ? Series<BigComplex>(n) : it->second;
            auto rhs = quantum_cg_right(2 * a, 2 * a, 2 * b, 2 * i, 2 * j, 2 * k, n) * lambda_coeff(0, 2 * a, 2 * a, 2 * b, rho, n);
            CHECK(close(lhs, rhs) < Real(1e-45));
          }
        auto out = g_action(2 * a, 2 * i, 2 * j, {0, 0}, rho, n);
        for (int c = 0; c <= 2 * a; ++c)
          for (int ic = -c; ic <= c; ++ic) {
            auto it = out.find({c, ic});
            Series<BigComplex> lhs = it == out.end() ? Series<BigComplex>(n) : it->second;
            auto rhs = quantum_cg(2 * c, 2 * a, 2 * a, 2 * ic, 2 * i, 2 * j, n) * lambda_coeff(2 * c, 2 * a, 2 * a, 0, rho, n);
            CHECK(close(lhs, rhs) < Real(1e-45));
          }
      }
  auto x = x_action(0, 0, 0, {0, 0}, n);
  REQUIRE(x.size() == 1);
  CHECK(x.begin()->first == BalancedState{0, 0});
  CHECK(x_action(2, 0, 0, {2, 0}, n).empty());
  auto gv = G_action({1, 1}, n);
  CHECK(close(gv.begin()->second, to_float(exp_scaled(Rational(1), n))) < Real(1e-55));
}

TEST_CASE("braid sum examples") {
  PrecisionGuard g(60);
  const int n = 4;
  CHECK(close(braid_sum(parse_braid("", 1), BigComplex(2), {n, -1}), Series<BigComplex>::one(n)) < Real(1e-55));
  for (long p : {2L, 3L}) {
    Series<BigComplex> c = trefoil_closed_sum(BigComplex(p), n);
    CHECK((c[0] - BigComplex(1)).abs() < Real(1e-50));
  }
  // A crossing followed by its inverse cancels.
  BraidSumOptions o{3, -1};
  CHECK(close(braid_sum(parse_braid("s1 s2 s1 -s1", 3), BigComplex(2), o),
              braid_sum(parse_braid("s1 s2", 3), BigComplex(2), o)) < Real(1e-45));
  for (int a2 : {1, 3, 5}) CHECK(close(lambda_coeff(a2, a2, a2, 0, BigComplex(2), n), Series<BigComplex>(n)) < Real(1e-50));
}

TEST_CASE("Lorentz invariant examples") {
  CHECK(framing_ratio(0, 4) == PolySeries::one(4));
  CHECK(framing_ratio(1, 4) != PolySeries::one(4));
  BraidWord t = catalog_knot("T+").braid;
  CHECK(x_invariant_framed(t, 0, 4, 2).series == x_invariant(t, 0, 4).series);
  CHECK(x_invariant_framed(t, 1, 4, 1).series != x_invariant(t, 1, 4).series);
  auto r00 = jones_relation_check(t, 0, 0, 3);
  CHECK(r00.pass);
  CHECK(r00.x_side[0] == GaussianRational(1));
  auto r10 = jones_relation_check(t, 2, 0, 3);
  CHECK(r10.pass);
  CHECK(r10.x_side == jones_unframed(mirror(t), 2, 3));
  PrecisionGuard g(60);
  EquivalenceReport u = equivalence_check(parse_braid("", 1), 1, 4);
  CHECK(u.pass);
  CHECK(u.jones_side == Series<GaussianRational>::one(4));
  CHECK(equivalence_check(catalog_knot("T-").braid, 2, 4).pass);
  CHECK(equivalence_check(catalog_knot("figure-eight").braid, 3, 3).pass);
}
