#include "doctest.h"
#include "oracles.hpp"
#include "qlk/braid.hpp"
#include "qlk/jones.hpp"
#include "qlk/q_arith.hpp"

using namespace qlk;

namespace {

// sum_k c_k t^{e_k} with t = e^{s h}.
Series<GaussianRational> laurent(const std::vector<std::pair<long, long>>& terms, long s, int order) {
  Series<GaussianRational> r(order);
  for (auto [c, e] : terms) r += exp_scaled(Rational(s * e), order) * GaussianRational(c);
  return r;
}

// (q + q^-1)/2, the spin-1/2 unknot normalized by its dimension.
Series<GaussianRational> half_unknot(int order) {
  return (q_power(Rational(1), order) + q_power(Rational(-1), order)) * GaussianRational::fraction(1, 2);
}

}  // namespace

TEST_CASE("R-matrix satisfies the braid relation") {
  for (int ta : {1, 2}) {
    const int n = 3;
    SeriesOperator r = r_matrix(ta, n), id = SeriesOperator::identity(ta + 1, n);
    SeriesOperator a = kron(r, id), b = kron(id, r);
    CHECK(a * b * a == b * a * b);
  }
}

TEST_CASE("R-matrix inverse") {
  for (int ta : {1, 2, 3}) {
    SeriesOperator r = r_matrix(ta, 5), ri = r_matrix_inverse(ta, 5);
    CHECK(r * ri == SeriesOperator::identity((ta + 1) * (ta + 1), 5));
  }
}

TEST_CASE("a kink changes the framed invariant by the framing factor") {
  for (int ta = 0; ta <= 3; ++ta) {
    Series<GaussianRational> loop = jones_framed(parse_braid("", 1), ta, 5);
    CHECK(jones_framed(parse_braid("s1", 2), ta, 5) == loop * framing_factor(ta, 5));
    CHECK(jones_framed(parse_braid("-s1", 2), ta, 5) == loop * framing_factor(ta, 5).inverse());
    CHECK(jones_unframed(parse_braid("s1", 2), ta, 5) == jones_unframed(parse_braid("", 1), ta, 5));
  }
}

TEST_CASE("unknot at fixed spin matches the closed form") {
  PolySeries f = oracle::unknot_taylor(6);
  for (int ta = 0; ta <= 4; ++ta)
    CHECK(jones_unframed(parse_braid("", 1), ta, 6) == specialize(f, GaussianRational::fraction(ta, 2)));
}

TEST_CASE("spin one half reproduces the Jones polynomial") {
  const int n = 6;
  // V(t) of the trefoil with three positive crossings and of the figure-eight, t = q^2 = e^h.
  Series<GaussianRational> trefoil = laurent({{-1, -4}, {1, -3}, {1, -1}}, 1, n) * half_unknot(n);
  Series<GaussianRational> eight = laurent({{1, 2}, {-1, 1}, {1, 0}, {-1, -1}, {1, -2}}, 1, n) * half_unknot(n);
  CHECK(jones_unframed(catalog_knot("T+").braid, 1, n) == trefoil);
  CHECK(jones_unframed(catalog_knot("figure-eight").braid, 1, n) == eight);
}

TEST_CASE("z-coloured expansion specializes to every spin") {
  for (const char* name : {"T+", "figure-eight"}) {
    BraidWord b = catalog_knot(name).braid;
    PolySeries j = jones_z_interpolated(b, 4);
    for (int ta = 0; ta <= 7; ++ta)
      CHECK(specialize(j, GaussianRational::fraction(ta, 2)) == jones_unframed(b, ta, 4));
    for (int k = 0; k <= 4; ++k) CHECK(j[k].degree() <= 2 * k);
  }
}

TEST_CASE("Markov moves preserve the coloured expansion") {
  BraidWord b = catalog_knot("figure-eight").braid;
  PolySeries ref = jones_z_interpolated(b, 3);
  for (const auto& v : markov_variants(b)) CHECK(jones_z_interpolated(v, 3) == ref);
}
