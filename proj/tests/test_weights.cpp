#include <map>

#include "doctest.h"
#include "qlk/chord_diagram.hpp"
#include "qlk/jones.hpp"
#include "qlk/weight_systems.hpp"

using namespace qlk;

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(int n) { return Matrix(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n))); }

Matrix product(const Matrix& a, const Matrix& b) {
  int n = static_cast<int>(a.size());
  Matrix r = zero_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (sgn(a[i][k]) != 0)
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Spin-alpha irreducible module: H v_j = (2a - 2j) v_j, F v_j = v_{j+1}, E v_j = j(2a-j+1) v_{j-1}.
Matrix generator(Gen g, int two_alpha) {
  int n = two_alpha + 1;
  Matrix m = zero_matrix(n);
  for (int j = 0; j < n; ++j) {
    if (g == Gen::H) m[j][j] = two_alpha - 2 * j;
    if (g == Gen::F && j + 1 < n) m[j + 1][j] = 1;
    if (g == Gen::E && j > 0) m[j - 1][j] = j * (two_alpha - j + 1);
  }
  return m;
}

// phi_t of the chord diagram given by an arbitrary Gauss word, evaluated on spin alpha.
// The first endpoint of each chord met along the word carries the left tensor factor;
// later positions act after earlier ones.
Matrix evaluate_word(const std::vector<int>& word, const InfinitesimalRMatrix& t, int two_alpha) {
  int n = static_cast<int>(word.size()) / 2, dim = two_alpha + 1;
  Matrix total = zero_matrix(dim);
  std::vector<size_t> choice(static_cast<size_t>(n), 0);
  size_t k = t.terms().size();
  while (true) {
    Matrix m = zero_matrix(dim);
    for (int i = 0; i < dim; ++i) m[i][i] = 1;
    GaussianRational coeff(n % 2 ? -1 : 1);
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int c : word) {
      const TensorTerm& term = t.terms()[choice[c]];
      m = product(generator(seen[c] ? term.right : term.left, two_alpha), m);
      if (!seen[c]) coeff *= term.coeff;
      seen[c] = true;
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) total[i][j] += coeff.re() * m[i][j];
    int c = 0;
    while (c < n && ++choice[c] == k) choice[c++] = 0;
    if (c == n) break;
  }
  return total;
}

bool is_scalar(const Matrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (i == j ? m[i][j] != m[0][0] : sgn(m[i][j]) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("tensors are symmetric and the Lorentz tensor is a difference of copies") {
  for (const auto* t : {&t_jones(), &t_cartan_killing(), &t_left(), &t_right(), &t_lorentz()})
    CHECK(t->is_symmetric());
  std::map<std::pair<Gen, Gen>, GaussianRational> diff;
  for (const auto& x : t_left().terms()) diff[{x.left, x.right}] += x.coeff;
  for (const auto& x : t_right().terms()) diff[{x.left, x.right}] -= x.coeff;
  for (const auto& x : t_lorentz().terms()) diff[{x.left, x.right}] -= x.coeff;
  for (const auto& [k, c] : diff) CHECK(c.is_zero());
}

TEST_CASE("sl2 characters agree with finite-dimensional evaluation") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& d : enumerate_diagrams(n)) {
      ParamPolynomial lz = lambda_z_sl2(d, t_jones());
      CHECK(lz.degree() <= 2 * n);
      for (int ta = 0; ta <= 4; ++ta) {
        Matrix m = evaluate_word(d.word(), t_jones(), ta);
        REQUIRE(is_scalar(m));
        CHECK(lz(GaussianRational::fraction(ta, 2)) == GaussianRational(m[0][0]));
      }
    }
}

TEST_CASE("character does not depend on the base point") {
  for (const auto& d : enumerate_diagrams(3)) {
    std::vector<int> w = d.word();
    Rational ref = evaluate_word(w, t_jones(), 3)[0][0];
    for (size_t r = 1; r < w.size(); ++r) {
      std::vector<int> rot(w.begin() + static_cast<long>(r), w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
      Matrix m = evaluate_word(rot, t_jones(), 3);
      CHECK(is_scalar(m));
      CHECK(m[0][0] == ref);
    }
  }
}

TEST_CASE("one chord gives minus the Casimir") {
  ChordDiagram theta = ChordDiagram::parse("AA");
  // C = (EF + FE + H^2/2)/4 acts on spin z as z(z+1)/2, so phi_{t_jones} gives +z(z+1)/2.
  ParamPolynomial expected(std::vector<GaussianRational>{0, GaussianRational::fraction(1, 2),
                                                         GaussianRational::fraction(1, 2)});
  CHECK(lambda_z_sl2(theta, t_jones()) == expected);
  CHECK(lambda_z_sl2(theta, t_cartan_killing()) == -expected);
}

TEST_CASE("characters are multiplicative under connected sum") {
  auto small = enumerate_diagrams(1);
  auto two = enumerate_diagrams(2);
  small.insert(small.end(), two.begin(), two.end());
  for (const auto& a : small)
    for (const auto& b : small) {
      ChordDiagram ab = connected_sum(a, b);
      CHECK(lambda_z_sl2(ab, t_jones()) == lambda_z_sl2(a, t_jones()) * lambda_z_sl2(b, t_jones()));
      for (long m : {0L, 1L}) {
        CHECK(lambda_mp_factorized(ab, Rational(m)) ==
              lambda_mp_factorized(a, Rational(m)) * lambda_mp_factorized(b, Rational(m)));
        CHECK(lambda_mp_direct(ab, m) == lambda_mp_direct(a, m) * lambda_mp_direct(b, m));
      }
    }
}

TEST_CASE("Lorentz characters at m = 0 are even in p") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& d : enumerate_diagrams(n)) CHECK(lambda_mp_factorized(d, Rational(0)).is_even());
}

TEST_CASE("Casimir eigenvalues") {
  auto [l, r] = casimir_eigenvalues(GaussianRational(1), GaussianRational(3));
  CHECK(l == GaussianRational::fraction(15, 8));
  CHECK(r == GaussianRational::fraction(3, 8));
  auto [pl, pr] = casimir_polynomials(GaussianRational(2));
  CHECK(pl(GaussianRational(5)) == casimir_eigenvalues(2, 5).first);
  CHECK(pr(GaussianRational(5)) == casimir_eigenvalues(2, 5).second);
}

TEST_CASE("symbolic framing factor specializes to each spin") {
  PolySeries f = framing_factor_symbolic(5);
  for (int ta = 0; ta <= 5; ++ta) CHECK(specialize(f, GaussianRational::fraction(ta, 2)) == framing_factor(ta, 5));
}
