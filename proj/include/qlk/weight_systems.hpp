#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qlk/chord_diagram.hpp"
#include "qlk/polynomial.hpp"

namespace qlk {

enum class Gen { E, F, H, Hp, Hm, H3, Fp, Fm, F3 };
enum class Alphabet { SL2, LORENTZ };

std::string gen_name(Gen g);
Alphabet alphabet_of(Gen g);

struct TensorTerm {
  GaussianRational coeff;
  Gen left;
  Gen right;
};

// A symmetric invariant 2-tensor sum_i c_i a_i (x) b_i.
class InfinitesimalRMatrix {
 public:
  InfinitesimalRMatrix(std::string name, Alphabet alphabet, std::vector<TensorTerm> terms);

  const std::string& name() const { return name_; }
  Alphabet alphabet() const { return alphabet_; }
  const std::vector<TensorTerm>& terms() const { return terms_; }

  InfinitesimalRMatrix scaled(const GaussianRational& c, const std::string& name) const;
  // Total coefficient of each ordered pair, symmetric under swapping the factors.
  bool is_symmetric() const;

 private:
  std::string name_;
  Alphabet alphabet_;
  std::vector<TensorTerm> terms_;
};

// -(E(x)F + F(x)E + H(x)H/2)/4, the tensor paired with the coloured Jones polynomial.
const InfinitesimalRMatrix& t_jones();
// The Cartan-Killing normalized tensor, equal to -t_jones().
const InfinitesimalRMatrix& t_cartan_killing();
// Left and right copies of t_cartan_killing() inside the Lorentz algebra.
const InfinitesimalRMatrix& t_left();
const InfinitesimalRMatrix& t_right();
// t_left() - t_right().
const InfinitesimalRMatrix& t_lorentz();

struct GeneratorWord {
  GaussianRational coeff;
  std::vector<Gen> letters;  // written left to right; the rightmost letter acts first
};

// One word per assignment of tensor terms to chords. Walking the circle from the
// canonical base point, the first endpoint of a chord contributes its left factor
// and the second its right factor, each written to the left of what came before.
std::vector<GeneratorWord> phi_words(const InfinitesimalRMatrix& t, const ChordDiagram& d);

// lambda_z(phi_t(d)) as a polynomial in z, via the spin-z Verma module with
// highest-weight vector v_{2z}. phi_t carries the sign (-1)^chords so that
// phi_t(one chord) is minus the quadratic element sum_i a_i b_i.
ParamPolynomial lambda_z_sl2(const ChordDiagram& d, const InfinitesimalRMatrix& t);
ParamPolynomial lambda_z_sl2(const DiagramSum& d, const InfinitesimalRMatrix& t);

// lambda_{m,p}(phi_{t_L}(d)) through the coproduct and two sl2 characters with
// z = (p-1+m)/2 and w = (p-1-m)/2. Accepts half-integer m.
ParamPolynomial lambda_mp_factorized(const ChordDiagram& d, const Rational& m);
ParamPolynomial lambda_mp_factorized(const DiagramSum& d, const Rational& m);

// lambda_{m,p}(phi_t(d)) by acting on the balanced-type Lorentz module V(m) with
// exact radical bookkeeping. t must be over the Lorentz alphabet (default t_L).
ParamPolynomial lambda_mp_direct(const ChordDiagram& d, long m);
ParamPolynomial lambda_mp_direct(const ChordDiagram& d, long m, const InfinitesimalRMatrix& t);
ParamPolynomial lambda_mp_direct(const DiagramSum& d, long m);

// Eigenvalues of the left and right Casimirs: ((p^2+2mp+m^2-1)/8, (p^2-2mp+m^2-1)/8).
std::pair<GaussianRational, GaussianRational> casimir_eigenvalues(const GaussianRational& m,
                                                                  const GaussianRational& p);
std::pair<ParamPolynomial, ParamPolynomial> casimir_polynomials(const GaussianRational& m);

// Exact coefficient ring of the direct Lorentz route: sums of
// (product of distinct symbols c_alpha) * sqrt(squarefree integer) * polynomial in p,
// with c_alpha^2 reduced to -(alpha^2-p^2)(alpha^2-m^2)/(alpha^2(4 alpha^2-1)).
class RadicalCoeff {
 public:
  struct Key {
    unsigned long long symbols = 0;  // bit alpha set when c_alpha occurs
    long radical = 1;                // squarefree integer under the square root
    friend bool operator<(const Key& a, const Key& b) {
      return a.symbols != b.symbols ? a.symbols < b.symbols : a.radical < b.radical;
    }
    friend bool operator==(const Key& a, const Key& b) {
      return a.symbols == b.symbols && a.radical == b.radical;
    }
  };

  RadicalCoeff() = default;
  explicit RadicalCoeff(const ParamPolynomial& scalar);
  static RadicalCoeff sqrt_of(long n);  // sqrt(n) for n >= 0
  static RadicalCoeff symbol(int alpha);

  const std::map<Key, ParamPolynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_radical_free() const;
  ParamPolynomial scalar_part() const;

  RadicalCoeff& operator+=(const RadicalCoeff& o);
  RadicalCoeff mul(const RadicalCoeff& o, long m) const;
  RadicalCoeff scaled(const ParamPolynomial& s) const;

  friend bool operator==(const RadicalCoeff& a, const RadicalCoeff& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Key& k, const ParamPolynomial& c);
  std::map<Key, ParamPolynomial> terms_;
};

// c_alpha^2 as a polynomial in p.
ParamPolynomial c_symbol_square(int alpha, long m);

}  // namespace qlk
