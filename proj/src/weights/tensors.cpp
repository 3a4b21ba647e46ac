#include <map>

#include "qlk/errors.hpp"
#include "qlk/weight_systems.hpp"

namespace qlk {

std::string gen_name(Gen g) {
  switch (g) {
    case Gen::E: return "E";
    case Gen::F: return "F";
    case Gen::H: return "H";
    case Gen::Hp: return "H+";
    case Gen::Hm: return "H-";
    case Gen::H3: return "H3";
    case Gen::Fp: return "F+";
    case Gen::Fm: return "F-";
    case Gen::F3: return "F3";
  }
  return "?";
}

Alphabet alphabet_of(Gen g) {
  return g == Gen::E || g == Gen::F || g == Gen::H ? Alphabet::SL2 : Alphabet::LORENTZ;
}

InfinitesimalRMatrix::InfinitesimalRMatrix(std::string name, Alphabet alphabet,
                                           std::vector<TensorTerm> terms)
    : name_(std::move(name)), alphabet_(alphabet), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (alphabet_of(t.left) != alphabet_ || alphabet_of(t.right) != alphabet_)
      throw UsageError("tensor term outside the declared alphabet");
}

InfinitesimalRMatrix InfinitesimalRMatrix::scaled(const GaussianRational& c,
                                                  const std::string& name) const {
  std::vector<TensorTerm> t = terms_;
  for (auto& x : t) x.coeff *= c;
  return InfinitesimalRMatrix(name, alphabet_, std::move(t));
}

bool InfinitesimalRMatrix::is_symmetric() const {
  std::map<std::pair<int, int>, GaussianRational> total;
  for (const auto& t : terms_)
    total[{static_cast<int>(t.left), static_cast<int>(t.right)}] += t.coeff;
  for (const auto& [k, c] : total) {
    auto it = total.find({k.second, k.first});
    GaussianRational other = it == total.end() ? GaussianRational(0) : it->second;
    if (other != c) return false;
  }
  return true;
}

namespace {
GaussianRational q(long a, long b) { return GaussianRational::fraction(a, b); }
GaussianRational iq(long a, long b) { return {Rational(0), Rational(a, b)}; }
}  // namespace

const InfinitesimalRMatrix& t_jones() {
  static const InfinitesimalRMatrix t("t_jones", Alphabet::SL2,
                                      {{q(-1, 4), Gen::E, Gen::F},
                                       {q(-1, 4), Gen::F, Gen::E},
                                       {q(-1, 8), Gen::H, Gen::H}});
  return t;
}

const InfinitesimalRMatrix& t_cartan_killing() {
  static const InfinitesimalRMatrix t = t_jones().scaled(GaussianRational(-1), "t_cartan_killing");
  return t;
}

namespace {

InfinitesimalRMatrix lorentz_copy(const std::string& name, long sign) {
  // 4t = H3H3/2 - F3F3/2 + s i(H3F3 + F3H3)/2 + (H+H- + H-H+)/4
  //      + s i(H+F- + F+H- + H-F+ + F-H+)/4 - (F+F- + F-F+)/4, divided by 4
  return InfinitesimalRMatrix(name, Alphabet::LORENTZ,
                              {{q(1, 8), Gen::H3, Gen::H3},
                               {q(-1, 8), Gen::F3, Gen::F3},
                               {iq(sign, 8), Gen::H3, Gen::F3},
                               {iq(sign, 8), Gen::F3, Gen::H3},
                               {q(1, 16), Gen::Hp, Gen::Hm},
                               {q(1, 16), Gen::Hm, Gen::Hp},
                               {iq(sign, 16), Gen::Hp, Gen::Fm},
                               {iq(sign, 16), Gen::Fp, Gen::Hm},
                               {iq(sign, 16), Gen::Hm, Gen::Fp},
                               {iq(sign, 16), Gen::Fm, Gen::Hp},
                               {q(-1, 16), Gen::Fp, Gen::Fm},
                               {q(-1, 16), Gen::Fm, Gen::Fp}});
}

}  // namespace

const InfinitesimalRMatrix& t_left() {
  static const InfinitesimalRMatrix t = lorentz_copy("t_left", 1);
  return t;
}

const InfinitesimalRMatrix& t_right() {
  static const InfinitesimalRMatrix t = lorentz_copy("t_right", -1);
  return t;
}

const InfinitesimalRMatrix& t_lorentz() {
  static const InfinitesimalRMatrix t("t_lorentz", Alphabet::LORENTZ,
                                      {{iq(1, 4), Gen::H3, Gen::F3},
                                       {iq(1, 4), Gen::F3, Gen::H3},
                                       {iq(1, 8), Gen::Hm, Gen::Fp},
                                       {iq(1, 8), Gen::Fm, Gen::Hp},
                                       {iq(1, 8), Gen::Hp, Gen::Fm},
                                       {iq(1, 8), Gen::Fp, Gen::Hm}});
  return t;
}

std::vector<GeneratorWord> phi_words(const InfinitesimalRMatrix& t, const ChordDiagram& d) {
  const auto& word = d.word();
  int n = d.chords(), len = 2 * n;
  size_t k = t.terms().size();
  std::vector<GeneratorWord> out;
  std::vector<size_t> choice(static_cast<size_t>(n), 0);
  while (true) {
    GeneratorWord w{GaussianRational(1), std::vector<Gen>(static_cast<size_t>(len))};
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int pos = 0; pos < len; ++pos) {
      int c = word[pos];
      const TensorTerm& term = t.terms()[choice[c]];
      w.letters[len - 1 - pos] = seen[c] ? term.right : term.left;
      if (!seen[c]) w.coeff *= term.coeff;
      seen[c] = true;
    }
    out.push_back(std::move(w));
    int c = 0;
    while (c < n && ++choice[c] == k) choice[c++] = 0;
    if (c == n) break;
  }
  return out;
}

std::pair<GaussianRational, GaussianRational> casimir_eigenvalues(const GaussianRational& m,
                                                                  const GaussianRational& p) {
  GaussianRational base = p * p + m * m - GaussianRational(1);
  GaussianRational cross = GaussianRational(2) * m * p;
  GaussianRational eighth = q(1, 8);
  return {(base + cross) * eighth, (base - cross) * eighth};
}

std::pair<ParamPolynomial, ParamPolynomial> casimir_polynomials(const GaussianRational& m) {
  GaussianRational e = q(1, 8);
  ParamPolynomial left(std::vector<GaussianRational>{(m * m - GaussianRational(1)) * e,
                                                     GaussianRational(2) * m * e, e});
  ParamPolynomial right(std::vector<GaussianRational>{(m * m - GaussianRational(1)) * e,
                                                      -GaussianRational(2) * m * e, e});
  return {left, right};
}

}  // namespace qlk
