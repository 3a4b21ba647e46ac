#include "qlk/weight_systems.hpp"

#include <cstdlib>
#include <numeric>

#include "qlk/errors.hpp"

namespace qlk {

namespace {

// Walks the endpoints of d in reading order, choosing a tensor term at each chord's
// first endpoint, and hands every letter to the module action. Branches share the
// state built so far.
template <class State, class Act>
void walk(const ChordDiagram& d, const InfinitesimalRMatrix& t, const State& start, Act&& act,
          State& total) {
  const auto& word = d.word();
  int len = static_cast<int>(word.size());
  std::vector<int> choice(static_cast<size_t>(d.chords()), -1);
  auto rec = [&](auto&& self, int pos, const State& s) -> void {
    if (s.empty()) return;
    if (pos == len) {
      for (const auto& [key, c] : s) {
        auto it = total.find(key);
        if (it == total.end())
          total.emplace(key, c);
        else
          it->second += c;
      }
      return;
    }
    int c = word[pos];
    if (choice[c] >= 0) {
      const TensorTerm& term = t.terms()[choice[c]];
      self(self, pos + 1, act(s, term.right, nullptr));
      return;
    }
    for (size_t k = 0; k < t.terms().size(); ++k) {
      choice[c] = static_cast<int>(k);
      const TensorTerm& term = t.terms()[k];
      self(self, pos + 1, act(s, term.left, &term.coeff));
    }
    choice[c] = -1;
  };
  rec(rec, 0, start);
}

using Sl2State = std::map<long, ParamPolynomial>;

void accumulate(Sl2State& s, long j, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  auto it = s.find(j);
  if (it == s.end()) {
    s.emplace(j, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) s.erase(it);
}

// Spin-z module: basis v_{2z-j}, j = 0, 1, ...; H v_{2z-j} = 2(z-j) v_{2z-j},
// E lowers j with factor j, F raises j with factor (2z-j).
Sl2State sl2_act(const Sl2State& s, Gen g, const GaussianRational* coeff) {
  const ParamPolynomial z = ParamPolynomial::variable();
  Sl2State out;
  for (const auto& [j, c] : s) {
    ParamPolynomial x = coeff ? c * ParamPolynomial(*coeff) : c;
    switch (g) {
      case Gen::E:
        if (j > 0) accumulate(out, j - 1, x * ParamPolynomial(j));
        break;
      case Gen::F:
        accumulate(out, j + 1, x * (z * ParamPolynomial(2) - ParamPolynomial(j)));
        break;
      case Gen::H:
        accumulate(out, j, x * ((z - ParamPolynomial(j)) * ParamPolynomial(2)));
        break;
      default:
        throw UsageError("Lorentz generator in an sl2 word");
    }
  }
  return out;
}

ParamPolynomial sign_for(int chords) { return ParamPolynomial(chords % 2 ? -1 : 1); }

}  // namespace

ParamPolynomial lambda_z_sl2(const ChordDiagram& d, const InfinitesimalRMatrix& t) {
  if (t.alphabet() != Alphabet::SL2) throw UsageError("lambda_z_sl2 needs an sl2 tensor");
  Sl2State start{{0, ParamPolynomial(1)}};
  Sl2State total;
  walk(d, t, start, sl2_act, total);
  ParamPolynomial value;
  for (const auto& [j, c] : total) {
    if (c.is_zero()) continue;
    if (j != 0)
      throw ConsistencyError("phi_t(d) acts as a scalar on the spin-z module",
                             "off-diagonal component for " + d.to_string());
    value = c;
  }
  return value * sign_for(d.chords());
}

ParamPolynomial lambda_z_sl2(const DiagramSum& d, const InfinitesimalRMatrix& t) {
  ParamPolynomial r;
  for (const auto& [dia, c] : d.terms()) r += lambda_z_sl2(dia, t) * ParamPolynomial(c);
  return r;
}

ParamPolynomial lambda_mp_factorized(const ChordDiagram& d, const Rational& m) {
  // z = (p - 1 + m)/2 and w = (p - 1 - m)/2 as linear substitutions in p.
  GaussianRational half = GaussianRational::fraction(1, 2);
  GaussianRational zb = GaussianRational((m - 1) / 2), wb = GaussianRational((-m - 1) / 2);
  std::map<ChordDiagram, ParamPolynomial> left, right;
  ParamPolynomial r;
  TensorDiagramSum split = coproduct(d);
  for (const auto& [pair, c] : split.terms()) {
    auto lt = left.find(pair.first);
    if (lt == left.end())
      lt = left.emplace(pair.first,
                        lambda_z_sl2(pair.first, t_cartan_killing()).compose_linear(half, zb))
               .first;
    auto rt = right.find(pair.second);
    if (rt == right.end())
      rt = right.emplace(pair.second, lambda_z_sl2(pair.second, t_jones()).compose_linear(half, wb))
               .first;
    r += lt->second * rt->second * ParamPolynomial(c);
  }
  return r;
}

ParamPolynomial lambda_mp_factorized(const DiagramSum& d, const Rational& m) {
  ParamPolynomial r;
  for (const auto& [dia, c] : d.terms()) r += lambda_mp_factorized(dia, m) * ParamPolynomial(c);
  return r;
}

// ---- radical coefficients ----

RadicalCoeff::RadicalCoeff(const ParamPolynomial& scalar) { add_term(Key{}, scalar); }

RadicalCoeff RadicalCoeff::sqrt_of(long n) {
  if (n < 0) throw std::domain_error("square root of a negative integer");
  RadicalCoeff r;
  if (n == 0) return r;
  long outside = 1, inside = 1;
  long rest = n;
  for (long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      outside *= f;
    }
  }
  inside = rest;
  r.add_term(Key{0, inside}, ParamPolynomial(outside));
  return r;
}

RadicalCoeff RadicalCoeff::symbol(int alpha) {
  if (alpha < 0 || alpha >= 64) throw ResourceError("Lorentz spin beyond 63 in radical bookkeeping");
  RadicalCoeff r;
  r.add_term(Key{1ull << alpha, 1}, ParamPolynomial(1));
  return r;
}

bool RadicalCoeff::is_radical_free() const {
  for (const auto& [k, c] : terms_)
    if (!(k == Key{})) return false;
  return true;
}

ParamPolynomial RadicalCoeff::scalar_part() const {
  auto it = terms_.find(Key{});
  return it == terms_.end() ? ParamPolynomial() : it->second;
}

void RadicalCoeff::add_term(const Key& k, const ParamPolynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RadicalCoeff& RadicalCoeff::operator+=(const RadicalCoeff& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

RadicalCoeff RadicalCoeff::scaled(const ParamPolynomial& s) const {
  RadicalCoeff r;
  for (const auto& [k, c] : terms_) r.add_term(k, c * s);
  return r;
}

ParamPolynomial c_symbol_square(int alpha, long m) {
  // (p^2 - alpha^2)(alpha^2 - m^2) / (alpha^2 (4 alpha^2 - 1))
  long a2 = static_cast<long>(alpha) * alpha;
  Rational scale(a2 - m * m, a2 * (4 * a2 - 1));
  scale.canonicalize();
  return ParamPolynomial(std::vector<GaussianRational>{GaussianRational(-scale * a2),
                                                       GaussianRational(0), GaussianRational(scale)});
}

RadicalCoeff RadicalCoeff::mul(const RadicalCoeff& o, long m) const {
  RadicalCoeff r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      ParamPolynomial c = ca * cb;
      unsigned long long both = ka.symbols & kb.symbols;
      for (int a = 0; a < 64 && both; ++a)
        if (both & (1ull << a)) {
          c *= c_symbol_square(a, m);
          both &= ~(1ull << a);
        }
      long g = std::gcd(ka.radical, kb.radical);
      long rad = (ka.radical / g) * (kb.radical / g);
      c *= ParamPolynomial(g);
      r.add_term(Key{ka.symbols ^ kb.symbols, rad}, c);
    }
  return r;
}

// ---- the Lorentz module ----

namespace {

using LorentzState = std::map<std::pair<long, long>, RadicalCoeff>;

struct LorentzAction {
  long m;

  RadicalCoeff b_coeff(long alpha) const {
    if (alpha == 0) return RadicalCoeff();
    GaussianRational c(Rational(0), Rational(m, alpha * (alpha + 1)));
    return RadicalCoeff(ParamPolynomial::monomial(c, 1));
  }

  void emit(LorentzState& out, long alpha, long k, const RadicalCoeff& c) const {
    if (c.is_zero() || alpha < std::labs(m) || std::labs(k) > alpha) return;
    auto it = out.find({alpha, k});
    if (it == out.end()) {
      out.emplace(std::make_pair(alpha, k), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }

  static RadicalCoeff rt(long n) { return n <= 0 ? RadicalCoeff() : RadicalCoeff::sqrt_of(n); }
  static RadicalCoeff num(long n) { return RadicalCoeff(ParamPolynomial(n)); }

  LorentzState operator()(const LorentzState& s, Gen g, const GaussianRational* coeff) const {
    LorentzState out;
    for (const auto& [key, c0] : s) {
      auto [a, k] = key;
      RadicalCoeff c = coeff ? c0.scaled(ParamPolynomial(*coeff)) : c0;
      auto up = [&](const RadicalCoeff& f, long da, long dk) { emit(out, a + da, k + dk, c.mul(f, m)); };
      RadicalCoeff ca = RadicalCoeff::symbol(static_cast<int>(a));
      RadicalCoeff ca1 = RadicalCoeff::symbol(static_cast<int>(a + 1));
      RadicalCoeff ba = b_coeff(a);
      switch (g) {
        case Gen::H3:
          up(num(k), 0, 0);
          break;
        case Gen::Hm:
          up(rt((a + k) * (a - k + 1)), 0, -1);
          break;
        case Gen::Hp:
          up(rt((a + k + 1) * (a - k)), 0, 1);
          break;
        case Gen::Fp:
          if (a > 0) up(ca.mul(rt((a - k) * (a - k - 1)), m), -1, 1);
          up(ba.mul(rt((a + k + 1) * (a - k)), m).scaled(ParamPolynomial(-1)), 0, 1);
          up(ca1.mul(rt((a + k + 1) * (a + k + 2)), m), 1, 1);
          break;
        case Gen::Fm:
          if (a > 0) up(ca.mul(rt((a + k) * (a + k - 1)), m).scaled(ParamPolynomial(-1)), -1, -1);
          up(ba.mul(rt((a - k + 1) * (a + k)), m).scaled(ParamPolynomial(-1)), 0, -1);
          up(ca1.mul(rt((a - k + 1) * (a - k + 2)), m).scaled(ParamPolynomial(-1)), 1, -1);
          break;
        case Gen::F3:
          if (a > 0) up(ca.mul(rt(a * a - k * k), m), -1, 0);
          up(ba.mul(num(k), m).scaled(ParamPolynomial(-1)), 0, 0);
          up(ca1.mul(rt((a + 1) * (a + 1) - k * k), m).scaled(ParamPolynomial(-1)), 1, 0);
          break;
        default:
          throw UsageError("sl2 generator in a Lorentz word");
      }
    }
    return out;
  }
};

}  // namespace

ParamPolynomial lambda_mp_direct(const ChordDiagram& d, long m, const InfinitesimalRMatrix& t) {
  if (t.alphabet() != Alphabet::LORENTZ) throw UsageError("lambda_mp_direct needs a Lorentz tensor");
  long a0 = std::labs(m);
  LorentzState start{{{a0, a0}, RadicalCoeff(ParamPolynomial(1))}};
  LorentzState total;
  walk(d, t, start, LorentzAction{m}, total);
  ParamPolynomial value;
  for (const auto& [key, c] : total) {
    if (c.is_zero()) continue;
    if (key != std::make_pair(a0, a0) || !c.is_radical_free())
      throw ConsistencyError("phi_t(d) acts as a scalar on the Lorentz module",
                             "non-scalar component for " + d.to_string());
    value = c.scalar_part();
  }
  return value * sign_for(d.chords());
}

ParamPolynomial lambda_mp_direct(const ChordDiagram& d, long m) { return lambda_mp_direct(d, m, t_lorentz()); }

ParamPolynomial lambda_mp_direct(const DiagramSum& d, long m) {
  ParamPolynomial r;
  for (const auto& [dia, c] : d.terms()) r += lambda_mp_direct(dia, m) * ParamPolynomial(c);
  return r;
}

}  // namespace qlk
