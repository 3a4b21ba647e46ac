#include <array>
#include <cstdlib>
#include <map>
#include <tuple>
#include <type_traits>
#include <vector>

#include "qlk/errors.hpp"
#include "qlk/lorentz_qgroup.hpp"
#include "qlk/q_arith.hpp"

namespace qlk {

void clear_cg_cache();

namespace {

// Coefficients below this magnitude count as zero when reading off h-adic orders.
Real zero_threshold() { return pow(Real(10), -static_cast<int>(working_precision()) + 5); }

bool approx_zero(const BigComplex& c, const Real& eps) { return c.abs() < eps; }
bool approx_zero(const FloatPolynomial& c, const Real& eps) {
  for (const auto& x : c.coeffs())
    if (x.abs() >= eps) return false;
  return true;
}

template <class C>
int approx_valuation(const Series<C>& s, const Real& eps) {
  for (int k = 0; k <= s.order(); ++k)
    if (!approx_zero(s[k], eps)) return k;
  return s.order() + 1;
}

template <class C>
Series<C> lift(const Series<BigComplex>& s);
template <>
Series<BigComplex> lift<BigComplex>(const Series<BigComplex>& s) {
  return s;
}
template <>
Series<FloatPolynomial> lift<FloatPolynomial>(const Series<BigComplex>& s) {
  return s.map<FloatPolynomial>([](const BigComplex& x) { return FloatPolynomial(x); });
}

// q^{2 sigma rho} = e^{sigma rho h}, numeric rho or rho = p symbolic.
Series<BigComplex> rho_power(int sigma2, const BigComplex& rho, int order) {
  return exp_series(BigComplex(to_real(Rational(sigma2, 2))) * rho, order);
}
Series<FloatPolynomial> rho_power_symbolic(int sigma2, int order) {
  Series<FloatPolynomial> s(order);
  Rational sigma(sigma2, 2), term(1);
  sigma.canonicalize();
  for (int k = 0; k <= order; ++k) {
    s[k] = FloatPolynomial::monomial(BigComplex(to_real(term)), k);
    term = term * sigma / (k + 1);
  }
  return s;
}

// Lambda coefficients, g-actions and the braid-sum walk for one value of rho.
template <class C>
class Engine {
 public:
  Engine(int order, BigComplex rho, bool symbolic)
      : order_(order), rho_(std::move(rho)), symbolic_(symbolic), eps_(zero_threshold()) {}

  int order() const { return order_; }
  const Real& eps() const { return eps_; }

  Series<C> rho_pow(int sigma2) const {
    if constexpr (std::is_same_v<C, FloatPolynomial>)
      return rho_power_symbolic(sigma2, order_);
    else
      return rho_power(sigma2, rho_, order_);
  }

  const Series<C>& lambda(int A2, int B2, int C2, int D2) {
    std::array<int, 4> key{A2, B2, C2, D2};
    auto it = lambda_.find(key);
    if (it != lambda_.end()) return it->second;
    Series<C> s(order_);
    for (int sg = -C2; sg <= C2; sg += 2) {
      Series<BigComplex> left = quantum_cg_right(A2, C2, B2, 0, sg, -sg, order_);
      if (left.is_zero()) continue;
      Series<BigComplex> right = quantum_cg(B2, C2, D2, -sg, sg, 0, order_);
      if (right.is_zero()) continue;
      s += lift<C>(left * right) * rho_pow(sg);
    }
    return lambda_.emplace(key, std::move(s)).first->second;
  }

  using Image = std::vector<std::tuple<int, int, Series<C>>>;

  // g^alpha_{i,j} v^beta_{ib} = sum_{D,gamma} v^gamma_{ig} CGL(gamma alpha D; ig i x)
  //   CGR(D alpha beta; x j ib) Lambda^{gamma alpha D}_beta, x = j + ib, ig = j + ib - i.
  const Image& g_image(int a2, int i2, int j2, int beta, int ib) {
    std::array<int, 5> key{a2, i2, j2, beta, ib};
    auto it = gcache_.find(key);
    if (it != gcache_.end()) return it->second;
    Image img;
    int b2 = 2 * beta, ib2 = 2 * ib;
    int x2 = j2 + ib2, ig2 = j2 + ib2 - i2;
    if (ig2 % 2 == 0) {
      std::map<int, Series<C>> by_gamma;
      for (int d2 = std::abs(a2 - b2); d2 <= a2 + b2; d2 += 2) {
        if (std::abs(x2) > d2) continue;
        Series<BigComplex> right = quantum_cg_right(d2, a2, b2, x2, j2, ib2, order_);
        if (right.is_zero()) continue;
        for (int g2 = std::abs(d2 - a2); g2 <= d2 + a2; g2 += 2) {
          if (g2 % 2 || std::abs(ig2) > g2) continue;
          Series<BigComplex> left = quantum_cg(g2, a2, d2, ig2, i2, x2, order_);
          if (left.is_zero()) continue;
          Series<C> term = lift<C>(left * right) * lambda(g2, a2, d2, b2);
          auto jt = by_gamma.find(g2 / 2);
          if (jt == by_gamma.end())
            by_gamma.emplace(g2 / 2, term);
          else
            jt->second += term;
        }
      }
      for (auto& [g, s] : by_gamma)
        if (approx_valuation(s, eps_) <= order_) img.emplace_back(g, ig2 / 2, std::move(s));
    }
    return gcache_.emplace(key, std::move(img)).first->second;
  }

  void g_apply(int a2, int i2, int j2, const BalancedVector<C>& v, BalancedVector<C>& out,
               const Series<C>* factor) {
    for (const auto& [st, c] : v)
      for (const auto& [g, ig, s] : g_image(a2, i2, j2, st.first, st.second)) {
        Series<C> t = c * s;
        if (factor) t = t * *factor;
        auto it = out.find({g, ig});
        if (it == out.end())
          out.emplace(BalancedState{g, ig}, std::move(t));
        else
          it->second += t;
      }
  }

  // S^{-1}(g^alpha_{i,j}) = q^{j-i} (-1)^{i-j} g^alpha_{-i,-j}.
  Series<C> antipode_factor(int i2, int j2) const {
    Series<BigComplex> f = exp_scaled<BigComplex>(Rational(j2 - i2, 4), order_);
    if (((i2 - j2) / 2) % 2) f = -f;
    return lift<C>(f);
  }

  Series<C> enhancement(int i) const { return lift<C>(exp_scaled<BigComplex>(Rational(i), order_)); }

 private:
  int order_;
  BigComplex rho_;
  bool symbolic_;
  Real eps_;
  std::map<std::array<int, 4>, Series<C>> lambda_;
  std::map<std::array<int, 5>, Image> gcache_;
};

struct Label {
  bool set = false;
  int a = 0, i = 0, j = 0;  // plain integers
};

template <class C>
class PathSum {
 public:
  PathSum(const BraidWord& b, Engine<C>& eng, int cutoff, bool lookahead)
      : eng_(eng), cutoff_(cutoff), lookahead_(lookahead), path_(closure_path(b)), labels_(b.letters.size()) {
    // For each step, the crossings whose X visit is still ahead, in path order.
    later_x_.resize(path_.size() + 1);
    for (int k = static_cast<int>(path_.size()) - 1; k >= 0; --k) {
      later_x_[k] = later_x_[k + 1];
      if (path_[k].second == 'X') later_x_[k].insert(later_x_[k].begin(), path_[k].first);
    }
  }

  Series<C> run() {
    total_ = Series<C>(eng_.order());
    BalancedVector<C> start;
    start.emplace(BalancedState{0, 0}, Series<C>::one(eng_.order()));
    step(0, std::move(start));
    return total_;
  }

 private:
  // Smallest h-order still to be paid from spin beta at step k: the spin moves only
  // through g factors, each costing at least the change of spin, and must pass
  // through the label of every pending X visit before returning to 0.
  int remaining_cost(int k, int beta) const {
    if (!lookahead_) return 0;
    int cost = 0, at = beta;
    for (int c : later_x_[k])
      if (labels_[c].set) {
        cost += std::abs(at - labels_[c].a);
        at = labels_[c].a;
      }
    return cost + at;
  }

  void prune(int k, BalancedVector<C>& v) const {
    for (auto it = v.begin(); it != v.end();) {
      int val = approx_valuation(it->second, eng_.eps());
      if (val + remaining_cost(k, it->first.first) > eng_.order())
        it = v.erase(it);
      else
        ++it;
    }
  }

  void step(size_t k, BalancedVector<C> v) {
    prune(static_cast<int>(k), v);
    if (v.empty()) return;
    if (k == path_.size()) {
      auto it = v.find({0, 0});
      if (it != v.end()) total_ += it->second;
      return;
    }
    auto [c, role] = path_[k];
    if (role == 'G') {
      for (auto& [st, s] : v) s = s * eng_.enhancement(st.second);
      step(k + 1, std::move(v));
      return;
    }
    Label& lab = labels_[c];
    if (role == 'X') {
      if (lab.set) {
        auto it = v.find({lab.a, lab.i});
        if (it == v.end()) return;
        BalancedVector<C> w;
        w.emplace(BalancedState{lab.a, lab.j}, it->second);
        step(k + 1, std::move(w));
        return;
      }
      for (const auto& [st, s] : v) {
        if (st.first > cutoff_) continue;
        for (int j = -st.first; j <= st.first; ++j) {
          lab = {true, st.first, st.second, j};
          BalancedVector<C> w;
          w.emplace(BalancedState{st.first, j}, s);
          step(k + 1, std::move(w));
        }
      }
      lab = Label{};
      return;
    }
    // g visits use g_{j,i} for the label (a, i, j); S visits use S^{-1}(g_{i,j}).
    auto apply = [&](const Label& l) {
      BalancedVector<C> w;
      if (role == 'g') {
        eng_.g_apply(2 * l.a, 2 * l.j, 2 * l.i, v, w, nullptr);
      } else {
        Series<C> f = eng_.antipode_factor(2 * l.i, 2 * l.j);
        eng_.g_apply(2 * l.a, -2 * l.i, -2 * l.j, v, w, &f);
      }
      return w;
    };
    if (lab.set) {
      step(k + 1, apply(lab));
      return;
    }
    for (int a = 0; a <= cutoff_; ++a) {
      lab = {true, a, 0, 0};
      bool feasible = false;
      for (const auto& [st, s] : v)
        if (approx_valuation(s, eng_.eps()) + remaining_cost(static_cast<int>(k), st.first) <= eng_.order())
          feasible = true;
      if (!feasible) continue;
      for (int i = -a; i <= a; ++i)
        for (int j = -a; j <= a; ++j) {
          lab = {true, a, i, j};
          step(k + 1, apply(lab));
        }
    }
    lab = Label{};
  }

  Engine<C>& eng_;
  int cutoff_;
  bool lookahead_;
  std::vector<std::pair<int, char>> path_;
  std::vector<Label> labels_;
  std::vector<std::vector<int>> later_x_;
  Series<C> total_;
};

int resolve_cutoff(const BraidSumOptions& opt) {
  if (opt.order < 0) throw UsageError("negative order");
  int cut = opt.spin_cutoff < 0 ? opt.order : opt.spin_cutoff;
  if (cut > 40) throw ResourceError("spin cutoff beyond 40");
  return cut;
}

}  // namespace

std::vector<std::pair<int, char>> closure_path(const BraidWord& b) {
  if (!is_knot(b)) throw UsageError("the closure of " + to_string(b) + " is not a knot");
  std::vector<std::pair<int, char>> seq;
  int pos = 1;
  while (true) {
    for (size_t c = 0; c < b.letters.size(); ++c) {
      int l = b.letters[c], i = std::abs(l);
      if (pos == i) {
        seq.emplace_back(static_cast<int>(c), l > 0 ? 'X' : 'S');
        pos = i + 1;
      } else if (pos == i + 1) {
        seq.emplace_back(static_cast<int>(c), l > 0 ? 'g' : 'X');
        pos = i;
      }
    }
    if (pos == 1) break;
    seq.emplace_back(-1, 'G');
  }
  return seq;
}

Series<BigComplex> lambda_coeff(int A2, int B2, int C2, int D2, const BigComplex& rho, int order) {
  Engine<BigComplex> eng(order, rho, false);
  return eng.lambda(A2, B2, C2, D2);
}

Series<FloatPolynomial> lambda_coeff_symbolic(int A2, int B2, int C2, int D2, int order) {
  Engine<FloatPolynomial> eng(order, BigComplex(0), true);
  return eng.lambda(A2, B2, C2, D2);
}

BalancedVector<BigComplex> g_action(int alpha2, int i2, int j2, const BalancedState& s,
                                    const BigComplex& rho, int order) {
  Engine<BigComplex> eng(order, rho, false);
  BalancedVector<BigComplex> v, out;
  v.emplace(s, Series<BigComplex>::one(order));
  eng.g_apply(alpha2, i2, j2, v, out, nullptr);
  return out;
}

BalancedVector<BigComplex> x_action(int alpha2, int i2, int j2, const BalancedState& s, int order) {
  BalancedVector<BigComplex> out;
  if (alpha2 == 2 * s.first && i2 == 2 * s.second && j2 % 2 == 0)
    out.emplace(BalancedState{s.first, j2 / 2}, Series<BigComplex>::one(order));
  return out;
}

BalancedVector<BigComplex> G_action(const BalancedState& s, int order) {
  BalancedVector<BigComplex> out;
  out.emplace(s, exp_scaled<BigComplex>(Rational(s.second), order));
  return out;
}

Series<BigComplex> braid_sum(const BraidWord& b, const BigComplex& rho, const BraidSumOptions& opt) {
  int cut = resolve_cutoff(opt);
  Engine<BigComplex> eng(opt.order, rho, false);
  PathSum<BigComplex> ps(b, eng, cut, opt.order_lookahead);
  return ps.run();
}

Series<FloatPolynomial> braid_sum_symbolic(const BraidWord& b, const BraidSumOptions& opt) {
  int cut = resolve_cutoff(opt);
  Engine<FloatPolynomial> eng(opt.order, BigComplex(0), true);
  PathSum<FloatPolynomial> ps(b, eng, cut, opt.order_lookahead);
  return ps.run();
}

Series<BigComplex> trefoil_closed_sum(const BigComplex& rho, int order, int spin_cutoff) {
  int cut = spin_cutoff < 0 ? order : spin_cutoff;
  Engine<BigComplex> eng(order, rho, false);
  Series<BigComplex> total(order);
  for (int a = 0; a <= cut; ++a) {
    Series<BigComplex> dim = to_float(q_dim<Rational>(2 * a, order));
    total += dim * eng.lambda(0, 2 * a, 2 * a, 2 * a) * eng.lambda(2 * a, 2 * a, 2 * a, 0);
  }
  return total;
}

void clear_qgroup_caches() { clear_cg_cache(); }

}  // namespace qlk
