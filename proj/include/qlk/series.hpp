#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlk/gaussian_rational.hpp"

namespace qlk {

namespace detail {
template <class C>
bool coeff_is_zero(const C& x) {
  return is_zero(x);
}
}  // namespace detail

// Jet c_0 + c_1 h + ... + c_N h^N of a formal power series in h.
template <class C>
class Series {
 public:
  Series() : c_(1, C(0)) {}
  explicit Series(int order) : c_(static_cast<size_t>(order) + 1, C(0)) {
    if (order < 0) throw std::invalid_argument("negative series order");
  }
  Series(int order, const C& constant) : Series(order) { c_[0] = constant; }

  static Series zero(int order) { return Series(order); }
  static Series one(int order) { return Series(order, C(1)); }
  // The series h itself.
  static Series h(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const C& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  C& operator[](int k) { return c_[static_cast<size_t>(k)]; }
  const std::vector<C>& coeffs() const { return c_; }

  Series truncated(int order) const {
    Series s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[k] = c_[k];
    return s;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!qlk_is_zero(x)) return false;
    return true;
  }

  // Index of the first nonzero coefficient, or order()+1 for the zero series.
  int valuation() const {
    for (int k = 0; k <= order(); ++k)
      if (!qlk_is_zero(c_[k])) return k;
    return order() + 1;
  }

  Series& operator+=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Series& operator*=(const C& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const C& s) { return a *= s; }
  friend Series operator*(const C& s, Series a) { return a *= s; }
  Series operator-() const {
    Series r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    int va = a.valuation(), vb = b.valuation();
    for (int i = va; i <= n; ++i) {
      if (qlk_is_zero(a.c_[i])) continue;
      for (int j = vb; i + j <= n; ++j) {
        if (qlk_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  // Multiplicative inverse; requires an invertible constant term.
  Series inverse() const {
    if (qlk_is_zero(c_[0])) throw std::domain_error("series inverse needs a nonzero constant term");
    int n = order();
    Series r(n);
    C inv0 = C(1) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= n; ++k) {
      C acc(0);
      for (int j = 1; j <= k; ++j)
        if (!qlk_is_zero(c_[j])) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -(acc * inv0);
    }
    return r;
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  Series pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Series r = one(order()), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  // Removes a factor h^s, requiring the first s coefficients to vanish.
  Series divide_by_h_power(int s) const {
    for (int k = 0; k < s && k <= order(); ++k)
      if (!qlk_is_zero(c_[k])) throw std::domain_error("series is not divisible by h^s");
    int n = order() - s;
    Series r(std::max(n, 0));
    for (int k = 0; k <= n; ++k) r.c_[k] = c_[k + s];
    return r;
  }

  template <class D, class F>
  Series<D> map(F&& f) const {
    Series<D> r(order());
    for (int k = 0; k <= order(); ++k) r[k] = f(c_[k]);
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    if (a.order() != b.order()) return false;
    for (int k = 0; k <= a.order(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  static bool qlk_is_zero(const C& x) { return detail::coeff_is_zero(x); }
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(static_cast<size_t>(order) + 1);
  }

  std::vector<C> c_;
};

// e^{r h} to order N; coefficient of h^k is r^k / k!.
template <class C>
Series<C> exp_series(const C& r, int order) {
  Series<C> s(order);
  C term(1);
  s[0] = term;
  for (int k = 1; k <= order; ++k) {
    term = term * r / C(k);
    s[k] = term;
  }
  return s;
}

// Exponential of a series with zero constant term.
template <class C>
Series<C> exp_of(const Series<C>& x) {
  if (!detail::coeff_is_zero(x[0])) throw std::domain_error("exp_of needs a zero constant term");
  int n = x.order();
  // e' = x' e, solved coefficientwise.
  Series<C> e(n);
  e[0] = C(1);
  for (int k = 1; k <= n; ++k) {
    C acc(0);
    for (int j = 1; j <= k; ++j)
      if (!detail::coeff_is_zero(x[j])) acc += C(j) * x[j] * e[k - j];
    e[k] = acc / C(k);
  }
  return e;
}

}  // namespace qlk
