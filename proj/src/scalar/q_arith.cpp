#include "qlk/q_arith.hpp"

#include <stdexcept>

namespace qlk {

Series<BigComplex> sqrt_series(const Series<BigComplex>& s) {
  if (s[0].is_zero()) throw std::domain_error("sqrt_series needs a nonzero constant term");
  int n = s.order();
  Series<BigComplex> t(n);
  t[0] = sqrt_halved_argument(s[0]);
  BigComplex two_t0 = t[0] * BigComplex(2);
  for (int k = 1; k <= n; ++k) {
    BigComplex acc = s[k];
    for (int j = 1; j < k; ++j) acc -= t[j] * t[k - j];
    t[k] = acc / two_t0;
  }
  return t;
}

}  // namespace qlk
