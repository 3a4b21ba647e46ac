#pragma once

#include <vector>

#include "qlk/braid.hpp"
#include "qlk/polynomial.hpp"
#include "qlk/series.hpp"

namespace qlk {

// Dense square matrix of exact series; row-major, entry (r, c) maps basis c to basis r.
class SeriesOperator {
 public:
  SeriesOperator(int dim, int order);
  static SeriesOperator identity(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  Series<Rational>& at(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
  const Series<Rational>& at(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

  friend SeriesOperator operator*(const SeriesOperator& a, const SeriesOperator& b);
  friend bool operator==(const SeriesOperator& a, const SeriesOperator& b) { return a.e_ == b.e_; }

 private:
  int dim_, order_;
  std::vector<Series<Rational>> e_;
};

SeriesOperator kron(const SeriesOperator& a, const SeriesOperator& b);

// Braiding R composed with the flip on V_alpha (x) V_alpha, basis e_x (x) e_y at
// index x*(2 alpha+1)+y, where e_j has H-weight 2 alpha - 2j. Exact to order N.
SeriesOperator r_matrix(int two_alpha, int order);
SeriesOperator r_matrix_inverse(int two_alpha, int order);

// Change of the invariant under one unit of framing on spin alpha: e^{alpha(alpha+1) h}.
Series<GaussianRational> framing_factor(int two_alpha, int order);
// The same factor with alpha replaced by the symbol z, built from the one-chord
// character: exp(2 lambda_z(phi_t(one chord)) h).
PolySeries framing_factor_symbolic(int order);

// J^alpha(K)/(2 alpha+1) at the blackboard framing of the closure of b.
Series<GaussianRational> jones_framed(const BraidWord& b, int two_alpha, int order);
// jones_framed corrected to zero framing.
Series<GaussianRational> jones_unframed(const BraidWord& b, int two_alpha, int order);

// The z-coloured expansion J^z(K)/(2z+1) = sum_n P^n(z) h^n at zero framing, from
// exact interpolation over alpha = 0, 1/2, ..., N+1 with a degree-bound check.
PolySeries jones_z_interpolated(const BraidWord& b, int order);

// Drops the memoized framed values.
void clear_jones_cache();

}  // namespace qlk
