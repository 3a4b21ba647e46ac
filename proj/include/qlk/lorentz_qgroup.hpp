#pragma once

#include <map>
#include <string>
#include <utility>

#include "qlk/braid.hpp"
#include "qlk/polynomial.hpp"
#include "qlk/series.hpp"

namespace qlk {

// Spin labels in this header are doubled integers (2I, 2m, ...) unless noted.

// Quantum Clebsch-Gordan coefficient <I m, J n | K p> with q = e^{h/2}, to order N at
// the working precision. Zero outside the selection rules.
Series<BigComplex> quantum_cg(int I2, int J2, int K2, int m2, int n2, int p2, int order);
// The right coefficient: quantum_cg_right(I,J,K;m,n,p) = quantum_cg(J,K,I;n,p,m).
Series<BigComplex> quantum_cg_right(int I2, int J2, int K2, int m2, int n2, int p2, int order);

// Lambda^{ABC}_D(rho) = sum_sigma CGR(A C B; 0 sigma -sigma) q^{2 sigma rho} CGL(B C D; -sigma sigma 0).
Series<BigComplex> lambda_coeff(int A2, int B2, int C2, int D2, const BigComplex& rho, int order);
// The same with rho kept as the polynomial variable p.
Series<FloatPolynomial> lambda_coeff_symbolic(int A2, int B2, int C2, int D2, int order);

// v^beta_i of the balanced module; beta and i are plain integers.
using BalancedState = std::pair<int, int>;
template <class C>
using BalancedVector = std::map<BalancedState, Series<C>>;

// g^alpha_{i,j} on one basis state, normalizers set to 1.
BalancedVector<BigComplex> g_action(int alpha2, int i2, int j2, const BalancedState& s,
                                    const BigComplex& rho, int order);
// X^alpha_{i,j} v^beta_k = delta(alpha,beta) delta(i,k) v^alpha_j.
BalancedVector<BigComplex> x_action(int alpha2, int i2, int j2, const BalancedState& s, int order);
// G v^beta_i = q^{2i} v^beta_i.
BalancedVector<BigComplex> G_action(const BalancedState& s, int order);

struct BraidSumOptions {
  int order = 6;
  int spin_cutoff = -1;  // largest crossing label; -1 means order
  // Drop partial sums whose valuation plus the spin still to be unwound exceeds the
  // order. With this off only terms already beyond the order are dropped.
  bool order_lookahead = true;
};

// S_b(q, rho): the crossing-label sum applied along the closed strand to v^0_0,
// reading off the v^0_0 component.
Series<BigComplex> braid_sum(const BraidWord& b, const BigComplex& rho, const BraidSumOptions& opt);
Series<FloatPolynomial> braid_sum_symbolic(const BraidWord& b, const BraidSumOptions& opt);

// sum_alpha [2 alpha+1] Lambda^{0 alpha alpha}_alpha Lambda^{alpha alpha alpha}_0 over alpha <= cutoff.
Series<BigComplex> trefoil_closed_sum(const BigComplex& rho, int order, int spin_cutoff = -1);

// Path of a closed braid through its crossings starting at the bottom of strand 1:
// (crossing index, role) with role 'X', 'g', 'S' (antipode-twisted g) or 'G'
// (enhancement, crossing index -1).
std::vector<std::pair<int, char>> closure_path(const BraidWord& b);

// Cache control. The CG cache is keyed by labels and order and is dropped when the
// working precision changes.
void clear_qgroup_caches();
size_t cg_cache_size();
// Binary dump of the CG cache plus a JSON manifest at path + ".json".
void save_cg_cache(const std::string& path);
// Returns the number of entries loaded; rejects files from another version or precision.
size_t load_cg_cache(const std::string& path);

}  // namespace qlk
