#pragma once

#include <vector>

#include "qlk/braid.hpp"
#include "qlk/polynomial.hpp"

namespace qlk {

// X(m, p, K): coefficient of h^n is a polynomial in p.
struct LorentzInvariant {
  long m = 0;
  PolySeries series;
  int framing = 0;
};

// J^z(K*)/(2z+1) * J^w(K)/(2w+1) with z = (p-1+m)/2, w = (p-1-m)/2, zero framing.
LorentzInvariant x_invariant(const BraidWord& b, long m, int order);
// The same at framing f: K carries framing f and its mirror framing -f.
LorentzInvariant x_invariant_framed(const BraidWord& b, long m, int order, int framing);
// exp(2 lambda_{m,p}(phi_{t_L}(one chord)) h), the change of X per unit of framing.
PolySeries framing_ratio(long m, int order);

// The series X(0, p, K) (2 alpha+1)^2/[2 alpha+1]^2 with alpha = (p-1)/2.
Series<GaussianRational> equivalence_rhs(const BraidWord& b, long p, int order);

struct EquivalenceReport {
  bool pass = false;
  Real tolerance;
  Real max_diff;
  Series<BigComplex> braid_side;  // S_b(e^{h/2}, p)
  Series<GaussianRational> jones_side;
  std::vector<Real> diffs;  // per order
};

// Compares the braid sum with the Jones-side series; passes when every coefficient
// agrees within 10^-(D-15) at the working precision D.
EquivalenceReport equivalence_check(const BraidWord& b, long p, int order, int spin_cutoff = -1);

struct JonesRelationReport {
  bool pass = false;
  Series<GaussianRational> x_side;      // x_invariant at (m, p) = (z-w, z+w+1)
  Series<GaussianRational> jones_side;  // direct spin-z and spin-w evaluations
};

// z2, w2 are doubled spins with z - w an integer.
JonesRelationReport jones_relation_check(const BraidWord& b, int z2, int w2, int order);

}  // namespace qlk
