#include "qlk/lorentz_invariants.hpp"

#include <cstdlib>

#include "qlk/errors.hpp"
#include "qlk/jones.hpp"
#include "qlk/lorentz_qgroup.hpp"
#include "qlk/q_arith.hpp"
#include "qlk/weight_systems.hpp"

namespace qlk {

namespace {

PolySeries substitute(const PolySeries& s, const Rational& shift) {
  GaussianRational half = GaussianRational::fraction(1, 2), b(shift);
  return s.map<ParamPolynomial>([&](const ParamPolynomial& x) { return x.compose_linear(half, b); });
}

LorentzInvariant assemble(const PolySeries& mirror_side, const PolySeries& knot_side, long m, int framing) {
  Rational zb(m - 1, 2), wb(-m - 1, 2);
  zb.canonicalize();
  wb.canonicalize();
  LorentzInvariant x;
  x.m = m;
  x.framing = framing;
  x.series = substitute(mirror_side, zb) * substitute(knot_side, wb);
  return x;
}

}  // namespace

LorentzInvariant x_invariant(const BraidWord& b, long m, int order) {
  return assemble(jones_z_interpolated(mirror(b), order), jones_z_interpolated(b, order), m, 0);
}

LorentzInvariant x_invariant_framed(const BraidWord& b, long m, int order, int framing) {
  PolySeries f = framing_factor_symbolic(order);
  PolySeries knot = jones_z_interpolated(b, order) * f.pow(framing);
  PolySeries mir = jones_z_interpolated(mirror(b), order) * f.pow(-framing);
  return assemble(mir, knot, m, framing);
}

PolySeries framing_ratio(long m, int order) {
  ParamPolynomial rate = lambda_mp_factorized(ChordDiagram::parse("AA"), Rational(m)) * ParamPolynomial(2);
  PolySeries x(order);
  if (order >= 1) x[1] = rate;
  return exp_of(x);
}

Series<GaussianRational> equivalence_rhs(const BraidWord& b, long p, int order) {
  if (p < 1) throw UsageError("p must be a positive integer");
  LorentzInvariant x = x_invariant(b, 0, order);
  Series<GaussianRational> xs = specialize(x.series, GaussianRational(p));
  // 2 alpha + 1 = p
  Series<GaussianRational> qd = to_gaussian(q_integer<Rational>(p, order));
  return xs * qd.pow(-2) * GaussianRational(p * p);
}

EquivalenceReport equivalence_check(const BraidWord& b, long p, int order, int spin_cutoff) {
  EquivalenceReport r;
  r.jones_side = equivalence_rhs(b, p, order);
  r.braid_side = braid_sum(b, BigComplex(p), {order, spin_cutoff});
  r.tolerance = pow(Real(10), -static_cast<int>(working_precision()) + 15);
  r.max_diff = 0;
  for (int k = 0; k <= order; ++k) {
    Real d = (r.braid_side[k] - BigComplex(r.jones_side[k])).abs();
    r.diffs.push_back(d);
    if (d > r.max_diff) r.max_diff = d;
  }
  r.pass = r.max_diff <= r.tolerance;
  return r;
}

JonesRelationReport jones_relation_check(const BraidWord& b, int z2, int w2, int order) {
  if (z2 < 0 || w2 < 0) throw UsageError("spins must be nonnegative");
  if ((z2 - w2) % 2) throw UsageError("z - w must be an integer");
  long m = (z2 - w2) / 2;
  Rational p(z2 + w2 + 2, 2);
  p.canonicalize();
  JonesRelationReport r;
  r.x_side = specialize(x_invariant(b, m, order).series, GaussianRational(p));
  r.jones_side = jones_unframed(mirror(b), z2, order) * jones_unframed(b, w2, order);
  r.pass = r.x_side == r.jones_side;
  return r;
}

}  // namespace qlk
