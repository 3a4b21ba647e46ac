#include "qlk/big_complex.hpp"

#include <ostream>
#include <sstream>

namespace qlk {

namespace {
unsigned g_digits = 60;
struct InitPrecision {
  InitPrecision() { Real::default_precision(g_digits); }
} init_precision;
}  // namespace

void set_working_precision(unsigned digits) {
  g_digits = digits;
  Real::default_precision(digits);
}

unsigned working_precision() { return g_digits; }

Real to_real(const Rational& q) {
  if (q.get_den() == 1) return Real(q.get_num().get_str());
  return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
}

Real BigComplex::abs() const { return boost::multiprecision::sqrt(re_ * re_ + im_ * im_); }

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Real r = re_ * o.re_ - im_ * o.im_;
  Real i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  Real n = o.norm();
  if (n == 0) throw std::domain_error("division by zero (complex)");
  Real r = (re_ * o.re_ + im_ * o.im_) / n;
  Real i = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

BigComplex sqrt_halved_argument(const BigComplex& z) {
  if (z.is_zero()) return BigComplex(0);
  if (z.im() == 0 && z.re() > 0) return BigComplex(boost::multiprecision::sqrt(z.re()));
  Real r = boost::multiprecision::sqrt(z.abs());
  Real theta = boost::multiprecision::atan2(z.im(), z.re());
  if (theta < 0) theta += 2 * boost::multiprecision::acos(Real(-1));
  theta /= 2;
  return {r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta)};
}

std::string BigComplex::to_string(int digits) const {
  int d = digits > 0 ? digits : static_cast<int>(working_precision());
  std::ostringstream os;
  os.precision(d);
  os << std::scientific << re_;
  if (im_ != 0) {
    os << (im_ < 0 ? " - " : " + ");
    os << (im_ < 0 ? Real(-im_) : im_) << "i";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BigComplex& x) { return os << x.to_string(); }

}  // namespace qlk
