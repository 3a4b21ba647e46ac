#include "qlk/gaussian_rational.hpp"

#include <cctype>
#include <ostream>

#include "qlk/errors.hpp"

namespace qlk {

GaussianRational GaussianRational::inverse() const {
  Rational n = re_ * re_ + im_ * im_;
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string s;
  if (sgn(re_) != 0) s = re_.get_str();
  Rational a = abs(im_);
  if (sgn(im_) < 0)
    s += "-";
  else if (!s.empty())
    s += "+";
  if (a == 1)
    s += "i";
  else if (a.get_den() == 1)
    s += a.get_num().get_str() + "i";
  else
    s += a.get_num().get_str() + "i/" + a.get_den().get_str();
  return s;
}

namespace {

Rational parse_rational(const std::string& t) {
  if (t.empty()) throw UsageError("empty rational");
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw UsageError("bad rational '" + t + "'");
  std::string u = t[0] == '+' ? t.substr(1) : t;
  Rational r;
  if (r.set_str(u, 10) != 0 || r.get_den() == 0) throw UsageError("bad rational '" + t + "'");
  r.canonicalize();
  return r;
}

// Imaginary term such as "i", "-i", "3i", "3/2i", "3i/2", "i/2".
Rational parse_imaginary(const std::string& t) {
  auto pos = t.find('i');
  std::string before = t.substr(0, pos), after = t.substr(pos + 1);
  Rational coef(1);
  if (before == "-")
    coef = -1;
  else if (before == "+" || before.empty())
    coef = 1;
  else
    coef = parse_rational(before);
  if (!after.empty()) {
    if (after[0] != '/') throw UsageError("bad imaginary part '" + t + "'");
    coef /= parse_rational(after.substr(1));
  }
  return coef;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw UsageError("empty number");
  if (text.find('i') == std::string::npos) return parse_rational(text);
  // split at the last sign that is not the first character
  size_t split = std::string::npos;
  for (size_t k = text.size(); k-- > 1;)
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {Rational(0), parse_imaginary(text)};
  std::string a = text.substr(0, split), b = text.substr(split);
  if (a.find('i') != std::string::npos) std::swap(a, b);
  if (b.find('i') == std::string::npos || a.find('i') != std::string::npos)
    throw UsageError("bad complex number '" + raw + "'");
  return {parse_rational(a), parse_imaginary(b)};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

}  // namespace qlk
