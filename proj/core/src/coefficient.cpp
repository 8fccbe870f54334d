#include "multitype/coefficient.hpp"

#include <stdexcept>

namespace multitype {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0) {
    throw std::invalid_argument("not a rational number: " + text);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Coefficient Coefficient::inverse() const {
  Rational norm = re_ * re_ + im_ * im_;
  if (sgn(norm) == 0) throw std::domain_error("inverse of zero coefficient");
  return {Rational(re_ / norm), Rational(-im_ / norm)};
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Coefficient::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag_part;
  if (im_ == 1) {
    imag_part = "i";
  } else if (im_ == -1) {
    imag_part = "-i";
  } else {
    imag_part = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return imag_part;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  return out + imag_part + ")";
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.to_string(); }

}  // namespace multitype
