#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace multitype {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator; `make_rational` canonicalizes explicit fractions.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Parses "p" or "p/q" (optional leading '-').
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Gaussian rational re + im*i.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Coefficient(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Coefficient(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Coefficient(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)

  static Coefficient imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& real() const noexcept { return re_; }
  const Rational& imag() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Coefficient conj() const { return {re_, Rational(-im_)}; }
  /// Throws std::domain_error on zero.
  Coefficient inverse() const;

  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  Coefficient& operator/=(const Coefficient& o) { return *this *= o.inverse(); }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }
  Coefficient operator-() const { return {Rational(-re_), Rational(-im_)}; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "3", "-1/2", "2i", "(1+3i)"; parenthesized when both parts are nonzero.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

}  // namespace multitype
