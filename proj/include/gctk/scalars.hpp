#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace gctk {

using Rational = mpq_class;
using FloatComplex = std::complex<double>;

// Complex number with exact rational parts.
class Complex {
 public:
  Complex() = default;
  Complex(long re) : re_(re) {}
  Complex(const Rational& re) : re_(re) {}
  Complex(const Rational& re, const Rational& im) : re_(re), im_(im) {}

  static Complex i() { return Complex(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Complex conj() const { return Complex(re_, -im_); }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  Complex inverse() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  Complex operator-() const { return Complex(-re_, -im_); }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

  FloatComplex to_float() const { return {re_.get_d(), im_.get_d()}; }

  // Text form `p/q+r/s*i`.
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Complex& c) { return c.is_zero(); }
inline Complex conj(const Complex& c) { return c.conj(); }

Complex pow(const Complex& base, unsigned k);
Rational factorial(unsigned k);

std::string rational_str(const Rational& r);
// Real values print as a bare rational, others as str().
std::string short_str(const Complex& c);
// Compact coefficient text: 3/2, -2*i, (1+1/2*i).
std::string coeff_text(const Complex& c);

// Parses `RAT`, `RAT+RAT i`, `RAT-RAT i` with RAT = -?digits(/digits)?.
// Whitespace before the trailing `i` and an optional `*` are accepted.
Complex parse_complex(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace gctk
