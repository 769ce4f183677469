#include "gctk/scalars.hpp"

#include <cctype>
#include <stdexcept>

namespace gctk {

Complex Complex::inverse() const {
  Rational n = norm2();
  if (sgn(n) == 0) throw std::domain_error("division by zero complex");
  return Complex(re_ / n, -im_ / n);
}

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
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

Complex& Complex::operator/=(const Complex& o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw std::domain_error("division by zero complex");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string rational_str(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string Complex::str() const {
  std::string out = rational_str(re_);
  if (sgn(im_) < 0) {
    out += "-" + rational_str(-im_);
  } else {
    out += "+" + rational_str(im_);
  }
  return out + "*i";
}

std::string short_str(const Complex& c) { return c.im() == 0 ? rational_str(c.re()) : c.str(); }

std::string coeff_text(const Complex& c) {
  if (c.im() == 0) return rational_str(c.re());
  if (c.re() == 0) {
    if (c.im() == 1) return "i";
    if (c.im() == -1) return "-i";
    return rational_str(c.im()) + "*i";
  }
  return "(" + c.str() + ")";
}

Complex pow(const Complex& base, unsigned k) {
  Complex out(1);
  Complex b = base;
  while (k) {
    if (k & 1u) out *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return out;
}

Rational factorial(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(f);
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
};

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
}

bool read_digits(Cursor& c, std::string& out) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) return false;
  out.append(c.s.substr(start, c.pos - start));
  return true;
}

// RAT = -?digits(/digits)?
Rational read_rational(Cursor& c, std::string_view text) {
  bool negative = false;
  if (c.peek() == '-') {
    negative = true;
    ++c.pos;
  }
  std::string num, den;
  if (!read_digits(c, num)) bad_literal(text);
  if (c.peek() == '/') {
    ++c.pos;
    if (!read_digits(c, den)) bad_literal(text);
  }
  mpz_class n(num), d(den.empty() ? "1" : den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  Rational r = read_rational(c, text);
  c.skip_ws();
  if (!c.done()) bad_literal(text);
  return r;
}

Complex parse_complex(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  Rational re = read_rational(c, text);
  c.skip_ws();
  if (c.done()) return Complex(re);
  char op = c.peek();
  if (op != '+' && op != '-') bad_literal(text);
  ++c.pos;
  c.skip_ws();
  Rational im = read_rational(c, text);
  if (op == '-') im = -im;
  c.skip_ws();
  if (c.peek() == '*') {
    ++c.pos;
    c.skip_ws();
  }
  if (c.peek() != 'i') bad_literal(text);
  ++c.pos;
  c.skip_ws();
  if (!c.done()) bad_literal(text);
  return Complex(re, im);
}

}  // namespace gctk
