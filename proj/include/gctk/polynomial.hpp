#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gctk/scalars.hpp"

namespace gctk {

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Multivariate polynomial over named indeterminates with exact complex
// coefficients. Exponent vectors are aligned with variables(); binary
// operations merge variable lists, so polynomials written over different
// variable sets combine freely.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint16_t>;

  // Total degree first, then lexicographic on the exponent vector.
  struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Complex, GradedLex>;

  Polynomial() = default;
  Polynomial(const Complex& c);
  Polynomial(long c) : Polynomial(Complex(c)) {}

  static Polynomial variable(const std::string& name);
  static Polynomial monomial(const std::vector<std::string>& vars, Exponents exps, Complex coeff);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Complex constant_term() const;

  int degree() const;
  int degree_in(const std::string& var) const;
  int degree_in(const std::vector<std::string>& vars) const;

  // Same polynomial written over `vars`, which must contain every variable
  // carrying a nonzero exponent.
  Polynomial over(const std::vector<std::string>& vars) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Complex& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Complex& c) { return a *= c; }
  friend Polynomial operator*(const Complex& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;
  Polynomial derivative(const std::string& var) const;

  // Simultaneous substitution of polynomials for variables.
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;
  Polynomial substitute(const std::string& var, const Polynomial& value) const;

  // Full evaluation; every variable must be assigned.
  Complex evaluate(const std::map<std::string, Complex>& values) const;

  // Conjugates the coefficients; this is complex conjugation when every
  // variable is a real indeterminate.
  Polynomial conj() const;

  // x^k -> x^(n-k) in `var`; requires degree_in(var) <= n.
  Polynomial reverse_degree(const std::string& var, int n) const;

  std::string str() const;

 private:
  void add_term(const Exponents& e, const Complex& c);
  int index_of(const std::string& var) const;
  void align_with(const Polynomial& o);

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }
inline Polynomial conj(const Polynomial& p) { return p.conj(); }

// Exact quotient p/q; throws NotDivisible when q does not divide p.
Polynomial poly_divide_exact(const Polynomial& p, const Polynomial& q);
std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q);

// Evaluation at real points; errors on a missing variable or a value
// with nonzero imaginary part.
Complex poly_eval(const Polynomial& p, const std::map<std::string, Complex>& assignment);

// Wirtinger operator 1/2 (d/d re + i d/d im), zero iff p is holomorphic in
// the complex variable re + i im.
Polynomial dbar(const Polynomial& p, const std::string& re, const std::string& im);
// 1/2 (d/d re - i d/d im).
Polynomial dz(const Polynomial& p, const std::string& re, const std::string& im);

}  // namespace gctk
