#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gctk/polynomial.hpp"
#include "gctk/scalars.hpp"

namespace gctk {

using Mask = std::uint32_t;

inline int grade_of(Mask m) { return std::popcount(m); }

// Sign of dx^a ^ dx^b relative to dx^(a|b) for disjoint masks.
inline int wedge_sign(Mask a, Mask b) {
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

inline std::string scalar_text(const Complex& c) { return coeff_text(c); }
inline std::string scalar_text(const Polynomial& p) { return "(" + p.str() + ")"; }

constexpr int kMaxDim = 20;

// Element of the exterior algebra on R^dim with coefficients in S.
template <class S>
class Multivector {
 public:
  using Terms = std::map<Mask, S>;

  Multivector() = default;
  explicit Multivector(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("unsupported multivector dimension");
  }

  static Multivector scalar(int dim, const S& value) { return basis(dim, 0, value); }
  static Multivector basis(int dim, Mask mask, const S& coeff) {
    Multivector m(dim);
    m.add_term(mask, coeff);
    return m;
  }
  // dx^i
  static Multivector covector(int dim, int i, const S& coeff) { return basis(dim, Mask{1} << i, coeff); }

  int dim() const { return dim_; }
  const Terms& terms() const& { return terms_; }
  // rvalue overload keeps range-for over a temporary safe
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(Mask m, const S& c) {
    if (m >> dim_) throw std::invalid_argument("mask outside the ambient dimension");
    if (gctk::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (gctk::is_zero(it->second)) terms_.erase(it);
    }
  }

  bool is_even() const {
    for (const auto& [m, c] : terms_)
      if (grade_of(m) % 2) return false;
    return true;
  }

  Multivector& operator+=(const Multivector& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Multivector& operator*=(const Complex& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c = c * s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Complex& s) { return a *= s; }
  friend Multivector operator*(const Complex& s, Multivector a) { return a *= s; }
  Multivector operator-() const {
    Multivector m = *this;
    for (auto& [k, c] : m.terms_) c = -c;
    return m;
  }

  // Multiplies every coefficient by a ring element.
  Multivector scaled(const S& s) const {
    Multivector out(dim_);
    for (const auto& [m, c] : terms_) out.add_term(m, c * s);
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  // Same coefficients in a larger ambient space (new coordinates appended).
  Multivector embedded(int dim) const {
    if (dim < dim_) throw std::invalid_argument("cannot embed into a smaller dimension");
    Multivector out(dim);
    out.terms_ = terms_;
    return out;
  }

  template <class F>
  auto map_coeffs(F f) const -> Multivector<decltype(f(std::declval<S>()))> {
    Multivector<decltype(f(std::declval<S>()))> out(dim_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  void check_dim(const Multivector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("multivector dimension mismatch");
  }

 private:
  int dim_ = 0;
  Terms terms_;
};

template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
  a.check_dim(b);
  Multivector<S> out(a.dim());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      S c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      out.add_term(ma | mb, c);
    }
  }
  return out;
}

template <class S>
Multivector<S> wedge_power(const Multivector<S>& a, unsigned k) {
  Multivector<S> out = Multivector<S>::scalar(a.dim(), S(1));
  for (unsigned j = 0; j < k; ++j) out = wedge(out, a);
  return out;
}

// Interior product with the coordinate vector field d/dx^i.
template <class S>
Multivector<S> interior_basis(int i, const Multivector<S>& a) {
  Multivector<S> out(a.dim());
  Mask bit = Mask{1} << i;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    bool odd = std::popcount(m & (bit - 1)) % 2;
    out.add_term(m & ~bit, odd ? S(-c) : c);
  }
  return out;
}

// Section X + xi of T + T*, components in the coordinate frame.
template <class S>
struct EVector {
  std::vector<S> tangent;
  std::vector<S> cotangent;

  EVector() = default;
  explicit EVector(int dim) : tangent(dim, S(0)), cotangent(dim, S(0)) {}
  EVector(std::vector<S> x, std::vector<S> xi) : tangent(std::move(x)), cotangent(std::move(xi)) {
    if (tangent.size() != cotangent.size()) throw std::invalid_argument("EVector part size mismatch");
  }
  int dim() const { return static_cast<int>(tangent.size()); }

  // k < dim: d/dx^k, otherwise dx^(k-dim).
  static EVector unit(int dim, int k) {
    EVector e(dim);
    if (k < dim) {
      e.tangent[k] = S(1);
    } else {
      e.cotangent[k - dim] = S(1);
    }
    return e;
  }
};

template <class S>
Multivector<S> interior(const std::vector<S>& x, const Multivector<S>& a) {
  if (static_cast<int>(x.size()) != a.dim()) throw std::invalid_argument("interior: dimension mismatch");
  Multivector<S> out(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    if (gctk::is_zero(x[i])) continue;
    out += interior_basis(i, a).scaled(x[i]);
  }
  return out;
}

template <class S>
Multivector<S> one_form(const std::vector<S>& xi) {
  Multivector<S> f(static_cast<int>(xi.size()));
  for (std::size_t i = 0; i < xi.size(); ++i) f.add_term(Mask{1} << i, xi[i]);
  return f;
}

// (X + xi) . a = i_X a + xi ^ a
template <class S>
Multivector<S> clifford_act(const EVector<S>& e, const Multivector<S>& a) {
  if (e.dim() != a.dim()) throw std::invalid_argument("clifford_act: dimension mismatch");
  return interior(e.tangent, a) + wedge(one_form(e.cotangent), a);
}

template <class S>
Multivector<S> grade_project(const Multivector<S>& a, int k) {
  Multivector<S> out(a.dim());
  for (const auto& [m, c] : a.terms())
    if (grade_of(m) == k) out.add_term(m, c);
  return out;
}

// sum_j a^j / j! for a nilpotent even form without a grade-0 part.
template <class S>
Multivector<S> exp_even(const Multivector<S>& a) {
  for (const auto& [m, c] : a.terms()) {
    if (grade_of(m) % 2) throw std::invalid_argument("exp_even: odd-graded component");
    if (m == 0) throw std::invalid_argument("exp_even: grade-0 component present");
  }
  Multivector<S> out = Multivector<S>::scalar(a.dim(), S(1));
  Multivector<S> power = out;
  for (unsigned j = 1; !power.is_zero(); ++j) {
    power = wedge(power, a) * Complex(Rational(1, j));
    out += power;
  }
  return out;
}

template <class S>
Multivector<S> conj(const Multivector<S>& a) {
  return a.map_coeffs([](const S& c) { return conj(c); });
}

// Coefficient of the volume form in a2^b2 - a0^b4 - a4^b0 on R^4.
template <class S>
S mukai_pair(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.dim() != 4 || b.dim() != 4) throw std::invalid_argument("mukai_pair is defined on R^4 only");
  if (!a.is_even() || !b.is_even()) throw std::invalid_argument("mukai_pair needs even forms");
  auto top = wedge(grade_project(a, 2), grade_project(b, 2)) - wedge(grade_project(a, 0), grade_project(b, 4)) -
             wedge(grade_project(a, 4), grade_project(b, 0));
  return top.coeff(Mask{0xF});
}

// `coeff * dx0^dx1` terms joined by " + ", masks ascending.
template <class S>
std::string render(const Multivector<S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    out += scalar_text(c) + " * ";
    if (m == 0) {
      out += "1";
      continue;
    }
    bool lead = true;
    for (int i = 0; i < a.dim(); ++i) {
      if (!(m & (Mask{1} << i))) continue;
      if (!lead) out += "^";
      lead = false;
      out += "dx" + std::to_string(i);
    }
  }
  return out;
}

// Projective equality: a * c_b == b * c_a with c the first coefficients.
template <class S>
bool proportional(const Multivector<S>& a, const Multivector<S>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  a.check_dim(b);
  if (a.terms().size() != b.terms().size()) return false;
  const S& ca = a.terms().begin()->second;
  const S& cb = b.terms().begin()->second;
  return a.scaled(cb) == b.scaled(ca);
}

using Form = Multivector<Complex>;
using PolyMultivector = Multivector<Polynomial>;

}  // namespace gctk
