#include "gctk/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace gctk {

namespace {

unsigned total_degree(const Polynomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

// Re-keys `terms` written over `from` onto the variable list `to`.
Polynomial::TermMap remap(const Polynomial::TermMap& terms, const std::vector<std::string>& from,
                          const std::vector<std::string>& to) {
  if (from == to) return terms;
  std::vector<std::size_t> slot(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto it = std::find(to.begin(), to.end(), from[i]);
    slot[i] = it == to.end() ? to.size() : static_cast<std::size_t>(it - to.begin());
  }
  Polynomial::TermMap out;
  for (const auto& [e, c] : terms) {
    Polynomial::Exponents f(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] == to.size()) {
        throw std::invalid_argument("variable '" + from[i] + "' missing from target list");
      }
      f[slot[i]] = e[i];
    }
    out.emplace(std::move(f), c);
  }
  return out;
}

std::vector<std::string> merged(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

bool Polynomial::GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial::Polynomial(const Complex& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::variable(const std::string& name) {
  Polynomial p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Complex(1));
  return p;
}

Polynomial Polynomial::monomial(const std::vector<std::string>& vars, Exponents exps, Complex coeff) {
  if (exps.size() != vars.size()) throw std::invalid_argument("exponent vector length mismatch");
  Polynomial p;
  p.vars_ = vars;
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Complex Polynomial::constant_term() const {
  if (terms_.empty()) return Complex();
  const auto& [e, c] = *terms_.begin();
  return total_degree(e) == 0 ? c : Complex();
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

int Polynomial::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int Polynomial::degree_in(const std::string& var) const {
  return degree_in(std::vector<std::string>{var});
}

int Polynomial::degree_in(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return -1;
  std::vector<int> idx;
  for (const auto& v : vars) {
    int i = index_of(v);
    if (i >= 0) idx.push_back(i);
  }
  int best = 0;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int i : idx) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

Polynomial Polynomial::over(const std::vector<std::string>& vars) const {
  Polynomial p;
  p.vars_ = vars;
  p.terms_ = remap(terms_, vars_, vars);
  return p;
}

void Polynomial::align_with(const Polynomial& o) {
  if (vars_ == o.vars_) return;
  auto m = merged(vars_, o.vars_);
  if (m.size() != vars_.size()) {
    terms_ = remap(terms_, vars_, m);
    vars_ = std::move(m);
  }
}

void Polynomial::add_term(const Exponents& e, const Complex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  align_with(o);
  if (o.vars_ == vars_) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
  } else {
    for (const auto& [e, c] : remap(o.terms_, o.vars_, vars_)) add_term(e, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator*=(const Complex& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    Polynomial z;
    z.vars_ = merged(a.vars_, b.vars_);
    return z;
  }
  Polynomial out;
  out.vars_ = merged(a.vars_, b.vars_);
  Polynomial::TermMap ta_store;
  const Polynomial::TermMap* ta = &a.terms_;
  if (a.vars_ != out.vars_) {
    ta_store = remap(a.terms_, a.vars_, out.vars_);
    ta = &ta_store;
  }
  Polynomial::TermMap tb_store;
  const Polynomial::TermMap* tb = &b.terms_;
  if (b.vars_ != out.vars_) {
    tb_store = remap(b.terms_, b.vars_, out.vars_);
    tb = &tb_store;
  }
  Polynomial::Exponents e(out.vars_.size());
  for (const auto& [ea, ca] : *ta) {
    for (const auto& [eb, cb] : *tb) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  return (a - b).is_zero();
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial out(Complex(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) out *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return out;
}

Polynomial Polynomial::derivative(const std::string& var) const {
  Polynomial out;
  out.vars_ = vars_;
  int i = index_of(var);
  if (i < 0) return out;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    out.add_term(f, c * Complex(static_cast<long>(e[i])));
  }
  return out;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& value) const {
  return substitute(std::map<std::string, Polynomial>{{var, value}});
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& values) const {
  std::vector<int> sub_index;
  std::vector<const Polynomial*> sub_value;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) {
      sub_index.push_back(static_cast<int>(i));
      sub_value.push_back(&it->second);
    } else {
      kept.push_back(vars_[i]);
    }
  }
  if (sub_index.empty()) return *this;

  std::vector<std::vector<Polynomial>> powers(sub_index.size());
  auto power = [&](std::size_t s, unsigned k) -> const Polynomial& {
    auto& cache = powers[s];
    if (cache.empty()) cache.push_back(Polynomial(Complex(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * *sub_value[s]);
    return cache[k];
  };

  // Group terms by the exponents of the substituted variables so each
  // product of powers is formed once.
  std::map<Exponents, Polynomial> groups;
  for (const auto& [e, c] : terms_) {
    Exponents key(sub_index.size());
    for (std::size_t s = 0; s < sub_index.size(); ++s) key[s] = e[sub_index[s]];
    Exponents rest;
    rest.reserve(kept.size());
    for (std::size_t i = 0, s = 0; i < vars_.size(); ++i) {
      if (s < sub_index.size() && static_cast<int>(i) == sub_index[s]) {
        ++s;
        continue;
      }
      rest.push_back(e[i]);
    }
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) it->second.vars_ = kept;
    it->second.add_term(rest, c);
  }

  Polynomial out;
  out.vars_ = kept;
  for (const auto& [key, rest] : groups) {
    Polynomial factor(Complex(1));
    for (std::size_t s = 0; s < key.size(); ++s) {
      if (key[s]) factor *= power(s, key[s]);
    }
    out += factor * rest;
  }
  return out;
}

Complex Polynomial::evaluate(const std::map<std::string, Complex>& values) const {
  std::vector<const Complex*> val(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = values.find(vars_[i]);
    if (it != values.end()) val[i] = &it->second;
  }
  std::vector<std::vector<Complex>> powers(vars_.size());
  Complex sum;
  for (const auto& [e, c] : terms_) {
    Complex t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!val[i]) throw std::invalid_argument("no value assigned to variable '" + vars_[i] + "'");
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Complex(1));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * *val[i]);
      t *= cache[e[i]];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::conj() const {
  Polynomial p = *this;
  for (auto& [e, c] : p.terms_) c = c.conj();
  return p;
}

Polynomial Polynomial::reverse_degree(const std::string& var, int n) const {
  int i = index_of(var);
  Polynomial out;
  if (i < 0) {
    out.vars_ = vars_;
    out.vars_.push_back(var);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f.push_back(static_cast<std::uint16_t>(n));
      out.add_term(f, c);
    }
    return out;
  }
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[i] > n) throw std::invalid_argument("degree in '" + var + "' exceeds chart degree");
    Exponents f = e;
    f[i] = static_cast<std::uint16_t>(n - e[i]);
    out.add_term(f, c);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += "*" + vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    // every coefficient in the full p/q+r/s*i form
    out += mono.empty() ? c.str() : "(" + c.str() + ")" + mono;
  }
  return out;
}

std::optional<Polynomial> try_divide(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  auto vars = merged(p.variables(), q.variables());
  Polynomial rem = p.over(vars);
  Polynomial qq = q.over(vars);
  const auto& [lead_e, lead_c] = *qq.terms().rbegin();
  Complex lead_inv = lead_c.inverse();

  Polynomial quotient = Polynomial().over(vars);
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    Polynomial::Exponents f(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] < lead_e[k]) return std::nullopt;
      f[k] = e[k] - lead_e[k];
    }
    Polynomial step = Polynomial::monomial(vars, f, c * lead_inv);
    quotient += step;
    rem -= step * qq;
  }
  return quotient;
}

Polynomial poly_divide_exact(const Polynomial& p, const Polynomial& q) {
  auto r = try_divide(p, q);
  if (!r) throw NotDivisible("polynomial division is not exact");
  return *r;
}

Complex poly_eval(const Polynomial& p, const std::map<std::string, Complex>& assignment) {
  for (const auto& [name, value] : assignment) {
    if (!value.is_real()) {
      throw std::invalid_argument("variable '" + name + "' is real; got a non-real value");
    }
  }
  return p.evaluate(assignment);
}

Polynomial dbar(const Polynomial& p, const std::string& re, const std::string& im) {
  return (p.derivative(re) + Complex::i() * p.derivative(im)) * Complex(Rational(1, 2));
}

Polynomial dz(const Polynomial& p, const std::string& re, const std::string& im) {
  return (p.derivative(re) - Complex::i() * p.derivative(im)) * Complex(Rational(1, 2));
}

}  // namespace gctk
