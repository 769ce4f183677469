#include "gctk/courant.hpp"

#include <algorithm>

namespace gctk {

std::vector<std::string> coordinate_names(int dim, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

PolyForm::PolyForm(std::vector<std::string> c, PolyMultivector f) : coords(std::move(c)), form(std::move(f)) {
  if (static_cast<int>(coords.size()) != form.dim()) throw std::invalid_argument("PolyForm: coordinate count mismatch");
}

PolyForm PolyForm::constant(std::vector<std::string> coords, const Form& f) {
  return PolyForm(std::move(coords), f.map_coeffs([](const Complex& c) { return Polynomial(c); }));
}

Form PolyForm::at(const std::map<std::string, Complex>& point) const {
  return form.map_coeffs([&](const Polynomial& p) { return p.evaluate(point); });
}

namespace {

void check_coords(const PolyForm& a, const PolyForm& b) {
  if (a.coords != b.coords) throw std::invalid_argument("PolyForm coordinate mismatch");
}

int coord_index(const std::vector<std::string>& coords, const std::string& v) {
  auto it = std::find(coords.begin(), coords.end(), v);
  if (it == coords.end()) throw std::invalid_argument("ext_d: unknown variable '" + v + "'");
  return static_cast<int>(it - coords.begin());
}

}  // namespace

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  check_coords(a, b);
  return PolyForm(a.coords, a.form + b.form);
}

PolyForm operator-(const PolyForm& a, const PolyForm& b) {
  check_coords(a, b);
  return PolyForm(a.coords, a.form - b.form);
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  check_coords(a, b);
  return PolyForm(a.coords, wedge(a.form, b.form));
}

PolyForm ext_d(const PolyForm& a, const std::vector<std::string>& wrt) {
  PolyMultivector out(a.dim());
  for (const auto& v : wrt) {
    int i = coord_index(a.coords, v);
    Mask bit = Mask{1} << i;
    for (const auto& [mask, c] : a.form.terms()) {
      if (mask & bit) continue;
      Polynomial dc = c.derivative(v);
      if (dc.is_zero()) continue;
      out.add_term(mask | bit, wedge_sign(bit, mask) < 0 ? -dc : dc);
    }
  }
  return PolyForm(a.coords, std::move(out));
}

PolyForm ext_d(const PolyForm& a) { return ext_d(a, a.coords); }

PolySection::PolySection(std::vector<std::string> c)
    : coords(std::move(c)), tangent(coords.size()), cotangent(coords.size()) {}

PolyForm PolySection::one_form() const {
  PolyMultivector f(dim());
  for (int i = 0; i < dim(); ++i) f.add_term(Mask{1} << i, cotangent[i]);
  return PolyForm(coords, std::move(f));
}

bool operator==(const PolySection& a, const PolySection& b) {
  if (a.coords != b.coords) return false;
  for (int i = 0; i < a.dim(); ++i)
    if (a.tangent[i] != b.tangent[i] || a.cotangent[i] != b.cotangent[i]) return false;
  return true;
}

PolySection operator+(const PolySection& a, const PolySection& b) {
  PolySection s(a.coords);
  for (int i = 0; i < a.dim(); ++i) {
    s.tangent[i] = a.tangent[i] + b.tangent[i];
    s.cotangent[i] = a.cotangent[i] + b.cotangent[i];
  }
  return s;
}

PolySection operator-(const PolySection& a, const PolySection& b) {
  PolySection s(a.coords);
  for (int i = 0; i < a.dim(); ++i) {
    s.tangent[i] = a.tangent[i] - b.tangent[i];
    s.cotangent[i] = a.cotangent[i] - b.cotangent[i];
  }
  return s;
}

Polynomial pairing(const PolySection& a, const PolySection& b) {
  Polynomial sum;
  for (int i = 0; i < a.dim(); ++i) sum += a.cotangent[i] * b.tangent[i] + b.cotangent[i] * a.tangent[i];
  return sum * Complex(Rational(1, 2));
}

PolyForm clifford_act(const PolySection& e, const PolyForm& phi) {
  if (e.coords != phi.coords) throw std::invalid_argument("clifford_act: coordinate mismatch");
  return PolyForm(phi.coords, interior(e.tangent, phi.form)) + wedge(e.one_form(), phi);
}

PolySection dorfman(const PolySection& a, const PolySection& b) {
  if (a.coords != b.coords) throw std::invalid_argument("dorfman: coordinate mismatch");
  int d = a.dim();
  const auto& x = a.coords;
  PolySection out(x);
  Polynomial contraction;  // i_X eta
  for (int i = 0; i < d; ++i) contraction += a.tangent[i] * b.cotangent[i];
  for (int k = 0; k < d; ++k) {
    Polynomial t, c;
    for (int i = 0; i < d; ++i) {
      t += a.tangent[i] * b.tangent[k].derivative(x[i]) - b.tangent[i] * a.tangent[k].derivative(x[i]);
      c += a.tangent[i] * (b.cotangent[k].derivative(x[i]) - b.cotangent[i].derivative(x[k]));
      c -= b.tangent[i] * (a.cotangent[k].derivative(x[i]) - a.cotangent[i].derivative(x[k]));
    }
    c += contraction.derivative(x[k]);
    out.tangent[k] = std::move(t);
    out.cotangent[k] = std::move(c);
  }
  return out;
}

PolySection differential(const std::vector<std::string>& coords, const Polynomial& f) {
  PolySection s(coords);
  for (std::size_t i = 0; i < coords.size(); ++i) s.cotangent[i] = f.derivative(coords[i]);
  return s;
}

bool derived_bracket_check(const PolySection& a, const PolySection& b, const std::vector<PolyForm>& testforms) {
  PolySection bracket = dorfman(a, b);
  // [a., d] = a.d + d a.
  auto commutator_d = [&](const PolyForm& psi) { return clifford_act(a, ext_d(psi)) + ext_d(clifford_act(a, psi)); };
  for (const auto& phi : testforms) {
    PolyForm lhs = clifford_act(bracket, phi);
    PolyForm rhs = commutator_d(clifford_act(b, phi)) - clifford_act(b, commutator_d(phi));
    if (!(lhs - rhs).is_zero()) return false;
  }
  return true;
}

bool spinor_integrability(const PolyForm& phi, const std::vector<std::map<std::string, Complex>>& points) {
  PolyForm dphi = ext_d(phi);
  if (dphi.is_zero()) return true;
  int d = phi.dim();
  for (const auto& p : points) {
    Form f = phi.at(p);
    if (f.is_zero() || !is_pure(f)) throw std::domain_error("spinor_integrability: spinor is not pure at a sample point");
    Form target = dphi.at(p);
    std::vector<Form> images;
    std::map<Mask, std::size_t> row_of;
    for (int k = 0; k < 2 * d; ++k) images.push_back(clifford_act(EVector<Complex>::unit(d, k), f));
    images.push_back(target);
    for (const auto& im : images)
      for (const auto& [mask, c] : im.terms()) row_of.try_emplace(mask, row_of.size());
    CMatrix m(row_of.size(), images.size());
    for (std::size_t k = 0; k < images.size(); ++k)
      for (const auto& [mask, c] : images[k].terms()) m(row_of[mask], k) = c;
    CMatrix without = m.block(0, 0, m.rows(), 2 * d);
    if (rank(m) != rank(without)) return false;
  }
  return true;
}

bool involutivity_check(const DiracBasis& l) {
  if (!is_isotropic(l)) throw std::invalid_argument("involutivity_check: basis is not isotropic");
  if (rank(l.vectors) != static_cast<std::size_t>(l.size())) {
    throw std::invalid_argument("involutivity_check: basis is not independent");
  }
  int d = l.dim;
  auto coords = coordinate_names(d);
  std::vector<PolySection> sections;
  for (int c = 0; c < l.size(); ++c) {
    PolySection s(coords);
    for (int i = 0; i < d; ++i) {
      s.tangent[i] = Polynomial(l.vectors(i, c));
      s.cotangent[i] = Polynomial(l.vectors(d + i, c));
    }
    sections.push_back(std::move(s));
  }
  for (const auto& a : sections) {
    for (const auto& b : sections) {
      PolySection br = dorfman(a, b);
      CMatrix v(2 * d, 1);
      for (int i = 0; i < d; ++i) {
        if (!br.tangent[i].is_constant() || !br.cotangent[i].is_constant()) return false;
        v(i, 0) = br.tangent[i].constant_term();
        v(d + i, 0) = br.cotangent[i].constant_term();
      }
      if (rank(hconcat(l.vectors, v)) != rank(l.vectors)) return false;
    }
  }
  return true;
}

}  // namespace gctk
