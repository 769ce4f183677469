#pragma once

#include <map>
#include <string>
#include <vector>

#include "gctk/double_space.hpp"
#include "gctk/multivector.hpp"
#include "gctk/polynomial.hpp"

namespace gctk {

std::vector<std::string> coordinate_names(int dim, const std::string& prefix = "x");

// Form with polynomial coefficients; coords[i] names the function whose
// differential is dx^i. Coefficients may also involve variables that are
// not coordinates (parameters held constant by d).
struct PolyForm {
  std::vector<std::string> coords;
  PolyMultivector form;

  PolyForm() = default;
  PolyForm(std::vector<std::string> c, PolyMultivector f);
  static PolyForm constant(std::vector<std::string> coords, const Form& f);

  int dim() const { return form.dim(); }
  bool is_zero() const { return form.is_zero(); }
  // Numeric form at a point; every variable must be assigned.
  Form at(const std::map<std::string, Complex>& point) const;
};

PolyForm operator+(const PolyForm& a, const PolyForm& b);
PolyForm operator-(const PolyForm& a, const PolyForm& b);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

PolyForm ext_d(const PolyForm& a, const std::vector<std::string>& wrt);
PolyForm ext_d(const PolyForm& a);

// X + xi with polynomial components over coordinate functions.
struct PolySection {
  std::vector<std::string> coords;
  std::vector<Polynomial> tangent;
  std::vector<Polynomial> cotangent;

  PolySection() = default;
  explicit PolySection(std::vector<std::string> c);
  int dim() const { return static_cast<int>(coords.size()); }
  PolyForm one_form() const;
  friend bool operator==(const PolySection& a, const PolySection& b);
};

PolySection operator+(const PolySection& a, const PolySection& b);
PolySection operator-(const PolySection& a, const PolySection& b);

Polynomial pairing(const PolySection& a, const PolySection& b);
PolyForm clifford_act(const PolySection& e, const PolyForm& phi);

// [X + xi, Y + eta] = [X, Y] + L_X eta - i_Y d xi
PolySection dorfman(const PolySection& a, const PolySection& b);

// d applied to a function, as a section with zero tangent part.
PolySection differential(const std::vector<std::string>& coords, const Polynomial& f);

bool derived_bracket_check(const PolySection& a, const PolySection& b, const std::vector<PolyForm>& testforms);

// At each point, d phi must lie in the image of e -> e . phi.
bool spinor_integrability(const PolyForm& phi, const std::vector<std::map<std::string, Complex>>& points);

bool involutivity_check(const DiracBasis& l);

}  // namespace gctk
