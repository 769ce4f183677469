#pragma once

#include <array>
#include <string>

#include "gctk/double_space.hpp"
#include "gctk/matrix.hpp"
#include "gctk/multivector.hpp"

namespace gctk {

// Point of CP^1 in one of two affine charts: chart 0 holds eta itself,
// chart 1 holds w = 1/eta (w = 0 is infinity).
struct CP1Point {
  Complex coord;
  int chart = 0;

  static CP1Point affine(const Complex& z) { return {z, 0}; }
  static CP1Point infinity() { return {Complex(), 1}; }
  static CP1Point in_chart(const Complex& z, int chart) { return {z, chart}; }

  bool is_infinity() const { return chart == 1 && coord.is_zero(); }
  // eta in chart 0, or nullopt at infinity.
  std::optional<Complex> affine_value() const;
  // Same point expressed in chart 0 when finite, chart 1 otherwise.
  CP1Point canonical() const;
  // Antipodal map eta -> -1/conj(eta).
  CP1Point antipode() const;
  // eta -> -conj(eta)
  CP1Point neg_conj() const;

  std::string str() const;
  friend bool operator==(const CP1Point& a, const CP1Point& b);
};

struct HyperkahlerModel {
  int n = 0;
  int dim = 0;
  RMatrix I, J, K;
  Form omega_I, omega_J, omega_K;
  Form sigma, sigma_bar, vol;
};

// Flat H^n, block-diagonal copies of left quaternion multiplication on R^4.
HyperkahlerModel build_model(int n);

// omega_A(X, Y) = g(AX, Y) with g the identity.
Form kahler_form(const RMatrix& a);

RMatrix I_eta(const HyperkahlerModel& m, const CP1Point& eta);
RMatrix I_eta(const HyperkahlerModel& m, const Complex& eta);

Form sigma_eta(const HyperkahlerModel& m, const Complex& eta);
Form sigma_eta(const HyperkahlerModel& m, const CP1Point& eta);
Form sigma_eta_prime(const HyperkahlerModel& m, const Complex& eta);
Form omega_eta(const HyperkahlerModel& m, const Complex& eta);
Form omega_eta(const HyperkahlerModel& m, const CP1Point& eta);

RMatrix so3_matrix(const Complex& eta);

// 1/2 (g + g^-1) as a symmetric matrix on E.
RMatrix generalized_metric(const HyperkahlerModel& m);

// sigma is (2,0) for the complex structure: sigma(AX, Y) = i sigma(X, Y).
bool is_type_20(const Form& sigma, const RMatrix& complex_structure);

}  // namespace gctk
