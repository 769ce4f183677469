#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gctk/courant.hpp"
#include "gctk/double_space.hpp"
#include "gctk/hyperkahler.hpp"

namespace gctk {

struct FamilyPoint {
  CP1Point alpha;
  CP1Point beta;
};

// (eta, zeta) stands for zeta (1 + |eta|^2) d/d eta.
struct TwistorFiberPoint {
  Complex eta;
  Complex zeta;
};

// Names of the indeterminates used by the symbolic spinors.
namespace vars {
inline const std::string alpha = "alpha";  // complex, holomorphic ring
inline const std::string beta = "beta";
inline const std::string a1 = "a1";  // alpha = a1 + i a2
inline const std::string a2 = "a2";
inline const std::string b1 = "b1";  // beta = b1 + i b2
inline const std::string b2 = "b2";
inline const std::string t1 = "t1";  // beta~ = t1 + i t2
inline const std::string t2 = "t2";
}  // namespace vars

PolyMultivector lift(const Form& f);

// sum_j D^(n-j) N^j / j!, the expansion of D^n exp(N / D) with the
// negative powers of D cancelled exactly. Throws std::logic_error when a
// pole does not cancel.
PolyMultivector cleared_exp(const PolyMultivector& numerator, const Polynomial& denominator, int n);
Form cleared_exp(const Form& numerator, const Complex& denominator, int n);

// Individual terms D^(n-j) N^j / j! for j = 0..2n.
std::vector<PolyMultivector> cleared_exp_terms(const PolyMultivector& numerator, const Polynomial& denominator,
                                               int n);

// sigma - (alpha + beta) omega_I - alpha beta sigma_bar over the complex
// indeterminates alpha, beta.
PolyMultivector family_numerator(const HyperkahlerModel& m);

// alpha -> a1 + i a2, beta -> b1 + i b2.
PolyMultivector realify(const PolyMultivector& f);

// Spinor family with all chart representatives precomputed.
class SpinorFamily {
 public:
  explicit SpinorFamily(const HyperkahlerModel& m);

  const HyperkahlerModel& model() const { return model_; }
  int n() const { return model_.n; }

  // Phi_{alpha,beta} over the complex indeterminates alpha, beta.
  const PolyMultivector& holomorphic() const { return charts_[0][0]; }
  // Representative in the given charts: the chart-1 variable replaces the
  // affine one and the spinor is multiplied by its n-th power.
  const PolyMultivector& chart(int chart_a, int chart_b) const { return charts_[chart_a][chart_b]; }

  Form at(const CP1Point& alpha, const CP1Point& beta) const;
  Form at(const FamilyPoint& p) const { return at(p.alpha, p.beta); }

 private:
  HyperkahlerModel model_;
  PolyMultivector charts_[2][2];
};

Form phi_zeta(const HyperkahlerModel& m, const Complex& zeta);
FamilyPoint f_map(const TwistorFiberPoint& p);
CMatrix psu2_matrix(const Complex& eta);
CP1Point mobius(const CMatrix& a, const CP1Point& z);
// Point of the unit sphere for eta under the identification eta = 0 <-> (1,0,0).
std::vector<Rational> sphere_point(const CP1Point& eta);

Form phi_eta_zeta(const HyperkahlerModel& m, const Complex& eta, const Complex& zeta);

// Expansion over real variables a1, a2, b1, b2.
PolyMultivector phi_alpha_beta_symbolic(const HyperkahlerModel& m);
Form phi_alpha_beta(const HyperkahlerModel& m, const FamilyPoint& p);
// Direct numeric evaluation of the defining sum, independent of the
// symbolic route.
Form phi_alpha_beta_direct(const HyperkahlerModel& m, const Complex& alpha, const Complex& beta);

// X omega_I + Y omega_J + Z omega_K + U (1 - vol) on the four-dimensional model.
template <class S>
Multivector<S> quadric_spinor(const HyperkahlerModel& m, const S& x, const S& y, const S& z, const S& u);
template <>
Form quadric_spinor<Complex>(const HyperkahlerModel&, const Complex&, const Complex&, const Complex&,
                             const Complex&);
template <>
PolyMultivector quadric_spinor<Polynomial>(const HyperkahlerModel&, const Polynomial&, const Polynomial&,
                                           const Polynomial&, const Polynomial&);

struct GeneralizedPair {
  GE j;
  GE j_prime;
};

GeneralizedPair bi_hermitian_pair(const RMatrix& i_plus, const RMatrix& omega_plus, const RMatrix& i_minus,
                                  const RMatrix& omega_minus);
// bi_hermitian_pair(I_plus, omega_plus, I_minus, omega_minus) with I_plus = I_alpha, I_minus = I_beta.
GeneralizedPair bi_hermitian_at(const HyperkahlerModel& m, const CP1Point& i_plus, const CP1Point& i_minus);

// Structures attached to a point of the family: j is the structure of
// Phi_{alpha,beta}; j_prime its bi-Hermitian partner.
GeneralizedPair family_pair(const SpinorFamily& fam, const FamilyPoint& p);

// B + i omega = N / (i (alpha - beta)) for alpha != beta (both finite).
struct SymplecticData {
  RMatrix b;
  RMatrix omega;
};
SymplecticData symplectic_data(const HyperkahlerModel& m, const Complex& alpha, const Complex& beta);

// Phi' over real variables a1, a2, t1, t2: the spinor with beta replaced by
// -conj(beta~).
PolyMultivector phi_prime_symbolic(const HyperkahlerModel& m);
Form phi_prime(const SpinorFamily& fam, const CP1Point& alpha, const CP1Point& beta_tilde);

struct TypeMapRow {
  CP1Point alpha;
  CP1Point beta;
  int type = 0;
};
std::vector<CP1Point> type_map_grid(int grid, int chart);
// With fiber = false the two CP^1 factors of the twistor space add 2.
std::vector<TypeMapRow> type_map(const HyperkahlerModel& m, int grid, bool fiber);
std::string type_map_csv(const std::vector<TypeMapRow>& rows);

bool real_structure_identity(const SpinorFamily& fam, const Complex& alpha, const Complex& beta);
bool sigma_real_structure_identity(const HyperkahlerModel& m, const Complex& eta);
bool real_structure_check(const HyperkahlerModel& m, const std::vector<std::pair<Complex, Complex>>& samples);

}  // namespace gctk
