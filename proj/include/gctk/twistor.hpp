#pragma once

#include <string>
#include <vector>

#include "gctk/courant.hpp"
#include "gctk/family.hpp"

namespace gctk {

// Coordinates of a patch of M x CP^1 x CP^1: x0.., then the real and
// imaginary parts of the two fibre coordinates.
std::vector<std::string> twistor_coordinates(int n, const std::string& second_re, const std::string& second_im);

// Phi wedge d alpha wedge d beta on the patch in the given charts. With
// `mutate` the whole hyperkahler triple is rescaled by 1 + x0, which keeps
// the spinor pure but makes it non-closed (chart (0,0) only).
PolyForm build_psi(const HyperkahlerModel& m, bool mutate = false);
PolyForm build_psi(const SpinorFamily& fam, int chart_a, int chart_b);
// Phi' wedge d alpha wedge d conj(beta~) over a1, a2, t1, t2.
PolyForm build_psi_prime(const HyperkahlerModel& m);

bool check_dpsi_zero(const HyperkahlerModel& m, bool mutate = false);
bool check_dpsi_prime_zero(const HyperkahlerModel& m);

// Holomorphic derivative d/d beta~ of the symbolic Phi'; identically zero.
bool phi_prime_antiholomorphic(const HyperkahlerModel& m);

struct TwistorPointStructure {
  GE j;
  GE j_prime;
};

// J_{alpha,beta} + J_I + J_I and J'_{alpha,beta} + J_I + J_{-I}, with I the
// standard structure of each chart.
TwistorPointStructure point_structures(const SpinorFamily& fam, const FamilyPoint& p);

// Psi at a point of the fibre directions, as a constant form on E of the patch.
Form psi_at(const SpinorFamily& fam, const FamilyPoint& p);

// -<J e1, J' e2> as a symmetric matrix.
RMatrix pseudo_metric(const TwistorPointStructure& s);
Inertia pseudo_kahler_signature(const TwistorPointStructure& s);
// Eigenvalue count in double precision, for cross-checking the exact inertia.
Inertia float_signature(const RMatrix& symmetric, double tol = 1e-9);

// The antipodal pair map sends J to -J and J' to -J' (alpha, beta finite, nonzero).
bool real_involution_check(const SpinorFamily& fam, const Complex& alpha, const Complex& beta);

}  // namespace gctk
