#include "gctk/twistor.hpp"

#include <Eigen/Eigenvalues>

namespace gctk {

std::vector<std::string> twistor_coordinates(int n, const std::string& second_re, const std::string& second_im) {
  auto coords = coordinate_names(4 * n);
  coords.insert(coords.end(), {vars::a1, vars::a2, second_re, second_im});
  return coords;
}

namespace {

// dz = dx + s i dy on the slots k, k + 1.
PolyMultivector complex_differential(int dim, int k, int s) {
  PolyMultivector f(dim);
  f.add_term(Mask{1} << k, Polynomial(1));
  f.add_term(Mask{1} << (k + 1), Polynomial(Complex(0, s)));
  return f;
}

PolyForm with_fibre_forms(const PolyMultivector& phi, int n, int second_sign, const std::string& re,
                          const std::string& im) {
  int dim = 4 * n + 4;
  PolyMultivector psi = wedge(wedge(phi.embedded(dim), complex_differential(dim, 4 * n, 1)),
                              complex_differential(dim, 4 * n + 2, second_sign));
  return PolyForm(twistor_coordinates(n, re, im), std::move(psi));
}

RMatrix standard_structure(int sign) {
  RMatrix i2(2, 2);
  i2(0, 1) = -sign;
  i2(1, 0) = sign;
  return i2;
}

}  // namespace

PolyForm build_psi(const SpinorFamily& fam, int chart_a, int chart_b) {
  return with_fibre_forms(realify(fam.chart(chart_a, chart_b)), fam.n(), 1, vars::b1, vars::b2);
}

PolyForm build_psi(const HyperkahlerModel& m, bool mutate) {
  if (!mutate) return build_psi(SpinorFamily(m), 0, 0);
  Polynomial f = Polynomial(1) + Polynomial::variable("x0");
  Polynomial a = Polynomial::variable(vars::alpha);
  Polynomial b = Polynomial::variable(vars::beta);
  PolyMultivector num =
      lift(m.sigma).scaled(f) - lift(m.omega_I).scaled(f * (a + b)) - lift(m.sigma_bar).scaled(f * a * b);
  PolyMultivector phi = cleared_exp(num, (a - b) * Complex::i(), m.n);
  return with_fibre_forms(realify(phi), m.n, 1, vars::b1, vars::b2);
}

PolyForm build_psi_prime(const HyperkahlerModel& m) {
  return with_fibre_forms(phi_prime_symbolic(m), m.n, -1, vars::t1, vars::t2);
}

bool check_dpsi_zero(const HyperkahlerModel& m, bool mutate) { return ext_d(build_psi(m, mutate)).is_zero(); }

bool check_dpsi_prime_zero(const HyperkahlerModel& m) { return ext_d(build_psi_prime(m)).is_zero(); }

bool phi_prime_antiholomorphic(const HyperkahlerModel& m) {
  PolyMultivector phi = phi_prime_symbolic(m);
  for (const auto& [mask, c] : phi.terms())
    if (!dz(c, vars::t1, vars::t2).is_zero()) return false;
  return true;
}

TwistorPointStructure point_structures(const SpinorFamily& fam, const FamilyPoint& p) {
  GeneralizedPair base = family_pair(fam, p);
  GE fibre = make_JI(standard_structure(1));
  GE fibre_opposite = make_JI(standard_structure(-1));
  return {direct_sum(direct_sum(base.j, fibre), fibre),
          direct_sum(direct_sum(base.j_prime, fibre), fibre_opposite)};
}

Form psi_at(const SpinorFamily& fam, const FamilyPoint& p) {
  int n = fam.n();
  int dim = 4 * n + 4;
  Form da = Form::covector(dim, 4 * n, Complex(1)) + Form::covector(dim, 4 * n + 1, Complex::i());
  Form db = Form::covector(dim, 4 * n + 2, Complex(1)) + Form::covector(dim, 4 * n + 3, Complex::i());
  return wedge(wedge(fam.at(p).embedded(dim), da), db);
}

RMatrix pseudo_metric(const TwistorPointStructure& s) {
  return -(s.j.matrix().transpose() * pairing_matrix(s.j.dim()) * s.j_prime.matrix());
}

Inertia pseudo_kahler_signature(const TwistorPointStructure& s) {
  RMatrix g = pseudo_metric(s);
  if (g.transpose() != g) throw std::logic_error("pseudo_kahler_signature: form is not symmetric");
  Inertia in = inertia(g);
  if (in.zero != 0) throw std::domain_error("pseudo_kahler_signature: degenerate form");
  return in;
}

Inertia float_signature(const RMatrix& symmetric, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_float(symmetric), Eigen::EigenvaluesOnly);
  Inertia in;
  for (double ev : solver.eigenvalues()) {
    if (ev > tol)
      ++in.positive;
    else if (ev < -tol)
      ++in.negative;
    else
      ++in.zero;
  }
  return in;
}

bool real_involution_check(const SpinorFamily& fam, const Complex& alpha, const Complex& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw std::invalid_argument("real_involution_check: need nonzero points");
  int d = 4 * fam.n();
  // z -> -1/conj(z) is antiholomorphic with d/d conj(z) = 1/conj(z)^2.
  auto jacobian = [](const Complex& z) {
    Complex c = (z.conj() * z.conj()).inverse();
    RMatrix t(2, 2);
    t(0, 0) = c.re();
    t(0, 1) = c.im();
    t(1, 0) = c.im();
    t(1, 1) = -c.re();
    return t;
  };
  RMatrix t = RMatrix::identity(d + 4);
  t.set_block(d, d, jacobian(alpha));
  t.set_block(d + 2, d + 2, jacobian(beta));
  RMatrix t_inv = inverse(t);
  GE push = GE::from_blocks(t, RMatrix(d + 4, d + 4), RMatrix(d + 4, d + 4), t_inv.transpose());
  GE pull = GE::from_blocks(t_inv, RMatrix(d + 4, d + 4), RMatrix(d + 4, d + 4), t.transpose());

  FamilyPoint p{CP1Point::affine(alpha), CP1Point::affine(beta)};
  FamilyPoint q{CP1Point::affine(-alpha.conj().inverse()), CP1Point::affine(-beta.conj().inverse())};
  TwistorPointStructure at_p = point_structures(fam, p);
  TwistorPointStructure at_q = point_structures(fam, q);
  return push * at_p.j * pull == -at_q.j && push * at_p.j_prime * pull == -at_q.j_prime;
}

}  // namespace gctk
