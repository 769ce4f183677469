#include <doctest.h>

#include "gctk/family.hpp"
#include "oracles.hpp"

using namespace gctk;

namespace {

Polynomial var(const std::string& name) { return Polynomial::variable(name); }

Form one_minus_vol(const HyperkahlerModel& m) { return Form::scalar(m.dim, Complex(1)) - m.vol; }

}  // namespace

TEST_CASE("four-dimensional expansion") {
  auto m = build_model(1);
  SpinorFamily fam(m);
  Polynomial a = var(vars::alpha), b = var(vars::beta);
  PolyMultivector expected = lift(m.sigma) - lift(m.omega_I).scaled(a + b) +
                             lift(one_minus_vol(m)).scaled((a - b) * Complex::i()) - lift(m.sigma_bar).scaled(a * b);
  CHECK(fam.holomorphic() == expected);
  // spot values: alpha = 1, beta = 0 gives sigma - omega_I + i (1 - vol)
  Form at10 = fam.at(CP1Point::affine(Complex(1)), CP1Point::affine(Complex(0)));
  CHECK(at10 == m.sigma - m.omega_I + one_minus_vol(m) * Complex::i());
  // zeta-family: sigma + 2 i zeta (1 - vol) + zeta^2 sigma_bar
  Complex z(Rational(1, 3), Rational(-2));
  CHECK(phi_zeta(m, z) == m.sigma + one_minus_vol(m) * (Complex(0, 2) * z) + m.sigma_bar * (z * z));
  CHECK(phi_zeta(m, Complex(0)) == m.sigma);
}

TEST_CASE("family against the floating series") {
  oracle::Rng rng(11);
  for (int n = 1; n <= 3; ++n) {
    auto m = build_model(n);
    SpinorFamily fam(m);
    auto fm = oracle::float_model(n);
    for (int k = 0; k < 6; ++k) {
      Complex a = rng.complex(3), b = rng.complex(3);
      if (a == b) continue;
      Form exact = fam.at(CP1Point::affine(a), CP1Point::affine(b));
      CAPTURE(n);
      CHECK(oracle::distance(exact, oracle::phi(fm, oracle::to_cd(a), oracle::to_cd(b))) < 1e-6);
      CHECK(exact == phi_alpha_beta_direct(m, a, b));
      CHECK(exact == phi_alpha_beta(m, {CP1Point::affine(a), CP1Point::affine(b)}));
    }
  }
}

TEST_CASE("diagonal and divisibility") {
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    SpinorFamily fam(m);
    Complex a(Rational(2, 5), Rational(1, 7));
    Form sa = sigma_eta(m, a);
    CHECK(fam.at(CP1Point::affine(a), CP1Point::affine(a)) == wedge_power(sa, n) * Complex(Rational(1) / factorial(n)));
    for (const auto& [mask, p] : fam.holomorphic().terms()) {
      CHECK(p.degree_in(vars::alpha) <= n);
      CHECK(p.degree_in(vars::beta) <= n);
    }
  }
  auto m = build_model(1);
  // a pole that does not cancel
  CHECK_THROWS_AS(cleared_exp(m.sigma, Complex(0), 0), std::logic_error);
  CHECK(cleared_exp(m.sigma, Complex(0), 1) == m.sigma);
}

TEST_CASE("chart representatives") {
  auto m = build_model(1);
  SpinorFamily fam(m);
  Complex a(Rational(1, 2), 1), b(3, Rational(-1, 4));
  Form base = fam.at(CP1Point::affine(a), CP1Point::affine(b));
  CHECK(proportional(fam.at(CP1Point::in_chart(a.inverse(), 1), CP1Point::affine(b)), base));
  CHECK(proportional(fam.at(CP1Point::affine(a), CP1Point::in_chart(b.inverse(), 1)), base));
  CHECK(proportional(fam.at(CP1Point::in_chart(a.inverse(), 1), CP1Point::in_chart(b.inverse(), 1)), base));
  // at (infinity, infinity) only the sigma_bar term survives
  CHECK(fam.at(CP1Point::infinity(), CP1Point::infinity()) == -m.sigma_bar);
}

TEST_CASE("fiber map") {
  auto eq = [](const FamilyPoint& p, const CP1Point& a, const CP1Point& b) { return p.alpha == a && p.beta == b; };
  CHECK(eq(f_map({Complex(0), Complex(Rational(1, 2))}), CP1Point::affine(Complex(Rational(1, 2))),
           CP1Point::affine(Complex(Rational(-1, 2)))));
  CHECK(eq(f_map({Complex(1), Complex(0)}), CP1Point::affine(Complex(1)), CP1Point::affine(Complex(1))));
  CHECK(eq(f_map({Complex(1), Complex(1)}), CP1Point::infinity(), CP1Point::affine(Complex(0))));
  oracle::Rng rng(12);
  auto m = build_model(1);
  SpinorFamily fam(m);
  for (int k = 0; k < 10; ++k) {
    TwistorFiberPoint p{rng.complex(), rng.complex()};
    CHECK(proportional(phi_eta_zeta(m, p.eta, p.zeta), fam.at(f_map(p))));
  }
}

TEST_CASE("Mukai quadric") {
  auto m = build_model(1);
  std::vector<Polynomial> v{var("X"), var("Y"), var("Z"), var("U")};
  PolyMultivector q = quadric_spinor<Polynomial>(m, v[0], v[1], v[2], v[3]);
  CHECK(mukai_pair(q, q) == (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]) * Complex(2));
  // omega_I alone is off the quadric, 1 - vol + i omega_I is on it
  CHECK_FALSE(is_pure(quadric_spinor<Complex>(m, 1, 0, 0, 0)));
  CHECK(is_pure(quadric_spinor<Complex>(m, Complex::i(), 0, 0, 1)));
  CHECK(is_pure(quadric_spinor<Complex>(m, 0, 1, Complex::i(), 0)));
  CHECK_THROWS(quadric_spinor<Complex>(build_model(2), 1, 0, 0, 0));
}

TEST_CASE("type map") {
  auto m = build_model(1);
  auto grid = type_map_grid(3, 0);
  REQUIRE(grid.size() == 3);
  CHECK(grid[1].coord == Complex(Rational(1, 2), Rational(1, 4)));
  CHECK_THROWS(type_map_grid(1, 0));
  auto rows = type_map(m, 3, true);
  CHECK(rows.size() == 36);
  for (const auto& r : rows) {
    bool diagonal = r.alpha.canonical() == r.beta.canonical();
    CHECK(r.type == (diagonal ? 2 : 0));
  }
  auto total = type_map(m, 3, false);
  CHECK(total[0].type == 4);
  CHECK(total[1].type == 2);
  std::string csv = type_map_csv(rows);
  CHECK(csv.rfind("alpha_re,alpha_im,beta_re,beta_im,chart_a,chart_b,type\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 37);
  CHECK(csv.find("\n1/2,1/4,0,0,0,0,0\n") != std::string::npos);
}

TEST_CASE("antipodal points are symplectic") {
  auto m = build_model(2);
  SpinorFamily fam(m);
  for (Complex a : {Complex(0), Complex(1), Complex(Rational(2, 3), -1)}) {
    CP1Point p = CP1Point::affine(a);
    GE j = gacs_from_spinor(fam.at(p, p.antipode()));
    CHECK(j.A() == RMatrix(m.dim, m.dim));
    CHECK(type_of(j) == 0);
  }
}

TEST_CASE("real structure") {
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    SpinorFamily fam(m);
    CHECK(real_structure_identity(fam, Complex(1), Complex(1)));
    CHECK(real_structure_identity(fam, Complex(1), Complex::i()));
    CHECK(real_structure_identity(fam, Complex(Rational(-3, 2), 2), Complex(Rational(1, 5), Rational(-1, 3))));
    CHECK(sigma_real_structure_identity(m, Complex(2, 1)));
    CHECK_THROWS(real_structure_identity(fam, Complex(0), Complex(1)));
  }
}

TEST_CASE("bi-Hermitian pairs") {
  auto m = build_model(1);
  RMatrix wi = two_form_matrix(m.omega_I);
  auto kahler = bi_hermitian_pair(m.I, wi, m.I, wi);
  CHECK(kahler.j == make_JI(m.I));
  CHECK(kahler.j_prime == make_Jomega(wi));
  CHECK_THROWS(bi_hermitian_pair(RMatrix::identity(4), wi, m.I, wi));
  // generalized metric -J^T <,> J' is positive
  RMatrix pair = pairing_matrix(m.dim);
  oracle::Rng rng(14);
  SpinorFamily fam(m);
  for (int k = 0; k < 8; ++k) {
    Complex a = rng.complex(), b = rng.complex();
    if (a == b) continue;
    FamilyPoint p{CP1Point::affine(a), CP1Point::affine(b)};
    auto gp = family_pair(fam, p);
    CHECK(gp.j * gp.j_prime == gp.j_prime * gp.j);
    CHECK(-(gp.j.matrix().transpose() * pair * gp.j_prime.matrix()) == generalized_metric(m));
    // the spinor's structure carries I_+ = I_beta, I_- = I_alpha
    CHECK(gp.j == bi_hermitian_at(m, p.beta, p.alpha).j);
    auto sd = symplectic_data(m, a, b);
    CHECK(gp.j == bfield_transform(make_Jomega(sd.omega), sd.b));
  }
  // the opposite labelling is a different structure away from the diagonal
  FamilyPoint p{CP1Point::affine(Complex(1)), CP1Point::affine(Complex(0, 2))};
  CHECK(gacs_from_spinor(fam.at(p)) != bi_hermitian_at(m, p.alpha, p.beta).j);
}

TEST_CASE("conjugate family") {
  auto m = build_model(1);
  SpinorFamily fam(m);
  for (const auto& [mask, p] : phi_prime_symbolic(m).terms()) CHECK(dz(p, vars::t1, vars::t2).is_zero());
  Complex a(1, 2), bt(Rational(1, 2), -1);
  GE jp = gacs_from_spinor(phi_prime(fam, CP1Point::affine(a), CP1Point::affine(bt)));
  CHECK(jp == -bi_hermitian_at(m, CP1Point::in_chart(bt, 1), CP1Point::affine(a)).j_prime);
  // Kahler pair I_+ = I_- = I sits at beta~ = infinity
  CHECK(proportional(phi_prime(fam, CP1Point::affine(Complex(0)), CP1Point::infinity()),
                     exp_even(m.omega_I * Complex(0, -1))));
}
