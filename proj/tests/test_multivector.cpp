#include <doctest.h>

#include "gctk/double_space.hpp"
#include "gctk/multivector.hpp"
#include "oracles.hpp"

using namespace gctk;

namespace {

Form dx(int dim, int i) { return Form::covector(dim, i, Complex(1)); }

Form random_form(oracle::Rng& rng, int dim, int grade, int terms) {
  Form f(dim);
  for (int t = 0; t < terms; ++t) {
    Mask m = 0;
    while (grade_of(m) < grade) m |= Mask{1} << rng.integer(0, dim - 1);
    f.add_term(m, rng.complex());
  }
  return f;
}

}  // namespace

TEST_CASE("wedge sign agrees with permutation parity") {
  for (Mask a = 0; a < 64; ++a)
    for (Mask b = 0; b < 64; ++b) {
      if (a & b) continue;
      CAPTURE(a);
      CAPTURE(b);
      CHECK(wedge_sign(a, b) == oracle::concat_sign(a, b));
    }
}

TEST_CASE("basic wedge values") {
  Form a = dx(4, 0), b = dx(4, 1);
  CHECK(wedge(a, b) == Form::basis(4, 0x3, Complex(1)));
  CHECK(wedge(b, a) == Form::basis(4, 0x3, Complex(-1)));
  CHECK(wedge(a, a).is_zero());
  Form w = wedge(a, b) + wedge(dx(4, 2), dx(4, 3));
  CHECK(wedge(w, w) == Form::basis(4, 0xF, Complex(2)));
  CHECK(wedge_power(w, 3).is_zero());
  CHECK_THROWS(wedge(dx(4, 0), dx(5, 0)));
  CHECK_THROWS(Form::basis(3, 0x8, Complex(1)));
}

TEST_CASE("interior products") {
  Form w = wedge(dx(4, 0), dx(4, 1));
  CHECK(interior_basis(0, w) == dx(4, 1));
  CHECK(interior_basis(1, w) == -dx(4, 0));
  CHECK(interior_basis(2, w).is_zero());
}

TEST_CASE("exp of an even nilpotent form") {
  Form w = wedge(dx(4, 0), dx(4, 1)) + wedge(dx(4, 2), dx(4, 3));
  Form e = exp_even(w * Complex::i());
  Form expected = Form::scalar(4, Complex(1)) + w * Complex::i() - Form::basis(4, 0xF, Complex(1));
  CHECK(e == expected);
  CHECK_THROWS(exp_even(dx(4, 0)));
  CHECK_THROWS(exp_even(Form::scalar(4, Complex(1)) + w));
}

TEST_CASE("pairing on forms of R^4") {
  Form wi = wedge(dx(4, 0), dx(4, 1)) + wedge(dx(4, 2), dx(4, 3));
  Form vol = Form::basis(4, 0xF, Complex(1));
  Form one = Form::scalar(4, Complex(1));
  CHECK(mukai_pair(wi, wi) == Complex(2));
  CHECK(mukai_pair(one - vol, one - vol) == Complex(2));
  CHECK(mukai_pair(one, one).is_zero());
  CHECK(mukai_pair(wi, one - vol).is_zero());
  CHECK_THROWS(mukai_pair(dx(4, 0), one));
}

TEST_CASE("rendering and projective comparison") {
  Form f = Form::scalar(2, Complex(Rational(1, 2))) + Form::basis(2, 0x3, Complex(0, -1));
  CHECK(render(f) == "1/2 * 1 + -i * dx0^dx1");
  CHECK(render(Form(3)) == "0");
  CHECK(proportional(f, f * Complex(3, 1)));
  CHECK_FALSE(proportional(f, f + Form::scalar(2, Complex(1))));
  CHECK_FALSE(proportional(f, Form(2)));
}

TEST_CASE("graded algebra identities on random forms") {
  oracle::Rng rng(5);
  const int dim = 6;
  for (int k = 0; k < 60; ++k) {
    int ga = static_cast<int>(rng.integer(0, 3)), gb = static_cast<int>(rng.integer(0, 3));
    Form a = random_form(rng, dim, ga, 3), b = random_form(rng, dim, gb, 3), c = random_form(rng, dim, 2, 2);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    CHECK(wedge(a, b) == wedge(b, a) * Complex((ga * gb) % 2 ? -1 : 1));

    std::vector<Complex> x(dim);
    for (auto& xi : x) xi = rng.complex();
    CHECK(interior(x, wedge(a, b)) ==
          wedge(interior(x, a), b) + wedge(a, interior(x, b)) * Complex(ga % 2 ? -1 : 1));
    CHECK(interior(x, interior(x, a)).is_zero());

    EVector<Complex> e(dim);
    for (int i = 0; i < dim; ++i) {
      e.tangent[i] = rng.complex();
      e.cotangent[i] = rng.complex();
    }
    CHECK(clifford_act(e, clifford_act(e, a)) == a * inner_product(e, e));
  }
}

TEST_CASE("pairing symmetry on random even forms") {
  oracle::Rng rng(9);
  for (int k = 0; k < 40; ++k) {
    Form a = random_form(rng, 4, 0, 1) + random_form(rng, 4, 2, 3) + random_form(rng, 4, 4, 1);
    Form b = random_form(rng, 4, 0, 1) + random_form(rng, 4, 2, 3) + random_form(rng, 4, 4, 1);
    CHECK(mukai_pair(a, b) == mukai_pair(b, a));
  }
}
