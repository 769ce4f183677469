#include <doctest.h>

#include "gctk/hyperkahler.hpp"
#include "oracles.hpp"

using namespace gctk;

namespace {

RMatrix frozen(std::initializer_list<std::initializer_list<long>> rows) {
  RMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

// omega(X, Y) = g(A X, Y) straight from the matrix, no two_form_matrix.
oracle::FloatForm float_kahler(const RMatrix& a) {
  oracle::FloatForm f;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.rows(); ++j) {
      double v = a(j, i).get_d();
      if (v != 0) f[(1u << i) | (1u << j)] = v;
    }
  return f;
}

}  // namespace

TEST_CASE("quaternion model") {
  for (int n = 1; n <= 3; ++n) {
    auto m = build_model(n);
    CHECK(m.dim == 4 * n);
    RMatrix one = RMatrix::identity(m.dim);
    CHECK(m.I * m.I == -one);
    CHECK(m.I * m.J == m.K);
    CHECK(m.J * m.K == m.I);
    CHECK(m.K * m.I == m.J);
    CHECK(m.I.transpose() == -m.I);
    auto f = oracle::float_model(n);
    CHECK(oracle::distance(m.omega_I, f.wi) == 0.0);
    CHECK(oracle::distance(m.omega_J, f.wj) == 0.0);
    CHECK(oracle::distance(m.omega_K, f.wk) == 0.0);
    CHECK(oracle::distance(kahler_form(m.J), float_kahler(m.J)) == 0.0);
    CHECK(is_type_20(m.sigma, m.I));
    CHECK_FALSE(is_type_20(m.sigma, m.J));
  }
  CHECK_THROWS(build_model(0));
  CHECK_THROWS(build_model(4));
}

TEST_CASE("frozen rotation values") {
  CHECK(so3_matrix(Complex::i()) == frozen({{0, 0, 1}, {0, 1, 0}, {-1, 0, 0}}));
  CHECK(so3_matrix(Complex(0)) == RMatrix::identity(3));
  // eta = 1: (0, 1, 0) in the first row
  CHECK(so3_matrix(Complex(1)) == frozen({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}));
}

TEST_CASE("complex structures along the fiber") {
  auto m = build_model(1);
  CHECK(I_eta(m, Complex(0)) == m.I);
  CHECK(I_eta(m, Complex(1)) == m.J);
  CHECK(I_eta(m, Complex::i()) == m.K);
  CHECK(I_eta(m, CP1Point::infinity()) == -m.I);
  CHECK(I_eta(m, CP1Point::in_chart(Complex(1), 1)) == m.J);
  CHECK(sigma_eta(m, Complex(1)) == (m.omega_K + m.omega_I * Complex::i()) * Complex(0, 2));
  CHECK(sigma_eta(m, CP1Point::infinity()) == -m.sigma_bar);
  CHECK(omega_eta(m, Complex(0)) == m.omega_I);
  CHECK(omega_eta(m, CP1Point::infinity()) == -m.omega_I);
}

TEST_CASE("random points of the fiber") {
  oracle::Rng rng(8);
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    for (int k = 0; k < 20; ++k) {
      Complex eta = rng.complex();
      RMatrix a = I_eta(m, eta);
      CHECK(a * a == -RMatrix::identity(m.dim));
      CHECK(is_type_20(sigma_eta(m, eta), a));
      CHECK(omega_eta(m, eta) == kahler_form(a));
      RMatrix r = so3_matrix(eta);
      CHECK(r * r.transpose() == RMatrix::identity(3));
      // chart change w = 1/eta
      CP1Point w = CP1Point::in_chart(Complex(1) / eta, 1);
      CHECK(I_eta(m, w) == a);
      CHECK(proportional(sigma_eta(m, w), sigma_eta(m, eta)));
      CHECK(sigma_eta_prime(m, eta) == sigma_eta(m, eta) * Complex(Rational(1) / (1 + eta.norm2())));
    }
  }
}
