#include "gctk/hyperkahler.hpp"

namespace gctk {

std::optional<Complex> CP1Point::affine_value() const {
  if (chart == 0) return coord;
  if (coord.is_zero()) return std::nullopt;
  return coord.inverse();
}

CP1Point CP1Point::canonical() const {
  auto v = affine_value();
  return v ? affine(*v) : infinity();
}

CP1Point CP1Point::antipode() const {
  // -1/conj(eta); in the other chart the coordinate is -conj(eta).
  return {-coord.conj(), 1 - chart};
}

CP1Point CP1Point::neg_conj() const { return {-coord.conj(), chart}; }

std::string CP1Point::str() const {
  if (is_infinity()) return "inf";
  if (chart == 0) return coord.str();
  return "1/(" + coord.str() + ")";
}

bool operator==(const CP1Point& a, const CP1Point& b) {
  auto va = a.affine_value(), vb = b.affine_value();
  if (!va || !vb) return !va && !vb;
  return *va == *vb;
}

namespace {

// images[i] is the signed 1-based index of the image of e_i.
RMatrix quaternion_block(const std::array<int, 4>& images) {
  RMatrix q(4, 4);
  for (int i = 0; i < 4; ++i) {
    int s = images[i];
    q(std::abs(s) - 1, i) = s > 0 ? 1 : -1;
  }
  return q;
}

RMatrix block_diagonal(const RMatrix& b, int copies) {
  std::size_t k = b.rows();
  RMatrix m(k * copies, k * copies);
  for (int c = 0; c < copies; ++c) m.set_block(c * k, c * k, b);
  return m;
}

Form combine(const std::array<Rational, 3>& w, const HyperkahlerModel& m) {
  return m.omega_I * Complex(w[0]) + m.omega_J * Complex(w[1]) + m.omega_K * Complex(w[2]);
}

}  // namespace

Form kahler_form(const RMatrix& a) {
  int d = static_cast<int>(a.rows());
  Form w(d);
  for (int i = 0; i < d; ++i)
    for (int k = i + 1; k < d; ++k) w.add_term((Mask{1} << i) | (Mask{1} << k), Complex(a(k, i)));
  return w;
}

bool is_type_20(const Form& sigma, const RMatrix& complex_structure) {
  int d = sigma.dim();
  CMatrix s(d, d);
  for (const auto& [mask, c] : sigma.terms()) {
    if (grade_of(mask) != 2) return false;
    int i = std::countr_zero(mask);
    int k = std::countr_zero(mask & (mask - 1));
    s(i, k) = c;
    s(k, i) = -c;
  }
  return complexify(complex_structure).transpose() * s == s * Complex::i();
}

HyperkahlerModel build_model(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("build_model: n must be 1, 2 or 3");
  HyperkahlerModel m;
  m.n = n;
  m.dim = 4 * n;
  // Left multiplication by i, j, k on H with basis (1, i, j, k).
  m.I = block_diagonal(quaternion_block({2, -1, 4, -3}), n);
  m.J = block_diagonal(quaternion_block({3, -4, -1, 2}), n);
  m.K = block_diagonal(quaternion_block({4, 3, -2, -1}), n);

  RMatrix one = RMatrix::identity(m.dim);
  if (m.I * m.I != -one || m.J * m.J != -one || m.K * m.K != -one || m.I * m.J != m.K ||
      m.J * m.I != -m.K || m.J * m.K != m.I || m.K * m.I != m.J) {
    throw std::logic_error("quaternion relations fail");
  }

  m.omega_I = kahler_form(m.I);
  m.omega_J = kahler_form(m.J);
  m.omega_K = kahler_form(m.K);
  m.sigma = m.omega_J + m.omega_K * Complex::i();
  m.sigma_bar = m.omega_J - m.omega_K * Complex::i();
  m.vol = Form::basis(m.dim, (Mask{1} << m.dim) - 1, Complex(1));

  if (!is_type_20(m.sigma, m.I)) throw std::logic_error("sigma is not of type (2,0) for I");
  if (wedge_power(m.omega_I, 2 * n) != m.vol * Complex(factorial(2 * n))) {
    throw std::logic_error("omega_I is degenerate");
  }
  return m;
}

RMatrix I_eta(const HyperkahlerModel& m, const Complex& eta) {
  Rational r = eta.norm2();
  Rational den = 1 + r;
  return m.I * Rational((1 - r) / den) + m.J * Rational(2 * eta.re() / den) + m.K * Rational(2 * eta.im() / den);
}

RMatrix I_eta(const HyperkahlerModel& m, const CP1Point& eta) {
  if (eta.chart == 0) return I_eta(m, eta.coord);
  const Complex& w = eta.coord;
  Rational r = w.norm2();
  Rational den = 1 + r;
  return m.I * Rational((r - 1) / den) + m.J * Rational(2 * w.re() / den) + m.K * Rational(-2 * w.im() / den);
}

Form sigma_eta(const HyperkahlerModel& m, const Complex& eta) {
  return m.sigma - m.omega_I * (Complex(2) * eta) - m.sigma_bar * (eta * eta);
}

Form sigma_eta(const HyperkahlerModel& m, const CP1Point& eta) {
  if (eta.chart == 0) return sigma_eta(m, eta.coord);
  // w^2 sigma_{1/w}, the representative regular at infinity.
  const Complex& w = eta.coord;
  return m.sigma * (w * w) - m.omega_I * (Complex(2) * w) - m.sigma_bar;
}

Form sigma_eta_prime(const HyperkahlerModel& m, const Complex& eta) {
  return sigma_eta(m, eta) * Complex(Rational(1) / (1 + eta.norm2()));
}

RMatrix so3_matrix(const Complex& eta) {
  const Rational& x = eta.re();
  const Rational& y = eta.im();
  Rational s = 1 / (1 + x * x + y * y);
  RMatrix r(3, 3);
  r(0, 0) = 1 - x * x - y * y;
  r(0, 1) = 2 * x;
  r(0, 2) = 2 * y;
  r(1, 0) = -2 * x;
  r(1, 1) = 1 - x * x + y * y;
  r(1, 2) = -2 * x * y;
  r(2, 0) = -2 * y;
  r(2, 1) = -2 * x * y;
  r(2, 2) = 1 + x * x - y * y;
  return r * s;
}

Form omega_eta(const HyperkahlerModel& m, const Complex& eta) {
  RMatrix r = so3_matrix(eta);
  return combine({r(0, 0), r(0, 1), r(0, 2)}, m);
}

Form omega_eta(const HyperkahlerModel& m, const CP1Point& eta) {
  if (eta.chart == 0) return omega_eta(m, eta.coord);
  return kahler_form(I_eta(m, eta));
}

RMatrix generalized_metric(const HyperkahlerModel& m) {
  return RMatrix::identity(2 * m.dim) * Rational(1, 2);
}

}  // namespace gctk
