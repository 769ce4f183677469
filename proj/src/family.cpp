#include "gctk/family.hpp"

#include <sstream>

#include "gctk/parallel.hpp"

namespace gctk {

PolyMultivector lift(const Form& f) {
  return f.map_coeffs([](const Complex& c) { return Polynomial(c); });
}

std::vector<PolyMultivector> cleared_exp_terms(const PolyMultivector& numerator, const Polynomial& denominator,
                                               int n) {
  std::vector<PolyMultivector> terms;
  PolyMultivector power = PolyMultivector::scalar(numerator.dim(), Polynomial(1));
  for (int j = 0; j <= 2 * n; ++j) {
    if (j > 0) power = wedge(power, numerator);
    PolyMultivector term = power * Complex(Rational(1) / factorial(j));
    if (j <= n) {
      term = term.scaled(denominator.pow(n - j));
    } else {
      Polynomial pole = denominator.pow(j - n);
      PolyMultivector divided(term.dim());
      for (const auto& [mask, c] : term.terms()) {
        auto q = try_divide(c, pole);
        if (!q) throw std::logic_error("non-cancelling pole in the spinor expansion");
        divided.add_term(mask, *q);
      }
      term = std::move(divided);
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

PolyMultivector cleared_exp(const PolyMultivector& numerator, const Polynomial& denominator, int n) {
  PolyMultivector sum(numerator.dim());
  for (const auto& t : cleared_exp_terms(numerator, denominator, n)) sum += t;
  return sum;
}

Form cleared_exp(const Form& numerator, const Complex& denominator, int n) {
  Form sum(numerator.dim());
  Form power = Form::scalar(numerator.dim(), Complex(1));
  if (!numerator.coeff(0).is_zero()) throw std::invalid_argument("cleared_exp: numerator has a scalar part");
  // the series stops once the wedge powers vanish
  for (int j = 0;; ++j) {
    if (j > 0) power = wedge(power, numerator);
    if (power.is_zero()) break;
    Complex scale = Complex(Rational(1) / factorial(j));
    if (denominator.is_zero()) {
      if (j > n) throw std::logic_error("non-cancelling pole in the spinor expansion");
      if (j < n) continue;
    } else if (j <= n) {
      scale *= pow(denominator, n - j);
    } else {
      scale /= pow(denominator, j - n);
    }
    sum += power * scale;
  }
  return sum;
}

PolyMultivector family_numerator(const HyperkahlerModel& m) {
  Polynomial a = Polynomial::variable(vars::alpha);
  Polynomial b = Polynomial::variable(vars::beta);
  return lift(m.sigma) - lift(m.omega_I).scaled(a + b) - lift(m.sigma_bar).scaled(a * b);
}

namespace {

Polynomial complex_var(const std::string& re, const std::string& im, int im_sign = 1) {
  return Polynomial::variable(re) + Polynomial::variable(im) * Complex(0, im_sign);
}

PolyMultivector substitute(const PolyMultivector& f, const std::map<std::string, Polynomial>& values) {
  return f.map_coeffs([&](const Polynomial& p) { return p.substitute(values); });
}

PolyMultivector reverse_chart(const PolyMultivector& f, const std::string& var, int n) {
  return f.map_coeffs([&](const Polynomial& p) { return p.reverse_degree(var, n); });
}

Polynomial family_denominator() {
  return (Polynomial::variable(vars::alpha) - Polynomial::variable(vars::beta)) * Complex::i();
}

}  // namespace

PolyMultivector realify(const PolyMultivector& f) {
  return substitute(f, {{vars::alpha, complex_var(vars::a1, vars::a2)}, {vars::beta, complex_var(vars::b1, vars::b2)}});
}

SpinorFamily::SpinorFamily(const HyperkahlerModel& m) : model_(m) {
  int n = m.n;
  charts_[0][0] = cleared_exp(family_numerator(m), family_denominator(), n);
  charts_[1][0] = reverse_chart(charts_[0][0], vars::alpha, n);
  charts_[0][1] = reverse_chart(charts_[0][0], vars::beta, n);
  charts_[1][1] = reverse_chart(charts_[1][0], vars::beta, n);
}

Form SpinorFamily::at(const CP1Point& alpha, const CP1Point& beta) const {
  return chart(alpha.chart, beta.chart).map_coeffs([&](const Polynomial& p) {
    return p.evaluate({{vars::alpha, alpha.coord}, {vars::beta, beta.coord}});
  });
}

Form phi_zeta(const HyperkahlerModel& m, const Complex& zeta) {
  return cleared_exp(m.sigma + m.sigma_bar * (zeta * zeta), Complex(0, 2) * zeta, m.n);
}

FamilyPoint f_map(const TwistorFiberPoint& p) {
  auto ratio = [](const Complex& num, const Complex& den) {
    return den.is_zero() ? CP1Point::infinity() : CP1Point::affine(num / den);
  };
  Complex eb = p.eta.conj();
  return {ratio(p.zeta + p.eta, Complex(1) - eb * p.zeta), ratio(p.eta - p.zeta, eb * p.zeta + Complex(1))};
}

CMatrix psu2_matrix(const Complex& eta) {
  CMatrix a(2, 2);
  a(0, 0) = Complex(1);
  a(0, 1) = eta;
  a(1, 0) = -eta.conj();
  a(1, 1) = Complex(1);
  return a;
}

CP1Point mobius(const CMatrix& a, const CP1Point& z) {
  auto v = z.affine_value();
  Complex num = v ? a(0, 0) * *v + a(0, 1) : a(0, 0);
  Complex den = v ? a(1, 0) * *v + a(1, 1) : a(1, 0);
  if (den.is_zero()) return CP1Point::infinity();
  return CP1Point::affine(num / den);
}

std::vector<Rational> sphere_point(const CP1Point& eta) {
  const Complex& z = eta.coord;
  Rational r = z.norm2();
  Rational s = 1 / (1 + r);
  if (eta.chart == 0) return {(1 - r) * s, 2 * z.re() * s, 2 * z.im() * s};
  return {(r - 1) * s, 2 * z.re() * s, -2 * z.im() * s};
}

Form phi_eta_zeta(const HyperkahlerModel& m, const Complex& eta, const Complex& zeta) {
  Form s = sigma_eta_prime(m, eta);
  return cleared_exp(s + conj(s) * (zeta * zeta), Complex(0, 2) * zeta, m.n);
}

PolyMultivector phi_alpha_beta_symbolic(const HyperkahlerModel& m) {
  return realify(cleared_exp(family_numerator(m), family_denominator(), m.n));
}

Form phi_alpha_beta(const HyperkahlerModel& m, const FamilyPoint& p) { return SpinorFamily(m).at(p); }

Form phi_alpha_beta_direct(const HyperkahlerModel& m, const Complex& alpha, const Complex& beta) {
  Form num = m.sigma - m.omega_I * (alpha + beta) - m.sigma_bar * (alpha * beta);
  return cleared_exp(num, Complex::i() * (alpha - beta), m.n);
}

template <>
Form quadric_spinor<Complex>(const HyperkahlerModel& m, const Complex& x, const Complex& y, const Complex& z,
                             const Complex& u) {
  if (m.dim != 4) throw std::invalid_argument("quadric_spinor needs the four-dimensional model");
  Form one_minus_vol = Form::scalar(4, Complex(1)) - m.vol;
  return m.omega_I * x + m.omega_J * y + m.omega_K * z + one_minus_vol * u;
}

template <>
PolyMultivector quadric_spinor<Polynomial>(const HyperkahlerModel& m, const Polynomial& x, const Polynomial& y,
                                           const Polynomial& z, const Polynomial& u) {
  if (m.dim != 4) throw std::invalid_argument("quadric_spinor needs the four-dimensional model");
  Form one_minus_vol = Form::scalar(4, Complex(1)) - m.vol;
  return lift(m.omega_I).scaled(x) + lift(m.omega_J).scaled(y) + lift(m.omega_K).scaled(z) +
         lift(one_minus_vol).scaled(u);
}

GeneralizedPair bi_hermitian_pair(const RMatrix& i_plus, const RMatrix& omega_plus, const RMatrix& i_minus,
                                  const RMatrix& omega_minus) {
  std::size_t d = i_plus.rows();
  RMatrix one = RMatrix::identity(d);
  if (i_plus * i_plus != -one || i_minus * i_minus != -one) {
    throw std::invalid_argument("bi_hermitian_pair: I^2 != -1");
  }
  if (omega_plus.transpose() != -omega_plus || omega_minus.transpose() != -omega_minus) {
    throw std::invalid_argument("bi_hermitian_pair: Hermitian forms must be skew");
  }
  RMatrix wp_inv = inverse(omega_plus);
  RMatrix wm_inv = inverse(omega_minus);
  Rational half(1, 2);
  GE j = half * GE::from_blocks(-(i_plus + i_minus), -(wp_inv - wm_inv), omega_plus - omega_minus,
                                i_plus.transpose() + i_minus.transpose());
  GE jp = half * GE::from_blocks(-(i_plus - i_minus), -(wp_inv + wm_inv), omega_plus + omega_minus,
                                 i_plus.transpose() - i_minus.transpose());
  return {j, jp};
}

GeneralizedPair bi_hermitian_at(const HyperkahlerModel& m, const CP1Point& i_plus, const CP1Point& i_minus) {
  RMatrix ip = I_eta(m, i_plus);
  RMatrix im = I_eta(m, i_minus);
  return bi_hermitian_pair(ip, two_form_matrix(kahler_form(ip)), im, two_form_matrix(kahler_form(im)));
}

GeneralizedPair family_pair(const SpinorFamily& fam, const FamilyPoint& p) {
  GE j = gacs_from_spinor(fam.at(p));
  // The spinor's structure is the bi-Hermitian one with I_+ = I_beta and
  // I_- = I_alpha; the partner is taken with the same labelling.
  GE jp = bi_hermitian_at(fam.model(), p.beta, p.alpha).j_prime;
  return {j, jp};
}

SymplecticData symplectic_data(const HyperkahlerModel& m, const Complex& alpha, const Complex& beta) {
  if (alpha == beta) throw std::invalid_argument("symplectic_data: alpha == beta");
  Form num = m.sigma - m.omega_I * (alpha + beta) - m.sigma_bar * (alpha * beta);
  Form f = num * (Complex::i() * (alpha - beta)).inverse();
  return {two_form_matrix(real_part(f)), two_form_matrix(imag_part(f))};
}

PolyMultivector phi_prime_symbolic(const HyperkahlerModel& m) {
  PolyMultivector hol = cleared_exp(family_numerator(m), family_denominator(), m.n);
  return substitute(hol, {{vars::alpha, complex_var(vars::a1, vars::a2)},
                          {vars::beta, -complex_var(vars::t1, vars::t2, -1)}});
}

Form phi_prime(const SpinorFamily& fam, const CP1Point& alpha, const CP1Point& beta_tilde) {
  return fam.at(alpha, beta_tilde.neg_conj());
}

std::vector<CP1Point> type_map_grid(int grid, int chart) {
  if (grid < 2) throw std::invalid_argument("type_map: grid must be at least 2");
  std::vector<CP1Point> pts;
  for (int k = 0; k < grid; ++k) {
    Rational t(k, grid - 1);
    t.canonicalize();
    pts.push_back(CP1Point::in_chart(Complex(t, t / 2), chart));
  }
  return pts;
}

std::vector<TypeMapRow> type_map(const HyperkahlerModel& m, int grid, bool fiber) {
  SpinorFamily fam(m);
  std::vector<TypeMapRow> rows;
  for (int ca = 0; ca < 2; ++ca)
    for (int cb = 0; cb < 2; ++cb)
      for (const auto& a : type_map_grid(grid, ca))
        for (const auto& b : type_map_grid(grid, cb)) rows.push_back({a, b, 0});
  parallel_for(rows.size(), [&](std::size_t k) {
    rows[k].type = type_of(gacs_from_spinor(fam.at(rows[k].alpha, rows[k].beta))) + (fiber ? 0 : 2);
  });
  return rows;
}

std::string type_map_csv(const std::vector<TypeMapRow>& rows) {
  std::ostringstream out;
  out << "alpha_re,alpha_im,beta_re,beta_im,chart_a,chart_b,type\n";
  for (const auto& r : rows) {
    out << rational_str(r.alpha.coord.re()) << ',' << rational_str(r.alpha.coord.im()) << ','
        << rational_str(r.beta.coord.re()) << ',' << rational_str(r.beta.coord.im()) << ',' << r.alpha.chart << ','
        << r.beta.chart << ',' << r.type << '\n';
  }
  return out.str();
}

bool real_structure_identity(const SpinorFamily& fam, const Complex& alpha, const Complex& beta) {
  if (alpha.is_zero() || beta.is_zero()) throw std::invalid_argument("real structure samples must be nonzero");
  int n = fam.n();
  Complex ab = alpha.conj(), bb = beta.conj();
  Form lhs = fam.at(CP1Point::affine(-ab.inverse()), CP1Point::affine(-bb.inverse()));
  Complex scale = Complex(n % 2 ? -1 : 1) / (pow(ab, n) * pow(bb, n));
  return lhs == conj(fam.at(CP1Point::affine(alpha), CP1Point::affine(beta))) * scale;
}

bool sigma_real_structure_identity(const HyperkahlerModel& m, const Complex& eta) {
  if (eta.is_zero()) throw std::invalid_argument("sigma real structure needs eta != 0");
  Complex eb = eta.conj();
  return sigma_eta(m, -eb.inverse()) == conj(sigma_eta(m, eta)) * (-(eb * eb).inverse());
}

bool real_structure_check(const HyperkahlerModel& m, const std::vector<std::pair<Complex, Complex>>& samples) {
  SpinorFamily fam(m);
  for (const auto& [a, b] : samples) {
    if (!real_structure_identity(fam, a, b)) return false;
    if (!sigma_real_structure_identity(m, a) || !sigma_real_structure_identity(m, b)) return false;
  }
  return true;
}

}  // namespace gctk
