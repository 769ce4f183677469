#include "gctk/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <random>

#include <Eigen/Eigenvalues>

#include "gctk/parallel.hpp"
#include "gctk/twistor.hpp"
#include "gctk/version.hpp"

namespace gctk {

using nlohmann::ordered_json;

namespace {

// Deterministic sample source; each check draws from its own stream so
// adding a check never shifts the samples of another.
class Sampler {
 public:
  Sampler(std::uint64_t seed, const std::string& id) {
    std::vector<std::uint32_t> key(id.begin(), id.end());
    key.push_back(static_cast<std::uint32_t>(seed));
    key.push_back(static_cast<std::uint32_t>(seed >> 32));
    std::seed_seq seq(key.begin(), key.end());
    rng_.seed(seq);
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long bound = 9) {
    Rational r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }
  Complex complex() { return Complex(rational(), rational()); }
  Complex nonzero() {
    for (;;) {
      Complex z = complex();
      if (!z.is_zero()) return z;
    }
  }
  // Distinct pair; every fifth pair sits close to the diagonal.
  std::pair<Complex, Complex> pair(int k) {
    Complex a = complex();
    if (k % 5 == 4) return {a, a + Complex(Rational(1, 97), Rational(-1, 89))};
    for (;;) {
      Complex b = complex();
      if (b != a) return {a, b};
    }
  }

 private:
  std::mt19937_64 rng_;
};

struct Outcome {
  std::string status = "pass";
  bool exact = true;
  double value = 0.0;
  std::size_t mismatches = 0;
  ordered_json parameters = ordered_json::object();
  std::string detail;
};

Outcome from_count(std::size_t mismatches, ordered_json params = ordered_json::object()) {
  Outcome o;
  o.mismatches = mismatches;
  o.status = mismatches ? "fail" : "pass";
  o.parameters = std::move(params);
  return o;
}

Outcome from_bool(bool ok, ordered_json params = ordered_json::object()) { return from_count(ok ? 0 : 1, params); }

Outcome skipped(const std::string& why) {
  Outcome o;
  o.status = "skip";
  o.detail = why;
  return o;
}

// Runs fn on 0..count-1 concurrently and counts false results.
std::size_t count_failures(std::size_t count, const std::function<bool(std::size_t)>& fn) {
  std::vector<char> ok(count, 0);
  parallel_for(count, [&](std::size_t k) { ok[k] = fn(k) ? 1 : 0; });
  std::size_t bad = 0;
  for (char c : ok) bad += c ? 0 : 1;
  return bad;
}

struct Context {
  VerifyOptions opts;
  HyperkahlerModel model;
  SpinorFamily family;
  std::size_t samples;
  std::size_t small;  // capped count for symbolic or high-dimensional work

  Context(const VerifyOptions& o)
      : opts(o),
        model(build_model(o.n)),
        family(model),
        samples(static_cast<std::size_t>(o.samples)),
        small(std::min<std::size_t>(static_cast<std::size_t>(o.samples), 20)) {}

  Sampler sampler(const std::string& id) const { return Sampler(opts.seed, id); }
  int n() const { return opts.n; }
};

FamilyPoint affine_point(const Complex& a, const Complex& b) { return {CP1Point::affine(a), CP1Point::affine(b)}; }

Polynomial random_poly(Sampler& s, const std::vector<std::string>& vars, int degree, int terms) {
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Polynomial::Exponents e(vars.size(), 0);
    int left = static_cast<int>(s.integer(0, degree));
    while (left-- > 0) ++e[static_cast<std::size_t>(s.integer(0, static_cast<long>(vars.size()) - 1))];
    p += Polynomial::monomial(vars, e, Complex(s.rational(5)));
  }
  return p;
}

PolySection random_section(Sampler& s, const std::vector<std::string>& coords) {
  PolySection e(coords);
  for (int i = 0; i < e.dim(); ++i) {
    e.tangent[i] = random_poly(s, coords, 2, 2);
    e.cotangent[i] = random_poly(s, coords, 2, 2);
  }
  return e;
}

PolyForm random_polyform(Sampler& s, const std::vector<std::string>& coords, int terms) {
  int dim = static_cast<int>(coords.size());
  PolyMultivector f(dim);
  for (int t = 0; t < terms; ++t) {
    Mask m = static_cast<Mask>(s.integer(0, (1L << dim) - 1));
    f.add_term(m, random_poly(s, coords, 2, 2));
  }
  return PolyForm(coords, f);
}

template <class S>
Multivector<S> random_form(Sampler& s, int dim, int grade, int terms) {
  Multivector<S> f(dim);
  for (int t = 0; t < terms; ++t) {
    Mask m = 0;
    while (grade_of(m) < grade) m |= Mask{1} << s.integer(0, dim - 1);
    f.add_term(m, S(s.complex()));
  }
  return f;
}

// ---- scalars and polynomials ----

Outcome scalars_field_axioms(const Context& c) {
  Sampler s = c.sampler("scalars.field_axioms");
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.samples; ++k) {
    Complex a = s.complex(), b = s.complex(), d = s.nonzero();
    if ((a + b) * d != a * d + b * d) ++bad;
    if ((a * b) * d != a * (b * d)) ++bad;
    if (d * d.inverse() != Complex(1)) ++bad;
    if (parse_complex(a.str()) != a) ++bad;
  }
  return from_count(bad, {{"samples", c.samples}});
}

Outcome polynomial_ring_axioms(const Context& c) {
  Sampler s = c.sampler("polynomial.ring_axioms");
  std::vector<std::string> vars{"u", "v", "w"};
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    Polynomial p = random_poly(s, vars, 3, 4), q = random_poly(s, vars, 2, 3), r = random_poly(s, vars, 3, 3);
    if ((p * q) * r != p * (q * r) || p * (q + r) != p * q + p * r) ++bad;
    for (const auto& x : vars)
      for (const auto& y : vars)
        if (p.derivative(x).derivative(y) != p.derivative(y).derivative(x)) ++bad;
    if (!q.is_zero() && poly_divide_exact(q * r, q) != r) ++bad;
  }
  return from_count(bad, {{"samples", c.small}});
}

// ---- multivectors ----

Outcome multivector_wedge(const Context& c) {
  Sampler s = c.sampler("multivector.wedge");
  int dim = c.model.dim;
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    int ga = static_cast<int>(s.integer(0, 3)), gb = static_cast<int>(s.integer(0, 3));
    auto a = random_form<Complex>(s, dim, ga, 3);
    auto b = random_form<Complex>(s, dim, gb, 3);
    auto e = random_form<Complex>(s, dim, 1, 2);
    if (wedge(wedge(a, b), e) != wedge(a, wedge(b, e))) ++bad;
    if (wedge(a, b) != wedge(b, a) * Complex((ga * gb) % 2 ? -1 : 1)) ++bad;
  }
  return from_count(bad, {{"samples", c.small}, {"dim", dim}});
}

Outcome multivector_interior(const Context& c) {
  Sampler s = c.sampler("multivector.interior_derivation");
  int dim = c.model.dim;
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    int ga = static_cast<int>(s.integer(0, 3));
    auto a = random_form<Complex>(s, dim, ga, 3);
    auto b = random_form<Complex>(s, dim, static_cast<int>(s.integer(0, 3)), 3);
    std::vector<Complex> x(dim);
    for (auto& xi : x) xi = s.complex();
    auto lhs = interior(x, wedge(a, b));
    auto rhs = wedge(interior(x, a), b) + wedge(a, interior(x, b)) * Complex(ga % 2 ? -1 : 1);
    if (lhs != rhs) ++bad;
  }
  return from_count(bad, {{"samples", c.small}, {"dim", dim}});
}

Outcome multivector_clifford(const Context& c) {
  Sampler s = c.sampler("multivector.clifford_relation");
  int dim = c.model.dim;
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    EVector<Complex> e(dim);
    for (int i = 0; i < dim; ++i) {
      e.tangent[i] = s.complex();
      e.cotangent[i] = s.complex();
    }
    auto a = random_form<Complex>(s, dim, static_cast<int>(s.integer(0, 4)), 4);
    if (clifford_act(e, clifford_act(e, a)) != a * inner_product(e, e)) ++bad;
  }
  return from_count(bad, {{"samples", c.small}, {"dim", dim}});
}

Outcome multivector_mukai_symmetry(const Context& c) {
  Sampler s = c.sampler("multivector.mukai_symmetry");
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    Form a = random_form<Complex>(s, 4, 0, 1) + random_form<Complex>(s, 4, 2, 3) + random_form<Complex>(s, 4, 4, 1);
    Form b = random_form<Complex>(s, 4, 0, 1) + random_form<Complex>(s, 4, 2, 3) + random_form<Complex>(s, 4, 4, 1);
    if (mukai_pair(a, b) != mukai_pair(b, a)) ++bad;
  }
  return from_count(bad, {{"samples", c.small}});
}

// ---- generalized structures on E ----

std::vector<GE> structure_samples(const Context& c, Sampler& s, std::size_t count) {
  const auto& m = c.model;
  std::vector<GE> out{make_JI(m.I), make_Jomega(two_form_matrix(m.omega_I)),
                      bfield_transform(make_JI(m.J), two_form_matrix(m.omega_K))};
  std::vector<FamilyPoint> pts;
  for (std::size_t k = out.size(); k < count; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    pts.push_back(affine_point(a, k % 7 == 3 ? a : b));
  }
  std::vector<GE> fam(pts.size());
  parallel_for(pts.size(), [&](std::size_t k) { fam[k] = gacs_from_spinor(c.family.at(pts[k])); });
  out.insert(out.end(), fam.begin(), fam.end());
  return out;
}

Outcome double_space_gacs_axioms(const Context& c) {
  Sampler s = c.sampler("double_space.gacs_axioms");
  auto js = structure_samples(c, s, c.small);
  std::size_t bad = count_failures(js.size(), [&](std::size_t k) {
    DiracBasis l = dirac_of(js[k]);
    return is_gacs(js[k]) && is_isotropic(l) && l.size() == c.model.dim;
  });
  return from_count(bad, {{"samples", js.size()}});
}

Outcome double_space_dictionary(const Context& c) {
  Sampler s = c.sampler("double_space.dictionary");
  auto js = structure_samples(c, s, c.small);
  std::size_t bad = count_failures(js.size(), [&](std::size_t k) {
    Form phi = spinor_from_gacs(js[k]);
    return same_span(annihilator(phi), dirac_of(js[k])) && gacs_from_spinor(phi) == js[k];
  });
  return from_count(bad, {{"samples", js.size()}});
}

Outcome double_space_projective(const Context& c) {
  Sampler s = c.sampler("double_space.projective_invariance");
  std::vector<std::pair<FamilyPoint, Complex>> pts;
  for (std::size_t k = 0; k < c.small; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    pts.push_back({affine_point(a, b), s.nonzero()});
  }
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    Form phi = c.family.at(pts[k].first);
    return gacs_from_spinor(phi * pts[k].second) == gacs_from_spinor(phi);
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome double_space_type_parity(const Context& c) {
  Sampler s = c.sampler("double_space.type_parity");
  auto js = structure_samples(c, s, c.small);
  std::vector<int> types(js.size());
  parallel_for(js.size(), [&](std::size_t k) { types[k] = type_of(js[k]); });
  std::size_t bad = 0;
  for (int t : types) bad += (t % 2) != (types.front() % 2) ? 1 : 0;
  return from_count(bad, {{"samples", js.size()}});
}

// ---- Courant calculus ----

Outcome courant_d_squared(const Context& c) {
  Sampler s = c.sampler("courant.d_squared");
  auto coords = coordinate_names(4);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k)
    if (!ext_d(ext_d(random_polyform(s, coords, 5))).is_zero()) ++bad;
  return from_count(bad, {{"samples", c.small}, {"degree", 2}});
}

Outcome courant_leibniz(const Context& c) {
  Sampler s = c.sampler("courant.leibniz");
  auto coords = coordinate_names(4);
  std::vector<std::array<PolySection, 3>> trials;
  for (std::size_t k = 0; k < c.small; ++k)
    trials.push_back({random_section(s, coords), random_section(s, coords), random_section(s, coords)});
  std::size_t bad = count_failures(trials.size(), [&](std::size_t k) {
    const auto& [a, b, e] = trials[k];
    return dorfman(a, dorfman(b, e)) == dorfman(dorfman(a, b), e) + dorfman(b, dorfman(a, e));
  });
  return from_count(bad, {{"samples", trials.size()}, {"degree", 2}});
}

Outcome courant_anchor(const Context& c) {
  Sampler s = c.sampler("courant.self_bracket");
  auto coords = coordinate_names(4);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    PolySection e = random_section(s, coords);
    if (!(dorfman(e, e) == differential(coords, pairing(e, e)))) ++bad;
    // an isotropic section: xi = f (X_j dx^i - X_i dx^j)
    PolySection iso(coords);
    iso.tangent = e.tangent;
    Polynomial f = random_poly(s, coords, 1, 2);
    iso.cotangent[0] = f * e.tangent[1];
    iso.cotangent[1] = -(f * e.tangent[0]);
    if (!pairing(iso, iso).is_zero() || !(dorfman(iso, iso) == PolySection(coords))) ++bad;
  }
  return from_count(bad, {{"samples", c.small}, {"degree", 2}});
}

Outcome courant_derived_bracket(const Context& c) {
  Sampler s = c.sampler("courant.derived_bracket");
  auto coords = coordinate_names(4);
  std::vector<std::pair<PolySection, PolySection>> pairs;
  std::vector<std::vector<PolyForm>> forms;
  for (std::size_t k = 0; k < c.small; ++k) {
    pairs.push_back({random_section(s, coords), random_section(s, coords)});
    forms.push_back({random_polyform(s, coords, 3)});
  }
  std::size_t bad = count_failures(pairs.size(), [&](std::size_t k) {
    return derived_bracket_check(pairs[k].first, pairs[k].second, forms[k]);
  });
  return from_count(bad, {{"samples", pairs.size()}, {"degree", 2}});
}

Outcome courant_integrability(const Context& c) {
  const auto& m = c.model;
  auto coords = coordinate_names(m.dim);
  std::vector<std::map<std::string, Complex>> pts;
  Sampler s = c.sampler("courant.spinor_integrability");
  for (int k = 0; k < 3; ++k) {
    std::map<std::string, Complex> p;
    for (const auto& x : coords) p[x] = Complex(s.rational());
    pts.push_back(p);
  }
  bool ok = spinor_integrability(PolyForm::constant(coords, wedge_power(m.sigma, m.n)), pts);
  ok = ok && spinor_integrability(PolyForm::constant(coords, exp_even(m.omega_I * Complex::i())), pts);
  // (1 + x2^2) dx0^dx1 is not closed, so exp(i omega) must fail.
  PolyMultivector omega = lift(m.omega_I);
  Polynomial bump = Polynomial::variable("x2") * Polynomial::variable("x2");
  omega.add_term(0x3, bump);
  ok = ok && !spinor_integrability(PolyForm(coords, exp_even(omega * Complex::i())), pts);
  ok = ok && involutivity_check(dirac_of(make_JI(m.I)));
  return from_bool(ok, {{"points", pts.size()}});
}

// ---- hyperkahler model ----

Outcome hyperkahler_quaternions(const Context& c) {
  const auto& m = c.model;
  RMatrix one = RMatrix::identity(m.dim);
  bool ok = m.I * m.I == -one && m.J * m.J == -one && m.K * m.K == -one && m.I * m.J == m.K &&
            m.J * m.I == -m.K && m.J * m.K == m.I && m.K * m.I == m.J;
  ok = ok && is_type_20(m.sigma, m.I) && generalized_metric(m).transpose() == generalized_metric(m);
  if (m.n == 1) ok = ok && wedge(m.sigma, m.sigma_bar) == wedge(m.omega_I, m.omega_I) * Complex(2);
  return from_bool(ok);
}

Outcome hyperkahler_i_eta(const Context& c) {
  Sampler s = c.sampler("hyperkahler.i_eta");
  const auto& m = c.model;
  RMatrix one = RMatrix::identity(m.dim);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.samples; ++k) {
    RMatrix i = I_eta(m, s.complex());
    if (i * i != -one || i.transpose() * i != one) ++bad;
  }
  return from_count(bad, {{"samples", c.samples}});
}

Outcome hyperkahler_sigma_eta(const Context& c) {
  Sampler s = c.sampler("hyperkahler.sigma_eta");
  const auto& m = c.model;
  std::vector<Complex> etas;
  for (std::size_t k = 0; k < c.small; ++k) etas.push_back(s.complex());
  std::size_t bad = count_failures(etas.size(), [&](std::size_t k) {
    const Complex& eta = etas[k];
    Form se = sigma_eta(m, eta);
    Form top = wedge_power(se, m.n);
    Form tau = m.omega_I + m.sigma_bar * eta;
    return is_pure(top) && same_span(annihilator(top), dirac_of(make_JI(I_eta(m, eta)))) &&
           wedge(top, se).is_zero() && wedge(top, tau).is_zero() && is_type_20(se, I_eta(m, eta));
  });
  return from_count(bad, {{"samples", etas.size()}});
}

Outcome hyperkahler_so3(const Context& c) {
  Sampler s = c.sampler("hyperkahler.so3");
  const auto& m = c.model;
  RMatrix one = RMatrix::identity(3);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.samples; ++k) {
    Complex eta = s.complex();
    RMatrix r = so3_matrix(eta);
    Rational det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) -
                   r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                   r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
    if (r.transpose() * r != one || det != 1) ++bad;
    Form sp = sigma_eta_prime(m, eta);
    std::array<Form, 3> rotated{omega_eta(m, eta), real_part(sp), imag_part(sp)};
    std::array<const Form*, 3> base{&m.omega_I, &m.omega_J, &m.omega_K};
    for (int row = 0; row < 3; ++row) {
      Form sum(m.dim);
      for (int col = 0; col < 3; ++col) sum += *base[col] * Complex(r(row, col));
      if (sum != rotated[row]) ++bad;
    }
    // PSU(2) acts on the sphere through the transpose of the same matrix.
    CP1Point z = CP1Point::affine(s.complex());
    auto lhs = sphere_point(mobius(psu2_matrix(eta), z));
    auto p = sphere_point(z);
    RMatrix rt = r.transpose();
    for (int i = 0; i < 3; ++i) {
      Rational v = 0;
      for (int j = 0; j < 3; ++j) v += rt(i, j) * p[j];
      if (v != lhs[i]) ++bad;
    }
    if (kahler_form(I_eta(m, eta)) != omega_eta(m, eta)) ++bad;
  }
  return from_count(bad, {{"samples", c.samples}});
}

Outcome hyperkahler_metric_compat(const Context& c) {
  Sampler s = c.sampler("hyperkahler.metric_compatibility");
  RMatrix g = generalized_metric(c.model);
  auto js = structure_samples(c, s, c.small);
  std::size_t bad = 0;
  for (std::size_t k = 0; k < js.size(); ++k) {
    if (k == 2) continue;  // the B-field transformed sample does not preserve G
    if (js[k].matrix().transpose() * g * js[k].matrix() != g) ++bad;
  }
  return from_count(bad, {{"samples", js.size()}});
}

// ---- the family ----

Outcome family_n1_expansion(const Context& c) {
  if (c.n() != 1) return skipped("n = 1 only");
  const auto& m = c.model;
  Polynomial a = Polynomial::variable(vars::alpha), b = Polynomial::variable(vars::beta);
  PolyMultivector expected = lift(m.sigma) - lift(m.omega_I).scaled(a + b) +
                             lift(Form::scalar(4, Complex(1)) - m.vol).scaled((a - b) * Complex::i()) -
                             lift(m.sigma_bar).scaled(a * b);
  PolyMultivector quadric = quadric_spinor<Polynomial>(m, -(a + b), Polynomial(1) - a * b,
                                                       (Polynomial(1) + a * b) * Complex::i(), (a - b) * Complex::i());
  return from_bool(c.family.holomorphic() == expected && quadric == expected);
}

Outcome family_bidegree(const Context& c) {
  bool ok = true;
  for (const auto& [mask, p] : c.family.holomorphic().terms())
    ok = ok && p.degree_in(vars::alpha) <= c.n() && p.degree_in(vars::beta) <= c.n();
  for (const auto& [mask, p] : phi_alpha_beta_symbolic(c.model).terms())
    ok = ok && p.degree_in({vars::a1, vars::a2}) <= c.n() && p.degree_in({vars::b1, vars::b2}) <= c.n();
  return from_bool(ok);
}

Outcome family_holomorphy(const Context& c) {
  std::size_t bad = 0;
  for (const auto& [mask, p] : phi_alpha_beta_symbolic(c.model).terms()) {
    if (!dbar(p, vars::a1, vars::a2).is_zero()) ++bad;
    if (!dbar(p, vars::b1, vars::b2).is_zero()) ++bad;
  }
  return from_count(bad);
}

Outcome family_divisibility(const Context& c) {
  const auto& m = c.model;
  Polynomial a = Polynomial::variable(vars::alpha), b = Polynomial::variable(vars::beta);
  auto terms = cleared_exp_terms(family_numerator(m), (a - b) * Complex::i(), m.n);
  Polynomial diff = Polynomial::variable(vars::a1) + Polynomial::variable(vars::a2) * Complex::i() -
                    Polynomial::variable(vars::b1) - Polynomial::variable(vars::b2) * Complex::i();
  std::size_t bad = 0;
  for (int j = 0; j < static_cast<int>(terms.size()); ++j) {
    if (j == m.n) continue;
    for (const auto& [mask, p] : realify(terms[j]).terms())
      if (!try_divide(p, diff)) ++bad;
  }
  // Phi_{alpha,alpha} = sigma_alpha^n / n!
  PolyMultivector diagonal = c.family.holomorphic().map_coeffs(
      [&](const Polynomial& p) { return p.substitute(vars::beta, a); });
  PolyMultivector sa = lift(m.sigma) - lift(m.omega_I).scaled(a * Complex(2)) - lift(m.sigma_bar).scaled(a * a);
  PolyMultivector expected = wedge_power(sa, m.n) * Complex(Rational(1) / factorial(m.n));
  if (diagonal != expected) ++bad;
  return from_count(bad, {{"terms", terms.size()}});
}

Outcome family_purity(const Context& c) {
  Sampler s = c.sampler("family.purity");
  std::vector<FamilyPoint> pts;
  for (std::size_t k = 0; k < c.samples; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    pts.push_back(affine_point(a, b));
  }
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    Form phi = c.family.at(pts[k]);
    return is_pure(phi) && phi == phi_alpha_beta_direct(c.model, pts[k].alpha.coord, pts[k].beta.coord);
  });
  return from_count(bad, {{"samples", pts.size()}});
}

// The spinor, the bi-Hermitian pair with I_+ = I_beta, I_- = I_alpha and
// the B-field transform of a symplectic structure agree.
Outcome family_three_family(const Context& c) {
  Sampler s = c.sampler("family.three_family");
  std::vector<std::pair<Complex, Complex>> pts;
  for (std::size_t k = 0; k < c.samples; ++k) pts.push_back(s.pair(static_cast<int>(k)));
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    auto [a, b] = pts[k];
    GE j = gacs_from_spinor(c.family.at(affine_point(a, b)));
    auto sd = symplectic_data(c.model, a, b);
    return j == bi_hermitian_at(c.model, CP1Point::affine(b), CP1Point::affine(a)).j &&
           j == bfield_transform(make_Jomega(sd.omega), sd.b);
  });
  return from_count(bad, {{"samples", pts.size()}, {"labels", "I_plus=I_beta,I_minus=I_alpha"}});
}

Outcome family_theta(const Context& c) {
  const auto& m = c.model;
  RMatrix wj = two_form_matrix(m.omega_J), wk = two_form_matrix(m.omega_K);
  Sampler s = c.sampler("family.theta_family");
  std::size_t bad = 0;
  for (std::size_t k = 0; k < c.small; ++k) {
    Rational t = s.rational();
    if (t == 0) t = 1;
    Rational cs = (1 - t * t) / (1 + t * t), sn = 2 * t / (1 + t * t);
    GE lhs = cs * make_JI(m.I) + sn * make_Jomega(wj);
    GE rhs = bfield_transform(make_Jomega(wj * (1 / sn)), wk * (-cs / sn));
    if (lhs != rhs || !is_gacs(lhs)) ++bad;
  }
  return from_count(bad, {{"samples", c.small}});
}

Outcome family_pullback(const Context& c) {
  Sampler s = c.sampler("family.pullback_f");
  std::vector<TwistorFiberPoint> pts;
  for (std::size_t k = 0; k < c.samples; ++k) pts.push_back({s.complex(), s.complex()});
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    const auto& p = pts[k];
    bool ok = proportional(phi_eta_zeta(c.model, p.eta, p.zeta), c.family.at(f_map(p)));
    // psu2 sends 0 to eta, f(0, zeta) = (zeta, -zeta) and eta = 0 gives phi_zeta.
    ok = ok && mobius(psu2_matrix(p.eta), CP1Point::affine(Complex())) == CP1Point::affine(p.eta);
    FamilyPoint q = f_map({Complex(), p.zeta});
    ok = ok && q.alpha == CP1Point::affine(p.zeta) && q.beta == CP1Point::affine(-p.zeta);
    ok = ok && phi_eta_zeta(c.model, Complex(), p.zeta) == phi_zeta(c.model, p.zeta);
    return ok;
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome family_generalized_kahler(const Context& c) {
  Sampler s = c.sampler("family.generalized_kahler");
  RMatrix g = generalized_metric(c.model);
  RMatrix pair = pairing_matrix(c.model.dim);
  std::vector<FamilyPoint> pts;
  for (std::size_t k = 0; k < c.small; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    pts.push_back(affine_point(a, k % 4 == 1 ? a : b));
  }
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    auto gp = family_pair(c.family, pts[k]);
    bool ok = gp.j * gp.j_prime == gp.j_prime * gp.j && is_gacs(gp.j_prime);
    return ok && -(gp.j.matrix().transpose() * pair * gp.j_prime.matrix()) == g;
  });
  // I_+ = I_- = I recovers the Kahler pair; flipping I_- swaps the pair.
  const auto& m = c.model;
  RMatrix wi = two_form_matrix(m.omega_I);
  auto kp = bi_hermitian_pair(m.I, wi, m.I, wi);
  if (kp.j != make_JI(m.I) || kp.j_prime != make_Jomega(wi)) ++bad;
  auto sw = bi_hermitian_pair(m.I, wi, -m.I, -wi);
  if (sw.j != kp.j_prime || sw.j_prime != kp.j) ++bad;
  return from_count(bad, {{"samples", pts.size()}, {"metric_sign", "minus"}});
}

Outcome family_phi_prime(const Context& c) {
  const auto& m = c.model;
  std::size_t bad = 0;
  bool depends = false;
  for (const auto& [mask, p] : phi_prime_symbolic(m).terms()) {
    if (!dz(p, vars::t1, vars::t2).is_zero()) ++bad;
    if (!dbar(p, vars::t1, vars::t2).is_zero()) depends = true;
  }
  if (!depends) ++bad;
  // Phi'_{alpha, beta~} is the spinor of -J' at beta = 1 / beta~.
  Sampler s = c.sampler("family.phi_prime");
  std::vector<std::pair<Complex, Complex>> pts;
  for (std::size_t k = 0; k < c.small; ++k) pts.push_back({s.complex(), s.nonzero()});
  bad += count_failures(pts.size(), [&](std::size_t k) {
    auto [a, bt] = pts[k];
    GE jp = gacs_from_spinor(phi_prime(c.family, CP1Point::affine(a), CP1Point::affine(bt)));
    return jp == -bi_hermitian_at(m, CP1Point::in_chart(bt, 1), CP1Point::affine(a)).j_prime;
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome family_real_structure(const Context& c) {
  Sampler s = c.sampler("family.real_structure");
  std::vector<std::pair<Complex, Complex>> pts;
  for (std::size_t k = 0; k < c.small; ++k) pts.push_back({s.nonzero(), s.nonzero()});
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    return real_structure_check(c.model, {pts[k]});
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome family_mukai_quadric(const Context& c) {
  if (c.n() != 1) return skipped("n = 1 only");
  const auto& m = c.model;
  std::vector<std::string> xyzu{"X", "Y", "Z", "U"};
  std::vector<Polynomial> v;
  for (const auto& name : xyzu) v.push_back(Polynomial::variable(name));
  PolyMultivector q = quadric_spinor<Polynomial>(m, v[0], v[1], v[2], v[3]);
  Polynomial expected = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]) * Complex(2);
  std::size_t bad = mukai_pair(q, q) == expected ? 0 : 1;

  Sampler s = c.sampler("family.mukai_quadric");
  std::vector<std::array<Complex, 4>> pts;
  for (std::size_t k = 0; k < c.samples; ++k) {
    if (k < 10) {
      // on the quadric, from the (alpha, beta) parametrization
      auto [a, b] = s.pair(static_cast<int>(k));
      pts.push_back({-(a + b), Complex(1) - a * b, Complex::i() * (Complex(1) + a * b), Complex::i() * (a - b)});
    } else if (k % 4 == 0) {
      // on the quadric by solving for U^2 = -(X^2 + Y^2 + Z^2) with U = i X
      Complex x = s.complex();
      pts.push_back({x, Complex(0), Complex(0), Complex::i() * x});
    } else {
      pts.push_back({s.complex(), s.complex(), s.complex(), s.complex()});
    }
  }
  bad += count_failures(pts.size(), [&](std::size_t k) {
    const auto& p = pts[k];
    Form f = quadric_spinor<Complex>(m, p[0], p[1], p[2], p[3]);
    bool on = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]).is_zero();
    if (f.is_zero()) return true;
    return is_pure(f) == on;
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome family_type_stratification(const Context& c) {
  const auto& m = c.model;
  std::size_t bad = 0;
  int grid = 3;
  for (bool fiber : {true, false}) {
    for (const auto& row : type_map(m, grid, fiber)) {
      bool diagonal = row.alpha.canonical() == row.beta.canonical();
      int expected = (diagonal ? 2 * m.n : 0) + (fiber ? 0 : 2);
      if (row.type != expected) ++bad;
    }
  }
  Sampler s = c.sampler("family.type_stratification");
  std::vector<CP1Point> alphas{CP1Point::affine(Complex())};
  for (std::size_t k = 0; k < c.small; ++k) alphas.push_back(CP1Point::affine(s.nonzero()));
  bad += count_failures(alphas.size(), [&](std::size_t k) {
    GE j = gacs_from_spinor(c.family.at(alphas[k], alphas[k].antipode()));
    return j.A() == RMatrix(m.dim, m.dim) && type_of(j) == 0;
  });
  return from_count(bad, {{"grid", grid}, {"samples", alphas.size()}});
}

// ---- twistor space ----

Outcome twistor_dpsi(const Context& c) {
  bool mutate = c.opts.mutate == "nonclosed-omega";
  PolyForm d = ext_d(build_psi(c.model, mutate));
  Outcome o = from_count(d.form.terms().size(), {{"variables", 4 * c.n() + 4}, {"mutate", c.opts.mutate}});
  return o;
}

Outcome twistor_dpsi_charts(const Context& c) {
  std::size_t bad = 0;
  for (int ca = 0; ca < 2; ++ca)
    for (int cb = 0; cb < 2; ++cb) bad += ext_d(build_psi(c.family, ca, cb)).form.terms().size();
  return from_count(bad, {{"charts", 4}});
}

Outcome twistor_dpsi_prime(const Context& c) {
  PolyForm d = ext_d(build_psi_prime(c.model));
  return from_count(d.form.terms().size(), {{"variables", 4 * c.n() + 4}});
}

Outcome twistor_psi_structure(const Context& c) {
  Sampler s = c.sampler("twistor.psi_structure");
  std::vector<FamilyPoint> pts;
  std::size_t count = std::min<std::size_t>(c.small, 10);
  for (std::size_t k = 0; k < count; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    pts.push_back(affine_point(a, k % 3 == 2 ? a : b));
  }
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    return gacs_from_spinor(psi_at(c.family, pts[k])) == point_structures(c.family, pts[k]).j;
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome twistor_pseudo_kahler(const Context& c) {
  Sampler s = c.sampler("twistor.pseudo_kahler");
  int n = c.n();
  std::vector<FamilyPoint> pts{affine_point(Complex(), Complex())};
  for (std::size_t k = 1; k < c.small; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    pts.push_back(affine_point(a, b));
  }
  std::vector<double> margin(pts.size(), 0.0);
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    auto st = point_structures(c.family, pts[k]);
    if (!is_gacs(st.j) || !is_gacs(st.j_prime) || st.j * st.j_prime != st.j_prime * st.j) return false;
    RMatrix g = pseudo_metric(st);
    Inertia in = pseudo_kahler_signature(st);
    // restriction to T_M + T*_M
    std::vector<std::size_t> idx;
    for (int i = 0; i < 4 * n; ++i) idx.push_back(static_cast<std::size_t>(i));
    for (int i = 0; i < 4 * n; ++i) idx.push_back(static_cast<std::size_t>(4 * n + 4 + i));
    RMatrix gm(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) gm(i, j) = g(idx[i], idx[j]);
    Inertia m_part = inertia(gm);
    Inertia fl = float_signature(g, c.opts.tol);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_float(g), Eigen::EigenvaluesOnly);
    margin[k] = es.eigenvalues().cwiseAbs().minCoeff();
    return in.positive == 8 * n + 4 && in.negative == 4 && m_part.positive == 8 * n && m_part.negative == 0 &&
           fl.positive == in.positive && fl.negative == in.negative;
  });
  Outcome o = from_count(bad, {{"samples", pts.size()}, {"expected", {8 * n + 4, 4}}});
  double worst = margin.empty() ? 0.0 : *std::min_element(margin.begin(), margin.end());
  o.parameters["float_min_abs_eigenvalue"] = worst;
  return o;
}

Outcome twistor_type_jump(const Context& c) {
  Sampler s = c.sampler("twistor.type_jump");
  int n = c.n();
  std::vector<std::pair<FamilyPoint, int>> pts{{affine_point(Complex(), Complex(1)), 2},
                                               {affine_point(Complex(), Complex()), 2 * n + 2}};
  for (std::size_t k = 0; k < c.small; ++k) {
    auto [a, b] = s.pair(static_cast<int>(k));
    if (k % 2) pts.push_back({affine_point(a, a), 2 * n + 2});
    else pts.push_back({affine_point(a, b), 2});
  }
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    return type_of(point_structures(c.family, pts[k].first).j) == pts[k].second;
  });
  return from_count(bad, {{"samples", pts.size()}});
}

Outcome twistor_real_involution(const Context& c) {
  Sampler s = c.sampler("twistor.real_involution");
  std::vector<std::pair<Complex, Complex>> pts;
  for (std::size_t k = 0; k < c.small; ++k) pts.push_back({s.nonzero(), s.nonzero()});
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    return real_involution_check(c.family, pts[k].first, pts[k].second);
  });
  return from_count(bad, {{"samples", pts.size()}});
}

// Chart-swapped representatives give the same structure.
Outcome twistor_chart_independence(const Context& c) {
  Sampler s = c.sampler("twistor.chart_independence");
  std::vector<std::pair<Complex, Complex>> pts;
  for (std::size_t k = 0; k < c.small; ++k) pts.push_back({s.nonzero(), s.nonzero()});
  std::size_t bad = count_failures(pts.size(), [&](std::size_t k) {
    auto [a, b] = pts[k];
    FamilyPoint p = affine_point(a, b);
    FamilyPoint q{CP1Point::in_chart(a.inverse(), 1), CP1Point::in_chart(b.inverse(), 1)};
    FamilyPoint r{CP1Point::affine(a), CP1Point::in_chart(b.inverse(), 1)};
    Form fp = c.family.at(p);
    return proportional(fp, c.family.at(q)) && proportional(fp, c.family.at(r)) &&
           family_pair(c.family, p).j_prime == family_pair(c.family, q).j_prime;
  });
  return from_count(bad, {{"samples", pts.size()}});
}

using CheckFn = Outcome (*)(const Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks{
      {"scalars.field_axioms", scalars_field_axioms},
      {"polynomial.ring_axioms", polynomial_ring_axioms},
      {"multivector.wedge", multivector_wedge},
      {"multivector.interior_derivation", multivector_interior},
      {"multivector.clifford_relation", multivector_clifford},
      {"multivector.mukai_symmetry", multivector_mukai_symmetry},
      {"double_space.gacs_axioms", double_space_gacs_axioms},
      {"double_space.dictionary", double_space_dictionary},
      {"double_space.projective_invariance", double_space_projective},
      {"double_space.type_parity", double_space_type_parity},
      {"courant.d_squared", courant_d_squared},
      {"courant.leibniz", courant_leibniz},
      {"courant.self_bracket", courant_anchor},
      {"courant.derived_bracket", courant_derived_bracket},
      {"courant.spinor_integrability", courant_integrability},
      {"hyperkahler.quaternion_relations", hyperkahler_quaternions},
      {"hyperkahler.i_eta", hyperkahler_i_eta},
      {"hyperkahler.sigma_eta", hyperkahler_sigma_eta},
      {"hyperkahler.so3", hyperkahler_so3},
      {"hyperkahler.metric_compatibility", hyperkahler_metric_compat},
      {"family.n1_expansion", family_n1_expansion},
      {"family.bidegree", family_bidegree},
      {"family.holomorphy", family_holomorphy},
      {"family.divisibility", family_divisibility},
      {"family.purity", family_purity},
      {"family.three_family", family_three_family},
      {"family.theta_family", family_theta},
      {"family.pullback_f", family_pullback},
      {"family.generalized_kahler", family_generalized_kahler},
      {"family.phi_prime", family_phi_prime},
      {"family.real_structure", family_real_structure},
      {"family.mukai_quadric", family_mukai_quadric},
      {"family.type_stratification", family_type_stratification},
      {"twistor.check_dpsi_zero", twistor_dpsi},
      {"twistor.dpsi_charts", twistor_dpsi_charts},
      {"twistor.check_dpsi_prime_zero", twistor_dpsi_prime},
      {"twistor.psi_structure", twistor_psi_structure},
      {"twistor.pseudo_kahler", twistor_pseudo_kahler},
      {"twistor.type_jump", twistor_type_jump},
      {"twistor.real_involution", twistor_real_involution},
      {"twistor.chart_independence", twistor_chart_independence},
  };
  return checks;
}

}  // namespace

std::vector<std::string> suite_manifest(int) {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

ordered_json run_verify(const VerifyOptions& opts) {
  if (opts.n < 1 || opts.n > 3) throw std::invalid_argument("verify: n must be in 1..3");
  if (opts.samples < 1) throw std::invalid_argument("verify: samples must be positive");
  if (!opts.mutate.empty() && opts.mutate != "nonclosed-omega") {
    throw std::invalid_argument("verify: unknown mutation '" + opts.mutate + "'");
  }
  Context ctx(opts);
  ordered_json report;
  report["schema"] = 1;
  report["suite"] = "gctk";
  report["version"] = kVersion;
  report["seed"] = opts.seed;
  report["n"] = opts.n;
  report["samples"] = opts.samples;
  report["tol"] = opts.tol;
  report["mutate"] = opts.mutate.empty() ? ordered_json() : ordered_json(opts.mutate);
  ordered_json checks = ordered_json::array();
  for (const auto& [id, fn] : registry()) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn(ctx);
    } catch (const std::exception& e) {
      o.status = "fail";
      o.mismatches = 1;
      o.detail = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ordered_json rec;
    rec["check_id"] = id;
    rec["n"] = opts.n;
    rec["parameters"] = o.parameters;
    rec["status"] = o.status;
    if (o.exact)
      rec["residual"] = {{"exact_zero", o.status != "fail"}, {"mismatches", o.mismatches}};
    else
      rec["residual"] = {{"float", o.value}};
    rec["elapsed_ms"] = ms;
    if (!o.detail.empty()) rec["detail"] = o.detail;
    checks.push_back(std::move(rec));
  }
  report["checks"] = std::move(checks);
  auto failing = failing_checks(report);
  report["failing"] = failing;
  report["passed"] = failing.empty();
  return report;
}

std::vector<std::string> failing_checks(const ordered_json& report) {
  std::vector<std::string> ids;
  for (const auto& rec : report.at("checks"))
    if (rec.at("status") == "fail") ids.push_back(rec.at("check_id").get<std::string>());
  return ids;
}

}  // namespace gctk
