// One line per acceptance criterion; exit status 1 if any line fails.

#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gctk/parallel.hpp"
#include "gctk/twistor.hpp"
#include "oracles.hpp"

using namespace gctk;

namespace {

struct Result {
  bool ok = false;
  std::string note;
};

int g_failures = 0;

void report(const std::string& label, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.ok) ++g_failures;
  std::printf("%s  %-44s %7.2fs  %s\n", r.ok ? "PASS" : "FAIL", label.c_str(), secs, r.note.c_str());
  std::fflush(stdout);
}

std::size_t count_bad(std::size_t count, const std::function<bool(std::size_t)>& ok) {
  std::atomic<std::size_t> bad{0};
  parallel_for(count, [&](std::size_t k) {
    if (!ok(k)) ++bad;
  });
  return bad;
}

std::string fraction(std::size_t bad, std::size_t total) {
  return std::to_string(total - bad) + "/" + std::to_string(total) + " exact";
}

// Distinct random rational pairs.
std::vector<std::pair<Complex, Complex>> random_pairs(oracle::Rng& rng, std::size_t count, bool nonzero = false) {
  std::vector<std::pair<Complex, Complex>> out;
  while (out.size() < count) {
    Complex a = nonzero ? rng.nonzero() : rng.complex(), b = nonzero ? rng.nonzero() : rng.complex();
    if (a != b) out.push_back({a, b});
  }
  return out;
}

FamilyPoint point(const Complex& a, const Complex& b) { return {CP1Point::affine(a), CP1Point::affine(b)}; }

Polynomial random_poly(oracle::Rng& rng, const std::vector<std::string>& coords) {
  Polynomial p(Complex(rng.rational(5)));
  for (int t = 0; t < 2; ++t) {
    Polynomial mono(Complex(rng.rational(5)));
    long deg = rng.integer(1, 2);
    for (long d = 0; d < deg; ++d) mono = mono * Polynomial::variable(coords[rng.integer(0, 3)]);
    p += mono;
  }
  return p;
}

PolySection random_section(oracle::Rng& rng, const std::vector<std::string>& coords) {
  PolySection s(coords);
  for (int i = 0; i < s.dim(); ++i) {
    s.tangent[i] = random_poly(rng, coords);
    s.cotangent[i] = random_poly(rng, coords);
  }
  return s;
}

PolyForm random_polyform(oracle::Rng& rng, const std::vector<std::string>& coords) {
  PolyMultivector f(4);
  for (int t = 0; t < 3; ++t) f.add_term(static_cast<Mask>(rng.integer(0, 15)), random_poly(rng, coords));
  return PolyForm(coords, f);
}

Result integrability() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    auto m = build_model(n);
    ok = ok && check_dpsi_zero(m) && check_dpsi_prime_zero(m);
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {ok && secs < 60, "n = 1, 2, 3 exact zero, budget 60s"};
}

Result mutation() {
  bool caught = !check_dpsi_zero(build_model(1), true) && !check_dpsi_zero(build_model(2), true);
  return {caught, "nonclosed-omega detected for n = 1, 2"};
}

Result n1_identity() {
  auto m = build_model(1);
  SpinorFamily fam(m);
  Polynomial a = Polynomial::variable(vars::alpha), b = Polynomial::variable(vars::beta);
  Form omv = Form::scalar(4, Complex(1)) - m.vol;
  PolyMultivector expected = lift(m.sigma) - lift(m.omega_I).scaled(a + b) + lift(omv).scaled((a - b) * Complex::i()) -
                             lift(m.sigma_bar).scaled(a * b);
  bool ok = fam.holomorphic() == expected && phi_alpha_beta_symbolic(m) == realify(expected);
  return {ok, "term by term, complex and real variables"};
}

// labels: true for I_+ = I_alpha, I_- = I_beta
Result three_family(bool literal) {
  oracle::Rng rng(404);
  std::size_t bad = 0, total = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    SpinorFamily fam(m);
    auto pts = random_pairs(rng, 50);
    total += pts.size();
    bad += count_bad(pts.size(), [&](std::size_t k) {
      auto [a, b] = pts[k];
      GE j = gacs_from_spinor(fam.at(point(a, b)));
      CP1Point pa = CP1Point::affine(a), pb = CP1Point::affine(b);
      return j == (literal ? bi_hermitian_at(m, pa, pb) : bi_hermitian_at(m, pb, pa)).j;
    });
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {bad == 0 && secs < 30, fraction(bad, total) + ", n = 1, 2"};
}

Result pullback() {
  oracle::Rng rng(505);
  std::size_t bad = 0, total = 0;
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    SpinorFamily fam(m);
    std::vector<TwistorFiberPoint> pts;
    for (int k = 0; k < 50; ++k) pts.push_back({rng.complex(), rng.complex()});
    total += pts.size();
    bad += count_bad(pts.size(), [&](std::size_t k) {
      return proportional(phi_eta_zeta(m, pts[k].eta, pts[k].zeta), fam.at(f_map(pts[k])));
    });
  }
  return {bad == 0, fraction(bad, total) + ", n = 1, 2"};
}

Result so3() {
  oracle::Rng rng(606);
  auto m = build_model(1);
  std::size_t bad = 0;
  for (int k = 0; k < 50; ++k) {
    Complex eta = rng.complex();
    RMatrix r = so3_matrix(eta);
    Rational det = r(0, 0) * (r(1, 1) * r(2, 2) - r(1, 2) * r(2, 1)) - r(0, 1) * (r(1, 0) * r(2, 2) - r(1, 2) * r(2, 0)) +
                   r(0, 2) * (r(1, 0) * r(2, 1) - r(1, 1) * r(2, 0));
    bool ok = r.transpose() * r == RMatrix::identity(3) && det == 1;
    Form sp = sigma_eta_prime(m, eta);
    std::array<Form, 3> rotated{omega_eta(m, eta), real_part(sp), imag_part(sp)};
    for (int row = 0; row < 3; ++row) {
      Form sum = m.omega_I * Complex(r(row, 0)) + m.omega_J * Complex(r(row, 1)) + m.omega_K * Complex(r(row, 2));
      ok = ok && sum == rotated[row];
    }
    if (!ok) ++bad;
  }
  return {bad == 0, fraction(bad, 50) + " orthogonal, det 1, forms rotate"};
}

Result diagonal() {
  std::size_t bad = 0;
  for (int n = 1; n <= 3; ++n) {
    auto m = build_model(n);
    Polynomial a = Polynomial::variable(vars::alpha), b = Polynomial::variable(vars::beta);
    auto terms = cleared_exp_terms(family_numerator(m), (a - b) * Complex::i(), n);
    for (int j = 0; j < static_cast<int>(terms.size()); ++j) {
      if (j == n) continue;
      for (const auto& [mask, p] : terms[j].terms())
        if (!try_divide(p, a - b)) ++bad;
    }
    PolyMultivector full = cleared_exp(family_numerator(m), (a - b) * Complex::i(), n);
    PolyMultivector diag = full.map_coeffs([&](const Polynomial& p) { return p.substitute(vars::beta, a); });
    PolyMultivector sa = lift(m.sigma) - lift(m.omega_I).scaled(a * Complex(2)) - lift(m.sigma_bar).scaled(a * a);
    if (diag != wedge_power(sa, n) * Complex(Rational(1) / factorial(n))) ++bad;
  }
  return {bad == 0, "n = 1, 2, 3 divisible by (alpha - beta), diagonal = sigma^n / n!"};
}

Result mukai() {
  auto m = build_model(1);
  std::vector<Polynomial> v;
  for (const char* name : {"X", "Y", "Z", "U"}) v.push_back(Polynomial::variable(name));
  PolyMultivector q = quadric_spinor<Polynomial>(m, v[0], v[1], v[2], v[3]);
  bool ok = mukai_pair(q, q) == (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]) * Complex(2);
  oracle::Rng rng(808);
  std::vector<std::array<Complex, 4>> pts;
  for (auto [a, b] : random_pairs(rng, 10))
    pts.push_back({-(a + b), Complex(1) - a * b, Complex::i() * (Complex(1) + a * b), Complex::i() * (a - b)});
  while (pts.size() < 50) pts.push_back({rng.complex(), rng.complex(), rng.complex(), rng.complex()});
  std::size_t on = 0;
  std::size_t bad = count_bad(pts.size(), [&](std::size_t k) {
    const auto& p = pts[k];
    bool vanishes = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]).is_zero();
    return is_pure(quadric_spinor<Complex>(m, p[0], p[1], p[2], p[3])) == vanishes;
  });
  for (const auto& p : pts) on += (p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]).is_zero();
  return {ok && bad == 0 && on >= 10,
          "symbolic pairing, " + fraction(bad, pts.size()) + ", " + std::to_string(on) + " on the quadric"};
}

Result pseudo_kahler() {
  oracle::Rng rng(909);
  std::size_t bad = 0, total = 0;
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    SpinorFamily fam(m);
    auto pts = random_pairs(rng, 20);
    total += pts.size();
    bad += count_bad(pts.size(), [&](std::size_t k) {
      auto st = point_structures(fam, point(pts[k].first, pts[k].second));
      if (st.j * st.j_prime != st.j_prime * st.j) return false;
      Inertia in = pseudo_kahler_signature(st);
      return in.positive == 8 * n + 4 && in.negative == 4 && in.zero == 0;
    });
  }
  return {bad == 0, fraction(bad, total) + " commuting, signature (8n+4, 4)"};
}

Result stratification() {
  std::size_t bad = 0, rows = 0;
  for (int n = 1; n <= 2; ++n) {
    auto m = build_model(n);
    for (bool fiber : {true, false}) {
      for (const auto& r : type_map(m, 3, fiber)) {
        bool diagonal = r.alpha.canonical() == r.beta.canonical();
        ++rows;
        if (r.type != (diagonal ? 2 * n : 0) + (fiber ? 0 : 2)) ++bad;
      }
    }
    SpinorFamily fam(m);
    oracle::Rng rng(1010);
    for (int k = 0; k < 10; ++k) {
      CP1Point a = CP1Point::affine(k == 0 ? Complex() : rng.nonzero());
      GE j = gacs_from_spinor(fam.at(a, a.antipode()));
      ++rows;
      if (j.A() != RMatrix(m.dim, m.dim) || type_of(j) != 0) ++bad;
    }
  }
  return {bad == 0, fraction(bad, rows) + " grid and antipodal points, n = 1, 2"};
}

Result real_structure() {
  oracle::Rng rng(1111);
  std::size_t bad = 0, total = 0;
  for (int n = 1; n <= 2; ++n) {
    SpinorFamily fam(build_model(n));
    auto pts = random_pairs(rng, 20, true);
    total += pts.size();
    bad += count_bad(pts.size(), [&](std::size_t k) { return real_structure_identity(fam, pts[k].first, pts[k].second); });
  }
  return {bad == 0, fraction(bad, total) + ", n = 1, 2"};
}

Result courant() {
  oracle::Rng rng(1212);
  auto coords = coordinate_names(4);
  std::vector<std::array<PolySection, 3>> trials;
  std::vector<PolyForm> forms;
  for (int k = 0; k < 20; ++k) {
    trials.push_back({random_section(rng, coords), random_section(rng, coords), random_section(rng, coords)});
    forms.push_back(random_polyform(rng, coords));
  }
  std::size_t leib = count_bad(trials.size(), [&](std::size_t k) {
    const auto& [a, b, e] = trials[k];
    return dorfman(a, dorfman(b, e)) == dorfman(dorfman(a, b), e) + dorfman(b, dorfman(a, e));
  });
  std::size_t self = count_bad(trials.size(), [&](std::size_t k) {
    const auto& e = trials[k][0];
    return dorfman(e, e) == differential(coords, pairing(e, e));
  });
  std::size_t derived = count_bad(trials.size(), [&](std::size_t k) {
    return derived_bracket_check(trials[k][0], trials[k][1], {forms[k]});
  });
  return {leib + self + derived == 0, "Leibniz " + fraction(leib, 20) + ", [e,e] " + fraction(self, 20) +
                                          ", derived " + fraction(derived, 20)};
}

Result bidegree() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    SpinorFamily fam(build_model(n));
    for (const auto& [mask, p] : fam.holomorphic().terms())
      ok = ok && p.degree_in(vars::alpha) <= n && p.degree_in(vars::beta) <= n;
  }
  return {ok, "degree <= n in alpha and beta, n = 1, 2, 3"};
}

}  // namespace

int main() {
  report("1  exact integrability", integrability);
  report("2  mutation sensitivity", mutation);
  report("3  four-dimensional spinor identity", n1_identity);
  report("4  three families, I+ = I_alpha (as stated)", [] { return three_family(true); });
  report("4' three families, I+ = I_beta, I- = I_alpha", [] { return three_family(false); });
  report("5  pullback by f", pullback);
  report("6  rotation matrix and forms", so3);
  report("7  diagonal and divisibility", diagonal);
  report("8  Mukai quadric", mukai);
  report("9  pseudo-Kahler signature", pseudo_kahler);
  report("10 type stratification", stratification);
  report("11 real structure", real_structure);
  report("12 Courant calculus", courant);
  report("13 bidegree", bidegree);
  std::printf("%d failing\n", g_failures);
  return g_failures ? 1 : 0;
}
