#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gctk/twistor.hpp"
#include "gctk/verify.hpp"
#include "gctk/version.hpp"

namespace py = pybind11;
using namespace gctk;

namespace {

CP1Point point(const std::string& text) {
  if (text == "inf") return CP1Point::infinity();
  return CP1Point::affine(parse_complex(text));
}

std::vector<std::pair<unsigned, std::string>> terms(const Form& f) {
  std::vector<std::pair<unsigned, std::string>> out;
  for (const auto& [mask, c] : f.terms()) out.emplace_back(mask, c.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact generalized complex geometry of the flat hyperkahler model";
  m.attr("__version__") = kVersion;

  m.def("spinor_terms", [](int n, const std::string& alpha, const std::string& beta) {
    return terms(SpinorFamily(build_model(n)).at(point(alpha), point(beta)));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"),
        "nonzero coefficients of the spinor as (mask, 'p/q+r/s*i') pairs");

  m.def("spinor_text", [](int n, const std::string& alpha, const std::string& beta) {
    return render(SpinorFamily(build_model(n)).at(point(alpha), point(beta)));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"));

  m.def("symbolic_spinor_text", [](int n) { return render(SpinorFamily(build_model(n)).holomorphic()); },
        py::arg("n"));

  m.def("is_pure", [](int n, const std::string& alpha, const std::string& beta) {
    return is_pure(SpinorFamily(build_model(n)).at(point(alpha), point(beta)));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"));

  m.def("structure_type", [](int n, const std::string& alpha, const std::string& beta) {
    return type_of(gacs_from_spinor(SpinorFamily(build_model(n)).at(point(alpha), point(beta))));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"));

  m.def("fmap", [](const std::string& eta, const std::string& zeta) {
    FamilyPoint p = f_map({parse_complex(eta), parse_complex(zeta)});
    auto text = [](const CP1Point& q) { return q.is_infinity() ? std::string("inf") : short_str(*q.affine_value()); };
    return std::make_pair(text(p.alpha), text(p.beta));
  }, py::arg("eta"), py::arg("zeta"));

  m.def("type_map_csv", [](int n, int grid, bool fiber) { return type_map_csv(type_map(build_model(n), grid, fiber)); },
        py::arg("n"), py::arg("grid") = 3, py::arg("fiber") = false);

  m.def("check_dpsi_zero", [](int n, bool mutate) {
    py::gil_scoped_release release;
    return check_dpsi_zero(build_model(n), mutate);
  }, py::arg("n"), py::arg("mutate") = false);

  m.def("check_dpsi_prime_zero", [](int n) {
    py::gil_scoped_release release;
    return check_dpsi_prime_zero(build_model(n));
  }, py::arg("n"));

  m.def("pseudo_kahler_signature", [](int n, const std::string& alpha, const std::string& beta) {
    SpinorFamily fam(build_model(n));
    Inertia in = pseudo_kahler_signature(point_structures(fam, {point(alpha), point(beta)}));
    return std::make_pair(in.positive, in.negative);
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"));

  m.def("verify_json", [](int n, std::uint64_t seed, int samples, double tol, const std::string& mutate) {
    VerifyOptions o{n, seed, samples, tol, mutate};
    py::gil_scoped_release release;
    return run_verify(o).dump();
  }, py::arg("n") = 1, py::arg("seed") = 42, py::arg("samples") = 50, py::arg("tol") = 1e-9,
        py::arg("mutate") = "");

  py::register_exception<NotDivisible>(m, "NotDivisible", PyExc_ArithmeticError);
}
