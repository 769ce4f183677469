#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gctk/family.hpp"
#include "gctk/verify.hpp"
#include "gctk/version.hpp"

using namespace gctk;

namespace {

CP1Point parse_point(const std::string& text) {
  if (text == "inf" || text == "infinity") return CP1Point::infinity();
  return CP1Point::affine(parse_complex(text));
}

std::string point_text(const CP1Point& p) {
  if (p.is_infinity()) return "inf";
  return short_str(*p.affine_value());
}

// Writes to `path`, or stdout for "" and "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

nlohmann::ordered_json form_json(const Form& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mask, c] : f.terms()) terms.push_back({{"mask", mask}, {"coeff", c.str()}});
  return terms;
}

nlohmann::ordered_json form_json(const PolyMultivector& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [mask, c] : f.terms()) terms.push_back({{"mask", mask}, {"coeff", c.str()}});
  return terms;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized complex twistor toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  VerifyOptions vopt;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run the verification suite and write a JSON report");
  verify->add_option("--n", vopt.n, "quaternionic dimension")->check(CLI::Range(1, 3));
  verify->add_option("--seed", vopt.seed, "sampling seed");
  verify->add_option("--samples", vopt.samples, "samples per check")->check(CLI::PositiveNumber);
  verify->add_option("--tol", vopt.tol, "tolerance of floating cross-checks")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", verify_out, "report path (stdout if omitted)");
  verify->add_option("--mutate", vopt.mutate, "deliberate defect")->check(CLI::IsMember({"nonclosed-omega"}));

  int tm_n = 1, grid = 3;
  bool fiber = false;
  std::string tm_out;
  auto* typemap = app.add_subcommand("typemap", "type of the structure on a grid of both charts, as CSV");
  typemap->add_option("--n", tm_n)->check(CLI::Range(1, 3));
  typemap->add_option("--grid", grid)->check(CLI::Range(2, 64));
  typemap->add_option("--out", tm_out, "CSV path (stdout if omitted)");
  typemap->add_flag("--fiber", fiber, "type on M alone, without the two CP1 factors");

  int sp_n = 1;
  std::string alpha, beta, format = "text";
  auto* spinor = app.add_subcommand("spinor", "print the spinor at (alpha, beta) or its symbolic expansion");
  spinor->add_option("--n", sp_n)->check(CLI::Range(1, 3));
  auto* alpha_opt = spinor->add_option("--alpha", alpha, "p/q+r/s*i or inf");
  auto* beta_opt = spinor->add_option("--beta", beta, "p/q+r/s*i or inf");
  spinor->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string eta, zeta;
  auto* fmap = app.add_subcommand("fmap", "image of (eta, zeta) in CP1 x CP1");
  fmap->add_option("--eta", eta)->required();
  fmap->add_option("--zeta", zeta)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share exit code 2 with the other argument failures
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      auto report = run_verify(vopt);
      emit(verify_out, report.dump(2) + "\n");
      auto failing = failing_checks(report);
      if (!failing.empty()) {
        std::cerr << "failing checks:";
        for (const auto& id : failing) std::cerr << ' ' << id;
        std::cerr << '\n';
        return 1;
      }
      return 0;
    }
    if (*typemap) {
      emit(tm_out, type_map_csv(type_map(build_model(tm_n), grid, fiber)));
      return 0;
    }
    if (*spinor) {
      if (alpha_opt->empty() != beta_opt->empty()) throw std::invalid_argument("give both --alpha and --beta, or neither");
      SpinorFamily fam(build_model(sp_n));
      if (alpha_opt->empty()) {
        const auto& f = fam.holomorphic();
        if (format == "json")
          std::cout << nlohmann::ordered_json{{"n", sp_n}, {"symbolic", true}, {"terms", form_json(f)}}.dump(2) << '\n';
        else
          std::cout << render(f) << '\n';
        return 0;
      }
      Form f = fam.at(parse_point(alpha), parse_point(beta));
      if (format == "json")
        std::cout << nlohmann::ordered_json{{"n", sp_n}, {"alpha", alpha}, {"beta", beta}, {"terms", form_json(f)}}
                         .dump(2)
                  << '\n';
      else
        std::cout << render(f) << '\n';
      return 0;
    }
    if (*fmap) {
      FamilyPoint p = f_map({parse_complex(eta), parse_complex(zeta)});
      std::cout << '(' << point_text(p.alpha) << ", " << point_text(p.beta) << ")\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
