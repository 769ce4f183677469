#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gctk {

struct VerifyOptions {
  int n = 1;
  std::uint64_t seed = 42;
  int samples = 50;
  double tol = 1e-9;
  // "" or "nonclosed-omega"
  std::string mutate;
};

// Every check id of the suite for the given n, in report order.
std::vector<std::string> suite_manifest(int n);

// Runs the suite; the report carries schema 1 and one record per manifest entry.
nlohmann::ordered_json run_verify(const VerifyOptions& opts);

std::vector<std::string> failing_checks(const nlohmann::ordered_json& report);

}  // namespace gctk
