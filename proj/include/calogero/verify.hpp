#pragma once

#include "calogero/json_io.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace calogero {

// Options shared by every verification suite; unset fields take suite
// defaults (n <= 3, |lambda| <= 3, the standard coupling samples).
struct VerifyOptions {
  std::optional<Family> family;
  std::optional<int> n;
  std::optional<int> max_weight;
  std::optional<int> r;
  std::optional<Rational> g0, g1, omega;
  bool deep = false;
  std::uint64_t seed = 0;
  double tol = 0;  // 0 = suite default
  int threads = 0;  // 0 = CALOGERO_THREADS, else hardware
};

struct CaseResult {
  ordered_json line;
  bool failed = false;
  bool non_generic = false;
};

const std::vector<std::string>& verify_suites();

// Runs one suite over its grid; results come back in canonical case order.
std::vector<CaseResult> run_suite(const std::string& suite, const VerifyOptions& opt);

// Deterministic generic rational points for the difference-operator checks.
std::vector<Rational> seeded_point(int n, Family family, std::uint64_t seed, int index);

}  // namespace calogero
