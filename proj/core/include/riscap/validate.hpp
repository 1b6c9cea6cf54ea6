#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace riscap::validate {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;  // observed discrepancy or statistic
  double bound = 0.0;  // threshold it must stay under
};

struct Options {
  std::int64_t mc_samples = 1'000'000;
  std::uint64_t seed = 20250809;
  int threads = 0;
};

// Cross-checks every analytic quantity against its stochastic counterpart on
// the default scenario (both models, 1/2/4 cells): MGF normalisation and
// pointwise values, ergodic capacities, secrecy differences, plus the
// closed-form-vs-quadrature identities. Logs one line per check when a
// stream is given.
std::vector<CheckResult> run_all(const Options& opts, std::ostream* log = nullptr);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace riscap::validate
