#pragma once

// Invariant suites behind `qutrit check`. Each check draws its own
// deterministic sample from (seed, check index), so results do not depend on
// which suites run together.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/model.hpp"
#include "qutrit/sampling.hpp"

namespace qutrit {

enum class CheckSuite { All, Model, Duality, Channels, Orbits };

CheckSuite parse_check_suite(std::string_view name);
std::string_view suite_name(CheckSuite suite);

struct CheckOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  /// Multiplies every tolerance. Exists so the harness can be shown to fail.
  double tolerance_scale = 1.0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::size_t count = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  /// Non-gating results are reported but never fail the run.
  bool gating = true;
};

std::vector<CheckResult> run_checks(CheckSuite suite, const CheckOptions& options);

/// One line per result: "PASS suite/name n=... max_err=... tol=...".
void print_results(std::ostream& out, const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

/// A rank-2 state on the lower boundary of Q2: the peeled inversion of a
/// random state supported on two basis vectors.
DensityMatrix lower_boundary_state(CounterRng& rng);

/// Point drawn uniformly from the Q1 body by rejection from its bounding box.
ModelPoint uniform_q1_point(CounterRng& rng);

}  // namespace qutrit
