#pragma once

#include <optional>
#include <string>
#include <vector>

namespace algflow::acceptance {

struct Options {
  /// Replaces the residual tolerance of every check that has one.
  std::optional<double> tol_override;
};

struct CheckResult {
  std::string name;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// kce, commutative_locus, sign_flip, iso_grid, canonical_forms,
/// associativity, a0plus_vs_a1, basis_change_oracle, type_c_associativity
std::vector<std::string> check_names();

/// Throws std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name, const Options& opts = {});

/// Runs the named checks, or all of them if `only` is empty.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only = {}, const Options& opts = {});

}  // namespace algflow::acceptance
