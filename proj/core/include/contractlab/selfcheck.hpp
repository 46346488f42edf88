#pragma once

#include <string>
#include <vector>

namespace contractlab::selfcheck {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string details;  // measured counts / gaps, for the pass-fail table
};

/// The twelve acceptance checks, in their published order:
///   1 breakpoint oracle equivalence      7 coring relaxation monotonicity
///   2 demand query bound                 8 core near-optimality
///   3 nested demand chains               9 estimator concentration
///   4 min-cut demand oracle             10 LP feasibility under truth
///   5 hardness-reduction dichotomy      11 PTAS end to end (desk scale)
///   6 example-1 densest-k gap           12 report determinism
CheckResult run_criterion(int index);
std::vector<CheckResult> run_all_criteria();

/// Additional per-module invariant suites (valuations, oracles, single
/// agent, multi agent, PTAS components, generators, io).
std::vector<CheckResult> run_module_invariants();

}  // namespace contractlab::selfcheck
