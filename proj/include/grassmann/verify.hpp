#pragma once
// The cross-validation suite: every structural claim the library is built on,
// checked end to end. Used by the `verify` CLI subcommand and the acceptance
// runner.

#include <string>
#include <vector>

namespace gr {

struct CheckResult {
  int criterion = 0;  // 1..8, groups related checks
  std::string name;
  bool pass = false;
  std::string detail;  // filled on failure (and for informative passes)
};

// Known integral cohomology tables and projective-space patterns.
std::vector<CheckResult> check_cohomology_tables();
// delta o delta = 0 everywhere; tables invariant under the alternate
// coboundary sign solution.
std::vector<CheckResult> check_complexes(int max_n);
// Toda-propagation double edges == sign-agreement double edges.
std::vector<CheckResult> check_graph_equivalence(int max_n);
// Closed-form polynomial identities: Betti polynomials from complexes,
// p from graphs, the eight recursions, Euler characteristics.
std::vector<CheckResult> check_polynomials(int max_n);
// Blow-up weights: known values and closed form vs BFS.
std::vector<CheckResult> check_eta(int max_n);
// Finite-field counts: oracle vs closed forms, spheres, cones, SO_n.
std::vector<CheckResult> check_fq();
// KP scans: crossing counts and parities against edge tags.
std::vector<CheckResult> check_kp();
// Top-degree rank 1 iff n even.
std::vector<CheckResult> check_orientability(int max_n);

// Everything above. max_n trims the most expensive sweeps (default bounds
// match the documented acceptance scale when max_n = 0).
std::vector<CheckResult> run_all_checks(int max_n = 0);

}  // namespace gr
