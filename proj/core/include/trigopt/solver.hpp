#pragma once

// Primal log-barrier path following for the parameterized block problems:
// minimize  obj(p) - mu * sum_b w_b logdet B_b(p)  by damped Newton steps,
// mu shrinking geometrically from mu0 until mu < tol/10. p = 0 (all blocks
// I/|Omega_d|) is strictly feasible, so no phase-one is needed.

#include "trigopt/sdp.hpp"

namespace trigopt {

struct SolverConfig {
  double tol = 1e-7;     // target accuracy of the bound
  int max_iter = 500;    // total Newton iteration budget
  double mu0 = 1.0;
  double mu_shrink = 10.0;
  double newton_tol = 1e-10;  // stop centering when the squared decrement drops below
  unsigned long long seed = 0;  // consumed by randomized drivers, not the solver
};

SolveResult solve(const SdpProblem& prob, const SolverConfig& cfg = {});

}  // namespace trigopt
