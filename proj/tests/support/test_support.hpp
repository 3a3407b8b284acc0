#pragma once

// Shared fixtures for the test suites.

#include "trigopt/grid_search.hpp"
#include "trigopt/solver.hpp"
#include "trigopt/symmetry_basis.hpp"

#include <random>

namespace trigopt::testing {

inline Weight wt(std::vector<std::int64_t> c) { return Weight(std::move(c)); }

// f(u) = (2 cos(2 pi u) - 1)^2 on A1: coefficients (1,-2,3,-2,1) on
// weights (2,1,0,-1,-2). Global minimum 0 at u = +-1/6.
inline TrigPoly a1_squared_cosine_poly() {
  return TrigPoly::from_terms(1, {{wt({2}), 1.0},
                                  {wt({1}), -2.0},
                                  {wt({0}), 3.0},
                                  {wt({-1}), -2.0},
                                  {wt({-2}), 1.0}});
}

// Invariant hexagonal-lattice polynomial: 6 + 4*(first orbit shell) +
// 2*(doubled shell).
inline TrigPoly a2_two_shell_poly() {
  std::vector<std::pair<Weight, Complex>> terms = {{wt({0, 0}), 6.0}};
  const std::vector<Weight> shell = {wt({1, 0}),  wt({0, 1}),  wt({-1, 1}),
                                     wt({1, -1}), wt({-1, 0}), wt({0, -1})};
  for (const auto& w : shell) {
    terms.emplace_back(w, 4.0);
    Weight dbl = w + w;
    terms.emplace_back(dbl, 2.0);
  }
  return TrigPoly::from_terms(2, terms);
}

// The 7-point order used for the printed matrices over A2, degree 1:
// {0, -w1, w1-w2, w2, -w2, w2-w1, w1}.
inline std::vector<Weight> a2_reference_order() {
  return {wt({0, 0}), wt({-1, 0}), wt({1, -1}), wt({0, 1}),
          wt({0, -1}), wt({-1, 1}), wt({1, 0})};
}

// Random conjugate-symmetric coefficients on Omega_d, Reynolds-averaged.
inline TrigPoly random_invariant_poly(const RootSystem& rs, const WeylGroup& W, int d,
                                      std::mt19937_64& rng) {
  WeightSet ws = weight_set(rs, W, d);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    std::vector<std::pair<Weight, Complex>> terms;
    for (const auto& w : ws.weights()) {
      if (w.is_zero()) {
        terms.emplace_back(w, Complex(u(rng), 0.0));
        continue;
      }
      if ((-w) < w) continue;  // one representative per conjugate pair
      terms.emplace_back(w, Complex(u(rng), u(rng)));
    }
    TrigPoly f = symmetrize(W, TrigPoly::from_terms(rs.rank(), terms));
    if (!f.empty()) return f;
  }
}

// Random feasible-ish parameter vector: scaled so the blocks stay PSD.
inline Eigen::VectorXd random_feasible_params(const SdpProblem& prob, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd p(prob.num_real_params());
  for (int i = 0; i < p.size(); ++i) p(i) = u(rng);
  double scale = 1.0;
  for (int attempt = 0; attempt < 60; ++attempt) {
    bool ok = true;
    for (int b = 0; b < prob.num_blocks() && ok; ++b) {
      Eigen::LLT<Eigen::MatrixXcd> llt(prob.block_at(b, scale * p));
      ok = llt.info() == Eigen::Success;
    }
    if (ok) return scale * p;
    scale /= 2.0;
  }
  return Eigen::VectorXd::Zero(prob.num_real_params());
}

}  // namespace trigopt::testing
