#include "trigopt/solver.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

namespace trigopt {

namespace {

struct BlockState {
  std::vector<Eigen::LLT<Eigen::MatrixXcd>> chol;
  double logdet = 0.0;
};

// Cholesky of every block; nullopt if any block is not positive definite.
std::optional<BlockState> factor(const SdpProblem& prob, const Eigen::VectorXd& p) {
  BlockState st;
  st.chol.reserve(prob.num_blocks());
  for (int b = 0; b < prob.num_blocks(); ++b) {
    Eigen::LLT<Eigen::MatrixXcd> llt(prob.block_at(b, p));
    if (llt.info() != Eigen::Success) return std::nullopt;
    double ld = 0.0;
    const auto& l = llt.matrixLLT();
    for (int i = 0; i < l.rows(); ++i) {
      const double di = l(i, i).real();
      if (!(di > 0.0)) return std::nullopt;
      ld += std::log(di);
    }
    st.logdet += 2.0 * prob.block_weight(b) * ld;
    st.chol.push_back(std::move(llt));
  }
  return st;
}

double barrier_value(const SdpProblem& prob, const Eigen::VectorXd& p, double mu,
                     const BlockState& st) {
  return prob.objective(p) - mu * st.logdet;
}

double min_block_eigenvalue(const SdpProblem& prob, const Eigen::VectorXd& p) {
  double m = std::numeric_limits<double>::infinity();
  for (int b = 0; b < prob.num_blocks(); ++b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(prob.block_at(b, p));
    m = std::min(m, es.eigenvalues().minCoeff());
  }
  return m;
}

}  // namespace

SolveResult solve(const SdpProblem& prob, const SolverConfig& cfg) {
  const int k = prob.num_real_params();
  SolveResult res;
  res.params = Eigen::VectorXd::Zero(k);

  if (k == 0) {
    // Constant objective: X = I/|Omega_d| is already optimal.
    res.status = SolveStatus::Converged;
    res.bound = prob.objective(res.params);
    res.final_mu = 0.0;
    res.primal_feasibility = min_block_eigenvalue(prob, res.params);
    return res;
  }

  Eigen::VectorXd p = Eigen::VectorXd::Zero(k);
  auto state = factor(prob, p);
  if (!state) {
    res.status = SolveStatus::NumericalFailure;
    return res;
  }

  const double mu_min = cfg.tol / 10.0;
  int total_newton = 0;
  double mu = cfg.mu0;

  for (; mu >= mu_min; mu /= cfg.mu_shrink) {
    for (int inner = 0; inner < 60; ++inner) {
      // Gradient and Hessian of the barrier at p.
      Eigen::VectorXd grad = prob.objective_linear();
      Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(k, k);
      for (int b = 0; b < prob.num_blocks(); ++b) {
        const int m = prob.block_dim(b);
        const double w = prob.block_weight(b);
        Eigen::MatrixXcd binv =
            state->chol[b].solve(Eigen::MatrixXcd::Identity(m, m));
        std::vector<Eigen::MatrixXcd> s(k);
        for (int a = 0; a < k; ++a) {
          s[a] = binv * prob.block_basis(b, a);
          grad(a) -= mu * w * s[a].trace().real();
        }
        for (int a = 0; a < k; ++a)
          for (int c = a; c < k; ++c) {
            const double v = mu * w * (s[a] * s[c]).trace().real();
            hess(a, c) += v;
            if (c != a) hess(c, a) += v;
          }
      }

      hess.diagonal().array() += 1e-12;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
      Eigen::VectorXd step = ldlt.solve(-grad);
      if (!step.allFinite()) {
        res.status = SolveStatus::NumericalFailure;
        res.params = p;
        res.bound = prob.objective(p);
        res.final_mu = mu;
        res.primal_feasibility = min_block_eigenvalue(prob, p);
        return res;
      }

      const double decrement_sq = step.dot(hess * step);
      if (decrement_sq < cfg.newton_tol) break;

      // Backtracking line search keeping all blocks positive definite.
      const double phi0 = barrier_value(prob, p, mu, *state);
      const double slope = grad.dot(step);
      double t = 1.0;
      bool moved = false;
      while (t >= 1e-14) {
        Eigen::VectorXd q = p + t * step;
        auto next = factor(prob, q);
        if (next && barrier_value(prob, q, mu, *next) <= phi0 + 0.25 * t * slope) {
          p = std::move(q);
          state = std::move(next);
          moved = true;
          break;
        }
        t /= 2.0;
      }
      if (!moved) break;  // stalled at this centering accuracy

      if (++total_newton >= cfg.max_iter) {
        res.status = SolveStatus::MaxIterations;
        res.params = p;
        res.bound = prob.objective(p);
        res.iterations = total_newton;
        res.final_mu = mu;
        res.primal_feasibility = min_block_eigenvalue(prob, p);
        return res;
      }
    }
    res.final_mu = mu;
  }

  res.status = SolveStatus::Converged;
  res.params = p;
  res.bound = prob.objective(p);
  res.iterations = total_newton;
  res.primal_feasibility = min_block_eigenvalue(prob, p);
  return res;
}

}  // namespace trigopt
