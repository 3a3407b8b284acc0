#pragma once

// The three equivalent relaxations of min_u f(u):
//   dense:     min tr(mat(f) X)  over Hermitian Toeplitz X >= 0, tr X = 1
//   invariant: the same over the W-fixed Toeplitz matrices
//   block:     the same through the symmetry adapted basis, with one PSD
//              constraint of size m_i per irrep
// The trace constraint fixes t_0 = 1/|Omega_d|; the remaining Toeplitz data
// is parameterized by orbit representatives of the difference set, each a
// real or complex free parameter, so X(p) is affine and p = 0 is the
// strictly feasible point X = I/|Omega_d|.

#include "trigopt/symmetry_basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trigopt {

enum class SdpMode { Dense, Invariant, Block };

std::string to_string(SdpMode mode);

struct SdpParam {
  Weight rep;   // orbit representative eta
  bool real;    // forced real: -eta lies in the W-orbit of eta
  int offset;   // slot in the real parameter vector (re; im at offset+1 if complex)
};

class SdpProblem {
 public:
  SdpMode mode() const { return mode_; }
  int d() const { return d_; }
  const WeightSet& ws() const { return ws_; }
  const std::vector<SdpParam>& params() const { return params_; }
  int num_real_params() const { return num_real_; }

  int num_blocks() const { return static_cast<int>(block_const_.size()); }
  int block_dim(int b) const { return static_cast<int>(block_const_[b].rows()); }
  int block_weight(int b) const { return block_weight_[b]; }
  const Eigen::MatrixXcd& block_basis(int b, int k) const { return block_basis_[b][k]; }
  Eigen::MatrixXcd block_at(int b, const Eigen::VectorXd& p) const;

  double objective_const() const { return obj_const_; }
  const Eigen::VectorXd& objective_linear() const { return obj_lin_; }
  double objective(const Eigen::VectorXd& p) const;

  // Toeplitz datum t_eta at parameter vector p (eta any difference; t_0 is fixed).
  Complex param_value(const Eigen::VectorXd& p, const Weight& eta) const;

  // Full Toeplitz matrix X(p) in the canonical Omega_d order.
  Eigen::MatrixXcd toeplitz_at(const Eigen::VectorXd& p) const;

 private:
  friend SdpProblem build_sdp(const RootSystem& rs, const WeylGroup& W, const TrigPoly& f,
                              int d, SdpMode mode, const SymmetryAdaptedBasis* sab);
  SdpMode mode_ = SdpMode::Dense;
  int d_ = 0;
  WeightSet ws_;
  std::vector<SdpParam> params_;
  int num_real_ = 0;
  double obj_const_ = 0.0;
  Eigen::VectorXd obj_lin_;
  std::vector<int> block_weight_;
  std::vector<Eigen::MatrixXcd> block_const_;
  std::vector<std::vector<Eigen::MatrixXcd>> block_basis_;
  // for toeplitz_at / param_value
  std::unordered_map<Weight, std::pair<int, bool>, WeightHash> member_;  // eta -> (param, conjugated)
};

// mode Dense ignores sab; Invariant/Block require f to be W-invariant; Block
// additionally requires a basis built for the same (root system, d).
SdpProblem build_sdp(const RootSystem& rs, const WeylGroup& W, const TrigPoly& f,
                     int d, SdpMode mode, const SymmetryAdaptedBasis* sab = nullptr);

enum class SolveStatus { Converged, MaxIterations, NumericalFailure };

std::string to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::NumericalFailure;
  double bound = 0.0;
  Eigen::VectorXd params;
  int iterations = 0;
  double final_mu = 0.0;
  double primal_feasibility = 0.0;  // smallest block eigenvalue at the solution
};

struct Certificate {
  double value;           // tr(mat(f) X(p)), an upper bound for the SDP minimum
  double min_eigenvalue;  // feasibility margin
};

// Re-evaluates objective and block spectra at the given parameters. Throws
// InfeasibleCertificate when a block is more than 1e-9 indefinite.
Certificate certify(const SdpProblem& prob, const Eigen::VectorXd& p);
Certificate certify(const SdpProblem& prob, const SolveResult& result);

struct BlockSizeReport {
  int omega_size = 0;
  int group_order = 0;
  long long dense = 0;                     // |Omega_d|^2
  std::optional<double> chebyshev;         // (|Omega_d|^2 + n^2 |Omega_{d-n}|^2)/|W|^2
  long long sab_weighted = 0;              // sum_i d_i m_i^2
  long long sab_real_entries = 0;          // sum over distinct blocks m_i^2
  std::vector<std::pair<int, int>> blocks; // (d_i, m_i)
};

BlockSizeReport block_size_report(const RootSystem& rs, const WeylGroup& W, int d,
                                  const SymmetryAdaptedBasis* sab = nullptr);

}  // namespace trigopt
