#pragma once

// Hermitian Toeplitz representation of a trigonometric polynomial over the
// index set Omega_d, with the unique equal-spread choice
//   t_eta = |Omega_d| f_eta / N_eta,  N_eta = #{(mu,nu) : mu - nu = eta}.
// The dense view is oriented as X_{mu,nu} = t_{nu-mu} so that the quadratic
// identity f(u) = E_d(u)^dagger X E_d(u) holds for complex coefficients too
// (for real coefficient data the two orientations print identically).

#include "trigopt/trig_poly.hpp"
#include "trigopt/weight_set.hpp"

#include <Eigen/Dense>

#include <map>
#include <vector>

namespace trigopt {

// Differences Omega_d - Omega_d in canonical order with their pair counts.
struct DifferenceTable {
  std::vector<Weight> diffs;
  std::unordered_map<Weight, int, WeightHash> index;
  std::vector<int> count;  // N_eta

  static DifferenceTable build(const RootSystem& rs, const WeightSet& ws);
};

class ToeplitzMat {
 public:
  ToeplitzMat() = default;
  ToeplitzMat(WeightSet ws, std::map<Weight, Complex> t)
      : ws_(std::move(ws)), t_(std::move(t)) {}

  const WeightSet& ws() const { return ws_; }
  const std::map<Weight, Complex>& data() const { return t_; }
  Complex t(const Weight& eta) const;

  Eigen::MatrixXcd dense() const;
  // Rows/columns re-indexed by the given weight list (e.g. a paper's ordering).
  Eigen::MatrixXcd dense_in_order(const std::vector<Weight>& order) const;

 private:
  WeightSet ws_;
  std::map<Weight, Complex> t_;
};

// Throws SupportTooLarge (naming the minimal admissible d) if supp(f) is not
// contained in Omega_d - Omega_d.
ToeplitzMat to_toeplitz(const RootSystem& rs, const TrigPoly& f, const WeightSet& ws);

TrigPoly from_toeplitz(const RootSystem& rs, const ToeplitzMat& X);

// (g*X)_{mu,nu} = X_{g^{-1}mu, g^{-1}nu}; on Toeplitz data t_eta -> t_{g^{-1}eta}.
ToeplitzMat act_mat(const GroupElement& g, const ToeplitzMat& X);

// E_d(u): entries e^{2 pi i <w_k, u>} / sqrt(|Omega_d|) in canonical order.
Eigen::VectorXcd fourier_frame(const RootSystem& rs, const WeightSet& ws, const Point& u);

}  // namespace trigopt
