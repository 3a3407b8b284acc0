#pragma once

// Symmetry adapted bases via the projection algorithm: for each irrep i,
//   P^(i)_l = (d_i/|W|) sum_g D^(i)_{1l}(g^{-1}) theta(g),
// an orthonormal basis w_{1,1..m_i} of col(P^(i)_1), and w_{l,j} = P^(i)_l w_{1,j}.
// With unitary representing matrices the full column set is orthonormal, so
// T is unitary and T^dagger X T is block diagonal for every equivariant X,
// with d_i equal m_i x m_i blocks per irrep.

#include "trigopt/rep_theory.hpp"

#include <string>

namespace trigopt {

struct SabLayout {
  int irrep;
  int dim;   // d_i
  int mult;  // m_i
};

class SymmetryAdaptedBasis {
 public:
  // Columns grouped by slice index l (so equivariant matrices block-diagonalize).
  const Eigen::MatrixXcd& T() const { return t_; }
  // Columns grouped by submodule V^(i)_j (so theta(g) block-diagonalizes).
  const Eigen::MatrixXcd& Ttilde() const { return ttilde_; }
  const std::vector<SabLayout>& layout() const { return layout_; }

  // First-slice frame of irrep i: |Omega_d| x m_i, the columns w_{1,1..m_i}.
  const Eigen::MatrixXcd& first_slice(int irrep) const { return slice1_[irrep]; }
  // Column w_{l,j} of irrep i inside T (l, j are 0-based).
  Eigen::VectorXcd column(int irrep, int l, int j) const;

  int omega_size() const { return static_cast<int>(t_.rows()); }
  int d() const { return d_; }
  const std::string& rs_id() const { return rs_id_; }

 private:
  friend SymmetryAdaptedBasis serre_basis(const PermRep& rep, const CharacterTable& ct,
                                          const IrrepMatrices& irreps,
                                          const RootSystem& rs, const WeightSet& ws);
  Eigen::MatrixXcd t_, ttilde_;
  std::vector<SabLayout> layout_;
  std::vector<Eigen::MatrixXcd> slice1_;
  std::vector<int> col_begin_;  // first T-column of each irrep's group
  std::string rs_id_;
  int d_ = 0;
};

SymmetryAdaptedBasis serre_basis(const PermRep& rep, const CharacterTable& ct,
                                 const IrrepMatrices& irreps, const RootSystem& rs,
                                 const WeightSet& ws);

// Blocks X~_i of T^dagger X T, one per irrep (empty when m_i = 0). Verifies
// that X is equivariant: off-block mass and the spread between the d_i
// repeated copies must stay below tol (relative to max|X|), else NotInvariant.
std::vector<Eigen::MatrixXcd> block_project(const SymmetryAdaptedBasis& sab,
                                            const Eigen::MatrixXcd& x, double tol = 1e-9);
std::vector<Eigen::MatrixXcd> block_project(const SymmetryAdaptedBasis& sab,
                                            const ToeplitzMat& x, double tol = 1e-9);

// Fast compression W_1^dagger X W_1 per irrep, no equivariance checks.
std::vector<Eigen::MatrixXcd> block_compress(const SymmetryAdaptedBasis& sab,
                                             const Eigen::MatrixXcd& x);

}  // namespace trigopt
