#include "trigopt/symmetry_basis.hpp"

#include "trigopt/errors.hpp"

#include <cmath>

namespace trigopt {

Eigen::VectorXcd SymmetryAdaptedBasis::column(int irrep, int l, int j) const {
  const auto& lay = layout_[irrep];
  return t_.col(col_begin_[irrep] + l * lay.mult + j);
}

namespace {

Eigen::MatrixXcd projection_slice(const PermRep& rep, const IrrepMatrices& irreps,
                                  int irrep, int l) {
  const int n = rep.set_size;
  const int di = static_cast<int>(irreps.mats[irrep][0].rows());
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(n, n);
  for (int g = 0; g < rep.group_size; ++g) {
    const Complex coeff = irreps.mats[irrep][rep.inv[g]](0, l);
    if (coeff == Complex(0.0)) continue;
    for (int k = 0; k < n; ++k) p(rep.perm[g][k], k) += coeff;
  }
  p *= static_cast<double>(di) / static_cast<double>(rep.group_size);
  return p;
}

// Modified Gram-Schmidt over the columns, rank tolerance relative to the
// largest initial column norm. Deterministic for a fixed column order.
Eigen::MatrixXcd orthonormal_column_basis(const Eigen::MatrixXcd& a, double rel_tol) {
  double max_norm = 0.0;
  for (int j = 0; j < a.cols(); ++j) max_norm = std::max(max_norm, a.col(j).norm());
  std::vector<Eigen::VectorXcd> basis;
  for (int j = 0; j < a.cols(); ++j) {
    Eigen::VectorXcd v = a.col(j);
    for (const auto& b : basis) v -= b.dot(v) * b;
    // second pass for numerical orthogonality
    for (const auto& b : basis) v -= b.dot(v) * b;
    if (v.norm() > rel_tol * max_norm) basis.push_back(v.normalized());
  }
  Eigen::MatrixXcd out(a.rows(), static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) out.col(static_cast<int>(j)) = basis[j];
  return out;
}

}  // namespace

SymmetryAdaptedBasis serre_basis(const PermRep& rep, const CharacterTable& ct,
                                 const IrrepMatrices& irreps, const RootSystem& rs,
                                 const WeightSet& ws) {
  const std::vector<int> mult = multiplicities(rep, ct);
  const int n = rep.set_size;

  SymmetryAdaptedBasis sab;
  sab.rs_id_ = rs.id().str();
  sab.d_ = ws.d();
  sab.t_.resize(n, n);
  sab.ttilde_.resize(n, n);
  sab.slice1_.resize(ct.h());
  sab.col_begin_.resize(ct.h());

  int col = 0;
  for (int i = 0; i < ct.h(); ++i) {
    const int di = ct.dims[i];
    const int mi = mult[i];
    sab.layout_.push_back({i, di, mi});
    sab.col_begin_[i] = col;
    if (mi == 0) {
      sab.slice1_[i].resize(n, 0);
      continue;
    }

    Eigen::MatrixXcd p1 = projection_slice(rep, irreps, i, 0);
    Eigen::MatrixXcd w1 = orthonormal_column_basis(p1, 1e-8);
    if (w1.cols() != mi)
      throw RankDeficiency("serre_basis: irrep " + std::to_string(i) + " slice has rank " +
                           std::to_string(w1.cols()) + ", expected " + std::to_string(mi));
    sab.slice1_[i] = w1;

    std::vector<Eigen::MatrixXcd> slices(di);
    slices[0] = w1;
    for (int l = 1; l < di; ++l)
      slices[l] = projection_slice(rep, irreps, i, l) * w1;

    for (int l = 0; l < di; ++l)
      for (int j = 0; j < mi; ++j) sab.t_.col(col + l * mi + j) = slices[l].col(j);
    for (int j = 0; j < mi; ++j)
      for (int l = 0; l < di; ++l) sab.ttilde_.col(col + j * di + l) = slices[l].col(j);
    col += di * mi;
  }
  if (col != n) throw RankDeficiency("serre_basis: columns do not fill the space");
  return sab;
}

std::vector<Eigen::MatrixXcd> block_project(const SymmetryAdaptedBasis& sab,
                                            const Eigen::MatrixXcd& x, double tol) {
  const int n = sab.omega_size();
  if (x.rows() != n || x.cols() != n) throw DimensionMismatch("block_project: size mismatch");
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  Eigen::MatrixXcd y = sab.T().adjoint() * x * sab.T();

  std::vector<Eigen::MatrixXcd> blocks;
  // Zero out the in-block region copy by copy, then anything left is off-block mass.
  Eigen::MatrixXcd resid = y;
  int col = 0;
  for (const auto& lay : sab.layout()) {
    if (lay.mult == 0) {
      blocks.emplace_back(0, 0);
      continue;
    }
    Eigen::MatrixXcd first = y.block(col, col, lay.mult, lay.mult);
    for (int l = 0; l < lay.dim; ++l) {
      const int off = col + l * lay.mult;
      Eigen::MatrixXcd copy = y.block(off, off, lay.mult, lay.mult);
      if ((copy - first).cwiseAbs().maxCoeff() > tol * scale)
        throw NotInvariant("block_project: repeated blocks disagree");
      resid.block(off, off, lay.mult, lay.mult).setZero();
    }
    blocks.push_back(std::move(first));
    col += lay.dim * lay.mult;
  }
  if (resid.cwiseAbs().maxCoeff() > tol * scale)
    throw NotInvariant("block_project: off-block mass above tolerance");
  return blocks;
}

std::vector<Eigen::MatrixXcd> block_project(const SymmetryAdaptedBasis& sab,
                                            const ToeplitzMat& x, double tol) {
  return block_project(sab, x.dense(), tol);
}

std::vector<Eigen::MatrixXcd> block_compress(const SymmetryAdaptedBasis& sab,
                                             const Eigen::MatrixXcd& x) {
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& lay : sab.layout()) {
    const auto& w1 = sab.first_slice(lay.irrep);
    blocks.push_back(w1.adjoint() * x * w1);
  }
  return blocks;
}

}  // namespace trigopt
