#include "trigopt/sdp.hpp"

#include "trigopt/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <set>

namespace trigopt {

std::string to_string(SdpMode mode) {
  switch (mode) {
    case SdpMode::Dense: return "dense";
    case SdpMode::Invariant: return "invariant";
    case SdpMode::Block: return "block";
  }
  return "?";
}

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterations: return "max_iterations";
    case SolveStatus::NumericalFailure: return "numerical_failure";
  }
  return "?";
}

Eigen::MatrixXcd SdpProblem::block_at(int b, const Eigen::VectorXd& p) const {
  Eigen::MatrixXcd x = block_const_[b];
  for (int k = 0; k < num_real_; ++k)
    if (p(k) != 0.0) x += p(k) * block_basis_[b][k];
  return x;
}

double SdpProblem::objective(const Eigen::VectorXd& p) const {
  return obj_const_ + obj_lin_.dot(p);
}

Complex SdpProblem::param_value(const Eigen::VectorXd& p, const Weight& eta) const {
  if (eta.is_zero()) return Complex(1.0 / ws_.size(), 0.0);
  auto it = member_.find(eta);
  if (it == member_.end()) return Complex(0.0);
  const auto& par = params_[it->second.first];
  Complex v = par.real ? Complex(p(par.offset), 0.0)
                       : Complex(p(par.offset), p(par.offset + 1));
  return it->second.second ? std::conj(v) : v;
}

Eigen::MatrixXcd SdpProblem::toeplitz_at(const Eigen::VectorXd& p) const {
  const int n = ws_.size();
  Eigen::MatrixXcd x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = param_value(p, ws_.weight(j) - ws_.weight(i));
  return x;
}

SdpProblem build_sdp(const RootSystem& rs, const WeylGroup& W, const TrigPoly& f,
                     int d, SdpMode mode, const SymmetryAdaptedBasis* sab) {
  if (f.empty()) throw ZeroPolynomial("build_sdp: zero polynomial");
  const int mo = matrix_order(rs, f);
  if (d < mo)
    throw DegreeTooSmall("build_sdp: d = " + std::to_string(d) +
                         " below matrix order " + std::to_string(mo));
  if (mode != SdpMode::Dense && !is_invariant(W, f))
    throw NotInvariant("build_sdp: f is not W-invariant (pass --symmetrize or use dense mode)");

  SdpProblem prob;
  prob.mode_ = mode;
  prob.d_ = d;
  prob.ws_ = weight_set(rs, W, d);
  const int n = prob.ws_.size();

  if (mode == SdpMode::Block) {
    if (sab == nullptr) throw BasisMismatch("build_sdp: block mode needs a basis");
    if (sab->rs_id() != rs.id().str() || sab->d() != d || sab->omega_size() != n)
      throw BasisMismatch("build_sdp: basis was built for a different (root system, d)");
  }

  // Group the nonzero differences into parameter orbits. In dense mode the
  // orbit of eta is {eta}; otherwise it is the W-orbit. The parameter is real
  // iff -eta lies in the group orbit.
  DifferenceTable dt = DifferenceTable::build(rs, prob.ws_);
  std::set<Weight> visited;
  struct Orbit {
    Weight rep;
    bool real;
    std::vector<Weight> half;  // the W-orbit of rep; -half is the conjugate part
  };
  std::vector<Orbit> orbits;
  for (const auto& eta : dt.diffs) {
    if (eta.is_zero() || visited.count(eta)) continue;
    std::vector<Weight> group_orbit =
        mode == SdpMode::Dense ? std::vector<Weight>{eta} : W.orbit(eta);
    bool real = false;
    for (const auto& x : group_orbit)
      if (x == -eta) {
        real = true;
        break;
      }
    for (const auto& x : group_orbit) {
      visited.insert(x);
      visited.insert(-x);
    }
    orbits.push_back({eta, real, std::move(group_orbit)});
  }

  int offset = 0;
  for (const auto& o : orbits) {
    prob.params_.push_back({o.rep, o.real, offset});
    offset += o.real ? 1 : 2;
  }
  prob.num_real_ = offset;

  // Hermitian basis matrix per real slot, as a dense Toeplitz pattern.
  auto pattern = [&](const std::vector<Weight>& etas) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    std::set<Weight> in(etas.begin(), etas.end());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (in.count(prob.ws_.weight(j) - prob.ws_.weight(i))) a(i, j) = 1.0;
    return a;
  };

  std::vector<Eigen::MatrixXcd> basis(prob.num_real_);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& o = orbits[k];
    const int off = prob.params_[k].offset;
    if (o.real) {
      // t equal on the symmetric orbit: the pattern is already Hermitian.
      std::vector<Weight> full = o.half;
      for (const auto& x : o.half)
        if (!std::count(full.begin(), full.end(), -x)) full.push_back(-x);
      basis[off] = pattern(full);
      for (const auto& x : full) prob.member_[x] = {static_cast<int>(k), false};
    } else {
      Eigen::MatrixXcd a = pattern(o.half);
      basis[off] = a + a.adjoint();
      basis[off + 1] = Complex(0.0, 1.0) * a - Complex(0.0, 1.0) * a.adjoint();
      for (const auto& x : o.half) {
        prob.member_[x] = {static_cast<int>(k), false};
        prob.member_[-x] = {static_cast<int>(k), true};
      }
    }
  }

  ToeplitzMat cmat = to_toeplitz(rs, f, prob.ws_);
  Eigen::MatrixXcd c = cmat.dense();

  if (mode == SdpMode::Block) {
    // F~_i from T^dagger mat(f) T with the off-block residual asserted.
    std::vector<Eigen::MatrixXcd> fblocks = block_project(*sab, c, 1e-9);
    const auto& layout = sab->layout();
    for (const auto& lay : layout) {
      if (lay.mult == 0) continue;
      prob.block_weight_.push_back(lay.dim);
      prob.block_const_.push_back(Eigen::MatrixXcd::Identity(lay.mult, lay.mult) /
                                  static_cast<double>(n));
    }
    prob.block_basis_.assign(prob.block_const_.size(), {});
    int bi = 0;
    for (const auto& lay : layout) {
      if (lay.mult == 0) continue;
      const auto& w1 = sab->first_slice(lay.irrep);
      prob.block_basis_[bi].resize(prob.num_real_);
      for (int k = 0; k < prob.num_real_; ++k) {
        Eigen::MatrixXcd g = w1.adjoint() * basis[k] * w1;
        prob.block_basis_[bi][k] = 0.5 * (g + g.adjoint().eval());
      }
      ++bi;
    }
    // Objective via the block route: sum_i d_i tr(F~_i B_i(p)).
    prob.obj_const_ = 0.0;
    prob.obj_lin_ = Eigen::VectorXd::Zero(prob.num_real_);
    bi = 0;
    for (const auto& lay : layout) {
      if (lay.mult == 0) continue;
      const auto& fb = fblocks[lay.irrep];
      prob.obj_const_ += lay.dim * (fb * prob.block_const_[bi]).trace().real();
      for (int k = 0; k < prob.num_real_; ++k)
        prob.obj_lin_(k) += lay.dim * (fb * prob.block_basis_[bi][k]).trace().real();
      ++bi;
    }
  } else {
    prob.block_weight_ = {1};
    prob.block_const_ = {Eigen::MatrixXcd::Identity(n, n) / static_cast<double>(n)};
    prob.block_basis_ = {std::move(basis)};
    prob.obj_const_ = (c * prob.block_const_[0]).trace().real();
    prob.obj_lin_ = Eigen::VectorXd::Zero(prob.num_real_);
    for (int k = 0; k < prob.num_real_; ++k)
      prob.obj_lin_(k) = (c * prob.block_basis_[0][k]).trace().real();
  }
  return prob;
}

Certificate certify(const SdpProblem& prob, const Eigen::VectorXd& p) {
  double min_eig = std::numeric_limits<double>::infinity();
  for (int b = 0; b < prob.num_blocks(); ++b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(prob.block_at(b, p));
    min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
  }
  if (min_eig < -1e-9)
    throw InfeasibleCertificate("certify: block eigenvalue " + std::to_string(min_eig));
  return {prob.objective(p), min_eig};
}

Certificate certify(const SdpProblem& prob, const SolveResult& result) {
  return certify(prob, result.params);
}

BlockSizeReport block_size_report(const RootSystem& rs, const WeylGroup& W, int d,
                                  const SymmetryAdaptedBasis* sab) {
  if (d < 0) throw Error("block_size_report: d must be nonnegative");
  WeightSet ws = weight_set(rs, W, d);
  BlockSizeReport r;
  r.omega_size = ws.size();
  r.group_order = W.size();
  r.dense = static_cast<long long>(ws.size()) * ws.size();

  std::vector<int> dims, mult;
  if (sab != nullptr && sab->d() == d && sab->rs_id() == rs.id().str()) {
    for (const auto& lay : sab->layout()) {
      dims.push_back(lay.dim);
      mult.push_back(lay.mult);
    }
  } else {
    CharacterTable ct = character_table(W);
    PermRep rep = build_perm_rep(W, ws);
    std::vector<int> m = multiplicities(rep, ct);
    dims = ct.dims;
    mult = m;
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    r.blocks.emplace_back(dims[i], mult[i]);
    r.sab_weighted += static_cast<long long>(dims[i]) * mult[i] * mult[i];
    if (mult[i] > 0) r.sab_real_entries += static_cast<long long>(mult[i]) * mult[i];
  }

  const int n = rs.rank();
  if (d >= n) {
    WeightSet small = weight_set(rs, W, d - n);
    const double wd = ws.size(), wdn = small.size(), order = W.size();
    r.chebyshev = (wd * wd + n * n * wdn * wdn) / (order * order);
  }
  return r;
}

}  // namespace trigopt
