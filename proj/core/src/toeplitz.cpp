#include "trigopt/toeplitz.hpp"

#include "trigopt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace trigopt {

DifferenceTable DifferenceTable::build(const RootSystem& rs, const WeightSet& ws) {
  DifferenceTable dt;
  for (const auto& mu : ws.weights())
    for (const auto& nu : ws.weights()) {
      Weight eta = mu - nu;
      auto it = dt.index.find(eta);
      if (it == dt.index.end()) {
        dt.index[eta] = static_cast<int>(dt.diffs.size());
        dt.diffs.push_back(eta);
        dt.count.push_back(1);
      } else {
        ++dt.count[it->second];
      }
    }
  // Canonical order, re-indexed.
  std::vector<int> perm(dt.diffs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return canonical_weight_less(rs, dt.diffs[a], dt.diffs[b]);
  });
  DifferenceTable out;
  for (int i : perm) {
    out.index[dt.diffs[i]] = static_cast<int>(out.diffs.size());
    out.diffs.push_back(dt.diffs[i]);
    out.count.push_back(dt.count[i]);
  }
  return out;
}

Complex ToeplitzMat::t(const Weight& eta) const {
  auto it = t_.find(eta);
  return it == t_.end() ? Complex(0.0) : it->second;
}

Eigen::MatrixXcd ToeplitzMat::dense() const {
  const int n = ws_.size();
  Eigen::MatrixXcd x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = t(ws_.weight(j) - ws_.weight(i));
  return x;
}

Eigen::MatrixXcd ToeplitzMat::dense_in_order(const std::vector<Weight>& order) const {
  const int n = static_cast<int>(order.size());
  Eigen::MatrixXcd x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = t(order[j] - order[i]);
  return x;
}

ToeplitzMat to_toeplitz(const RootSystem& rs, const TrigPoly& f, const WeightSet& ws) {
  DifferenceTable dt = DifferenceTable::build(rs, ws);
  std::map<Weight, Complex> t;
  const double n = ws.size();
  for (const auto& [w, v] : f.coeffs()) {
    auto it = dt.index.find(w);
    if (it == dt.index.end()) {
      int suggest = matrix_order(rs, f);
      throw SupportTooLarge("to_toeplitz: supp(f) exceeds Omega_d - Omega_d; minimal admissible d is " +
                            std::to_string(suggest));
    }
    t[w] = v * n / static_cast<double>(dt.count[it->second]);
  }
  return ToeplitzMat(ws, std::move(t));
}

TrigPoly from_toeplitz(const RootSystem& rs, const ToeplitzMat& X) {
  DifferenceTable dt = DifferenceTable::build(rs, X.ws());
  std::vector<std::pair<Weight, Complex>> terms;
  const double n = X.ws().size();
  for (const auto& [eta, v] : X.data()) {
    auto it = dt.index.find(eta);
    if (it == dt.index.end()) throw Error("from_toeplitz: datum outside the difference set");
    terms.emplace_back(eta, v * static_cast<double>(dt.count[it->second]) / n);
  }
  const int rank = X.ws().size() > 0 ? static_cast<int>(X.ws().weight(0).size()) : 0;
  return TrigPoly::from_terms(rank, terms);
}

ToeplitzMat act_mat(const GroupElement& g, const ToeplitzMat& X) {
  std::map<Weight, Complex> t;
  for (const auto& [eta, v] : X.data()) t[act_weight(g, eta)] = v;
  return ToeplitzMat(X.ws(), std::move(t));
}

Eigen::VectorXcd fourier_frame(const RootSystem& rs, const WeightSet& ws, const Point& u) {
  const int n = ws.size();
  Eigen::VectorXcd e(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) {
    const double phase = 2.0 * std::numbers::pi * pairing(rs, ws.weight(k), u);
    e(k) = scale * Complex(std::cos(phase), std::sin(phase));
  }
  return e;
}

}  // namespace trigopt
