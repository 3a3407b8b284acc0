#pragma once

// Truncated weight sets Omega_d = Omega n d*Vor(Lambda) and the degree
// filtration they induce. Membership is decided in exact rational arithmetic
// (closed cell: boundary points are in), componentwise over the irreducible
// summands since the Voronoi cell of an orthogonal direct sum is the product
// of the component cells.

#include "trigopt/root_system.hpp"
#include "trigopt/weyl_group.hpp"

#include <unordered_map>
#include <vector>

namespace trigopt {

class TrigPoly;

class WeightSet {
 public:
  WeightSet() = default;
  WeightSet(int d, std::vector<Weight> weights);

  int d() const { return d_; }
  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(int i) const { return weights_[i]; }
  bool contains(const Weight& w) const { return index_.count(w) > 0; }
  int index_of(const Weight& w) const;

 private:
  int d_ = 0;
  std::vector<Weight> weights_;
  std::unordered_map<Weight, int, WeightHash> index_;
};

// True iff w lies in the closed scaled cell d*Vor(Lambda).
bool in_scaled_voronoi(const RootSystem& rs, const Weight& w, int d);

// All lattice points of d*Vor(Lambda) in canonical order (norm, then
// lexicographic coordinates). Asserts W-stability of the result.
WeightSet weight_set(const RootSystem& rs, const WeylGroup& W, int d);

// Canonical comparison used to order weight sets.
bool canonical_weight_less(const RootSystem& rs, const Weight& a, const Weight& b);

// Minimal d with supp(f)\{0} in Omega_d. Throws ZeroPolynomial.
int degree(const RootSystem& rs, const TrigPoly& f);

// Minimal d with supp(f) in Omega_d + Omega_d (explicit Minkowski sum, which
// can be strictly smaller than Omega_{2d}). Throws ZeroPolynomial.
int matrix_order(const RootSystem& rs, const TrigPoly& f);

}  // namespace trigopt
