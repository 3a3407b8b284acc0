#pragma once

// The Weyl group as integer matrices on fundamental-weight coordinates.
//
// Conventions, fixed once for the whole code base:
//  * g.mat has the coordinates of g(fw_j) as its j-th ROW, so the action on
//    a weight is the row-vector product  w -> w * mat   (this is the form in
//    which reflection matrices are usually printed).
//  * product(g, h) is the geometric composition g as applied AFTER h, hence
//    mat(g o h) = mat(h) * mat(g); equivalently, the columns-as-images
//    matrices mat^T compose homomorphically.
//  * act_point uses the contragredient mat^{-1} on coroot coordinates, so
//    pairing(g.w, g.u) = pairing(w, u) exactly.

#include "trigopt/root_system.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace trigopt {

using IntMat = std::vector<std::vector<std::int64_t>>;

IntMat imat_identity(int n);
IntMat imat_mul(const IntMat& a, const IntMat& b);
IntMat imat_inverse(const IntMat& a);  // requires det = +-1
IntMat imat_transpose(const IntMat& a);

struct GroupElement {
  IntMat mat;      // rows = images of the fundamental weights
  IntMat inv_mat;  // integral inverse of mat
  std::vector<int> word;  // reduced word, 1-based generator indices
};

// s_i(fw_j) = fw_j - <fw_j, coroot_i> rho_i, expanded in the fw basis. i is 1-based.
GroupElement simple_reflection(const RootSystem& rs, int i);

Weight act_weight(const GroupElement& g, const Weight& w);
Point act_point(const GroupElement& g, const Point& u);

class WeylGroup {
 public:
  static WeylGroup generate(const RootSystem& rs, std::size_t cap = 1024);

  const RootSystem& root_system() const { return rs_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(int i) const { return elements_[i]; }
  int identity() const { return 0; }
  int num_generators() const { return rs_.rank(); }
  int generator(int i) const { return generator_index_[i - 1]; }  // 1-based

  // Index of g o h (h applied first).
  int product(int g, int h) const { return product_[g][h]; }
  int inverse(int g) const { return inverse_[g]; }
  int index_of(const IntMat& m) const;

  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  // Order of the element (smallest k >= 1 with g^k = id).
  int element_order(int g) const;

  std::vector<Weight> orbit(const Weight& w) const;

  Weight act(int g, const Weight& w) const { return act_weight(elements_[g], w); }
  Point act(int g, const Point& u) const { return act_point(elements_[g], u); }

 private:
  RootSystem rs_;
  std::vector<GroupElement> elements_;
  std::vector<int> generator_index_;
  std::map<IntMat, int> index_;
  std::vector<std::vector<int>> product_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

}  // namespace trigopt
