#pragma once

// The permutation representation theta of W on C^{Omega_d}, character tables
// and unitary representing matrices for the supported Weyl groups (cyclic C2,
// dihedral D_3/D_4/D_6, and direct products thereof), isotypic multiplicities
// and projections.

#include "trigopt/toeplitz.hpp"
#include "trigopt/weight_set.hpp"
#include "trigopt/weyl_group.hpp"

#include <Eigen/Dense>

#include <vector>

namespace trigopt {

struct PermRep {
  int group_size = 0;
  int set_size = 0;
  std::vector<std::vector<int>> perm;  // perm[g][k] = index of g(w_k) in Omega_d
  std::vector<int> inv;                // group inverse lookup

  // theta(g) as a permutation matrix: theta(g) e_k = e_{perm[g][k]}.
  Eigen::MatrixXd matrix(int g) const;
  int fixed_points(int g) const;
};

// Throws WeightSetNotStable if a generator moves Omega_d off itself.
PermRep build_perm_rep(const WeylGroup& W, const WeightSet& ws);

struct CharacterTable {
  std::vector<std::vector<int>> classes;  // element indices, canonical order
  std::vector<int> class_of;
  Eigen::MatrixXcd chars;  // chars(i, c) = chi_i on class c
  std::vector<int> dims;   // d_i = chi_i(id)

  int h() const { return static_cast<int>(dims.size()); }
  Complex value(int irrep, int element) const { return chars(irrep, class_of[element]); }
};

// Canonical irrep order per irreducible component: sign, 2-dim irreps by
// ascending rotation index, the remaining 1-dim irreps (dihedral of even
// order), trivial; lexicographic tensor order for direct sums. For W(A2) this
// is the order (sign, reflection, trivial).
CharacterTable character_table(const WeylGroup& W);

struct IrrepMatrices {
  std::vector<std::vector<Eigen::MatrixXcd>> mats;  // mats[i][g], unitary, d_i x d_i

  int dim(int i) const { return static_cast<int>(mats[i][0].rows()); }
};

IrrepMatrices irrep_matrices(const WeylGroup& W, const CharacterTable& ct);

// m_i = (1/|W|) sum_g conj(chi_i(g)) tr(theta(g)), with integrality check.
std::vector<int> multiplicities(const PermRep& rep, const CharacterTable& ct);

// P^(i) = (d_i/|W|) sum_g chi_i(g^{-1}) theta(g).
Eigen::MatrixXcd isotypic_projection(const PermRep& rep, const CharacterTable& ct, int irrep);

}  // namespace trigopt
