#pragma once

// Crystallographic root systems of rank <= 2 and their direct sums, with the
// plate data (simple roots, fundamental weights, highest root) stored as
// exact rationals in ambient coordinates. Everything else (coroots, Cartan
// matrix, Gram matrices) is derived, so the plate data and the defining
// identities cross-check each other.
//
// Coordinates: a Weight holds integer coordinates in the fundamental-weight
// basis; a Point holds real coordinates in the simple-coroot basis. Since
// <fw_i, coroot_j> = delta_ij, the geometric pairing <w, u> is the plain dot
// product of the two coordinate vectors.

#include "trigopt/rational.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace trigopt {

enum class Family : char { A = 'A', B = 'B', C = 'C', G = 'G' };

struct RootSystemId {
  struct Component {
    Family family;
    int rank;
    bool operator==(const Component&) const = default;
  };

  std::vector<Component> components;

  // Accepts "A1", "A2", "B2", "C2", "G2" and sums like "A1xA1" or "a2xg2"
  // (case-insensitive, 'x' separator). Throws UnsupportedType otherwise.
  static RootSystemId parse(std::string_view s);

  std::string str() const;
  int rank() const;
  bool operator==(const RootSystemId&) const = default;
};

struct Weight {
  std::vector<std::int64_t> c;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> coords) : c(std::move(coords)) {}

  std::size_t size() const { return c.size(); }
  bool is_zero() const;

  Weight operator-() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  bool operator==(const Weight&) const = default;
  // Lexicographic; the geometry-aware canonical order lives in weight_set.hpp.
  bool operator<(const Weight& o) const { return c < o.c; }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

struct Point {
  std::vector<double> c;

  Point() = default;
  explicit Point(std::vector<double> coords) : c(std::move(coords)) {}
  std::size_t size() const { return c.size(); }
};

class RootSystem {
 public:
  // Coordinate slice of one irreducible summand, plus the lattice data the
  // Voronoi tests need. The periodicity lattice is spanned by the simple
  // coroots for rank-2 components and by the root itself for rank 1 (so the
  // A1 cell is [-1,1], matching the normalization rho = 2, Omega = Z).
  struct Component {
    RootSystemId::Component type;
    int coord_begin = 0;  // fw-coordinate slice [coord_begin, coord_end)
    int coord_end = 0;
    RatMat weight_gram;        // Gram of the slice fundamental weights
    RatMat period_gram;       // Gram of the periodicity basis
    std::vector<std::vector<std::int64_t>> period_in_coroot;  // basis in coroot coords
  };

  const RootSystemId& id() const { return id_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }

  const std::vector<RatVec>& roots() const { return roots_; }
  const std::vector<RatVec>& base() const { return base_; }
  const std::vector<RatVec>& coroots() const { return coroots_; }
  const std::vector<RatVec>& fweights() const { return fweights_; }
  const RatVec& highest_root() const { return highest_root_; }

  const std::vector<std::vector<std::int64_t>>& cartan() const { return cartan_; }
  const RatMat& gram() const { return gram_; }
  const RatMat& coroot_gram() const { return coroot_gram_; }
  const std::vector<Component>& components() const { return components_; }

  // w^T G w, exact.
  Rational norm_sq(const Weight& w) const;

  // fw-basis coordinates of an ambient vector: c_k = <v, coroot_k>.
  RatVec weight_coords(const RatVec& ambient) const;

 private:
  friend RootSystem build_root_system(const RootSystemId& id);
  friend RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

  RootSystemId id_;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<RatVec> roots_;
  std::vector<RatVec> base_;
  std::vector<RatVec> coroots_;
  std::vector<RatVec> fweights_;
  RatVec highest_root_;
  std::vector<std::vector<std::int64_t>> cartan_;
  RatMat gram_;
  RatMat coroot_gram_;
  std::vector<Component> components_;
};

RootSystem build_root_system(const RootSystemId& id);
inline RootSystem build_root_system(std::string_view id) {
  return build_root_system(RootSystemId::parse(id));
}

RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

// <w, u> = sum_i w_i u_i. Throws DimensionMismatch.
double pairing(const RootSystem& rs, const Weight& w, const Point& u);

Eigen::MatrixXd weight_gram(const RootSystem& rs);
double weight_norm_sq(const RootSystem& rs, const Weight& w);

}  // namespace trigopt
