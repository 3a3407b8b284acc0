#pragma once

// Small exact-rational helpers for the root-system layer. All plate data,
// Gram/Cartan matrices and Voronoi membership tests are evaluated over Q so
// that boundary decisions need no floating point tolerance.

#include <boost/rational.hpp>

#include <cstdint>
#include <vector>

namespace trigopt {

using Rational = boost::rational<long long>;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec scale(const Rational& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Solves A x = b by Gaussian elimination over Q. A must be square and
// invertible; used only on tiny (rank <= 4) systems.
RatVec solve(RatMat a, RatVec b);

// Inverse of a small invertible rational matrix.
RatMat inverse(const RatMat& a);

}  // namespace trigopt
