#pragma once

// Sparse real-valued trigonometric polynomials f(u) = sum f_w e^{2 pi i <w,u>}
// with conjugate-symmetric coefficients f_{-w} = conj(f_w). The coefficient
// map is kept symmetric at all times and stores no explicit zeros.

#include "trigopt/root_system.hpp"
#include "trigopt/weyl_group.hpp"

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace trigopt {

using Complex = std::complex<double>;

class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(int rank) : rank_(rank) {}

  // Accumulates duplicate weights, auto-completes missing conjugate terms and
  // rejects inconsistent ones (f_{-w} != conj(f_w)).
  static TrigPoly from_terms(int rank,
                             const std::vector<std::pair<Weight, Complex>>& terms);

  int rank() const { return rank_; }
  bool empty() const { return coeffs_.empty(); }
  const std::map<Weight, Complex>& coeffs() const { return coeffs_; }
  Complex coeff(const Weight& w) const;

  // Sets f_w and f_{-w} = conj(v) together.
  void set_coeff(const Weight& w, Complex v);

  void prune(double tol);

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator*=(double s);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator*(double s, TrigPoly f) { return f *= s; }

  bool operator==(const TrigPoly&) const = default;

 private:
  int rank_ = 0;
  std::map<Weight, Complex> coeffs_;
};

// f(u); asserts the imaginary part of the sum is negligible and drops it.
double evaluate(const RootSystem& rs, const TrigPoly& f, const Point& u);

// (g.f)_{g(w)} = f_w.
TrigPoly act(const GroupElement& g, const TrigPoly& f);

// Invariance under the generators (hence under all of W).
bool is_invariant(const WeylGroup& W, const TrigPoly& f, double tol = 1e-9);

// Reynolds average (1/|W|) sum_g g.f.
TrigPoly symmetrize(const WeylGroup& W, const TrigPoly& f);

}  // namespace trigopt
