#include "trigopt/weight_set.hpp"

#include "trigopt/errors.hpp"
#include "trigopt/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace trigopt {

WeightSet::WeightSet(int d, std::vector<Weight> weights)
    : d_(d), weights_(std::move(weights)) {
  for (int i = 0; i < static_cast<int>(weights_.size()); ++i) index_[weights_[i]] = i;
}

int WeightSet::index_of(const Weight& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error("WeightSet: weight not in set");
  return it->second;
}

namespace {

double min_eigenvalue(const RatMat& g) {
  if (g.size() == 1) return to_double(g[0][0]);
  const double a = to_double(g[0][0]);
  const double b = to_double(g[0][1]);
  const double c = to_double(g[1][1]);
  return 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + b * b);
}

// 2<w, lambda> <= d ||lambda||^2 for all lattice vectors lambda of one
// component's periodicity lattice. A violating lambda has
// ||lambda|| <= 2||w||/d, which bounds the coefficient box.
bool component_in_cell(const RootSystem::Component& comp,
                       const std::vector<std::int64_t>& wslice, int d,
                       double wnorm) {
  const int m = static_cast<int>(comp.period_in_coroot.size());
  bool zero = std::all_of(wslice.begin(), wslice.end(),
                          [](std::int64_t x) { return x == 0; });
  if (d == 0 || zero) return zero;

  const int K =
      static_cast<int>(std::ceil((2.0 * wnorm / d) /
                                 std::sqrt(min_eigenvalue(comp.period_gram)))) + 1;

  std::vector<std::int64_t> coeff(m, -K);
  while (true) {
    bool all_zero = std::all_of(coeff.begin(), coeff.end(),
                                [](std::int64_t x) { return x == 0; });
    if (!all_zero) {
      // lambda in coroot coordinates of the slice.
      Rational pair(0), nsq(0);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          nsq += Rational(coeff[i]) * comp.period_gram[i][j] * Rational(coeff[j]);
      std::vector<std::int64_t> lam(wslice.size(), 0);
      for (int i = 0; i < m; ++i)
        for (std::size_t k = 0; k < lam.size(); ++k)
          lam[k] += coeff[i] * comp.period_in_coroot[i][k];
      std::int64_t p = 0;
      for (std::size_t k = 0; k < lam.size(); ++k) p += wslice[k] * lam[k];
      pair = Rational(p);
      if (Rational(2) * pair > Rational(d) * nsq) return false;
    }
    int pos = 0;
    while (pos < m && coeff[pos] == K) coeff[pos++] = -K;
    if (pos == m) break;
    ++coeff[pos];
  }
  return true;
}

double component_weight_norm(const RootSystem::Component& comp,
                             const std::vector<std::int64_t>& wslice) {
  Rational s(0);
  const int n = static_cast<int>(wslice.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s += Rational(wslice[i]) * comp.weight_gram[i][j] * Rational(wslice[j]);
  return std::sqrt(to_double(s));
}

// Circumradius of the component's Voronoi cell. Rank 1: half the basis
// vector. Rank 2: brute force over bisector intersections.
double component_circumradius(const RootSystem::Component& comp) {
  const int m = static_cast<int>(comp.period_in_coroot.size());
  if (m == 1) return 0.5 * std::sqrt(to_double(comp.period_gram[0][0]));

  Eigen::Matrix2d g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = to_double(comp.period_gram[i][j]);

  auto in_cell = [&](const Eigen::Vector2d& x) {
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b) {
        if (a == 0 && b == 0) continue;
        Eigen::Vector2d lam(a, b);
        if (2.0 * x.dot(g * lam) > lam.dot(g * lam) + 1e-9) return false;
      }
    return true;
  };

  double radius = 0.0;
  for (int a1 = -2; a1 <= 2; ++a1)
    for (int b1 = -2; b1 <= 2; ++b1)
      for (int a2 = -2; a2 <= 2; ++a2)
        for (int b2 = -2; b2 <= 2; ++b2) {
          Eigen::Vector2d l1(a1, b1), l2(a2, b2);
          Eigen::Matrix2d A;
          A.row(0) = 2.0 * (g * l1).transpose();
          A.row(1) = 2.0 * (g * l2).transpose();
          if (std::abs(A.determinant()) < 1e-12) continue;
          Eigen::Vector2d rhs(l1.dot(g * l1), l2.dot(g * l2));
          Eigen::Vector2d x = A.fullPivLu().solve(rhs);
          if (!in_cell(x)) continue;
          radius = std::max(radius, std::sqrt(x.dot(g * x)));
        }
  if (radius == 0.0) throw Error("circumradius: no Voronoi vertex found");
  return radius;
}

}  // namespace

bool in_scaled_voronoi(const RootSystem& rs, const Weight& w, int d) {
  if (static_cast<int>(w.size()) != rs.rank())
    throw DimensionMismatch("in_scaled_voronoi: coordinate length mismatch");
  if (d < 0) throw Error("in_scaled_voronoi: d must be nonnegative");
  for (const auto& comp : rs.components()) {
    std::vector<std::int64_t> slice(w.c.begin() + comp.coord_begin,
                                    w.c.begin() + comp.coord_end);
    if (!component_in_cell(comp, slice, d, component_weight_norm(comp, slice)))
      return false;
  }
  return true;
}

WeightSet weight_set(const RootSystem& rs, const WeylGroup& W, int d) {
  if (d < 0) throw Error("weight_set: d must be nonnegative");
  const int n = rs.rank();

  // Per-coordinate candidate bounds: |a_i| <= d * R_comp / sqrt(lmin(G_comp)).
  std::vector<int> bound(n, 0);
  for (const auto& comp : rs.components()) {
    const double r = component_circumradius(comp);
    const double lmin = min_eigenvalue(comp.weight_gram);
    const int k = static_cast<int>(std::ceil(d * r / std::sqrt(lmin))) + 1;
    for (int i = comp.coord_begin; i < comp.coord_end; ++i) bound[i] = k;
  }

  std::vector<Weight> found;
  Weight cur;
  cur.c.assign(n, 0);
  for (int i = 0; i < n; ++i) cur.c[i] = -bound[i];
  while (true) {
    if (in_scaled_voronoi(rs, cur, d)) found.push_back(cur);
    int pos = 0;
    while (pos < n && cur.c[pos] == bound[pos]) cur.c[pos] = -bound[pos], ++pos;
    if (pos == n) break;
    ++cur.c[pos];
  }

  std::sort(found.begin(), found.end(), [&rs](const Weight& a, const Weight& b) {
    return canonical_weight_less(rs, a, b);
  });
  WeightSet ws(d, std::move(found));

  // Omega_d must be W-stable (generator images suffice).
  for (int i = 1; i <= W.num_generators(); ++i) {
    const GroupElement& s = W.element(W.generator(i));
    for (const auto& w : ws.weights())
      if (!ws.contains(act_weight(s, w)))
        throw Error("weight_set: result is not W-stable");
  }
  return ws;
}

bool canonical_weight_less(const RootSystem& rs, const Weight& a, const Weight& b) {
  Rational na = rs.norm_sq(a), nb = rs.norm_sq(b);
  if (na != nb) return na < nb;
  return a.c < b.c;
}

int degree(const RootSystem& rs, const TrigPoly& f) {
  if (f.empty()) throw ZeroPolynomial("degree: zero polynomial");
  int deg = 0;
  for (const auto& [w, c] : f.coeffs()) {
    if (w.is_zero()) continue;
    int d = 0;
    while (!in_scaled_voronoi(rs, w, d)) {
      ++d;
      if (d > 1000000) throw Error("degree: runaway");
    }
    deg = std::max(deg, d);
  }
  return deg;
}

int matrix_order(const RootSystem& rs, const TrigPoly& f) {
  if (f.empty()) throw ZeroPolynomial("matrix_order: zero polynomial");
  const int dmax = degree(rs, f);
  const WeylGroup W = WeylGroup::generate(rs);
  for (int d = 0; d <= dmax; ++d) {
    WeightSet ws = weight_set(rs, W, d);
    std::set<Weight> sums;
    for (const auto& a : ws.weights())
      for (const auto& b : ws.weights()) sums.insert(a + b);
    bool ok = true;
    for (const auto& [w, c] : f.coeffs())
      if (!sums.count(w)) {
        ok = false;
        break;
      }
    if (ok) return d;
  }
  return dmax;  // supp(f) subset of Omega_dmax and 0 in Omega_dmax + Omega_dmax
}

}  // namespace trigopt
