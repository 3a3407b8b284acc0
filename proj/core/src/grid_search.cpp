#include "trigopt/grid_search.hpp"

#include "trigopt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace trigopt {

namespace {

bool point_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

GridResult search(const RootSystem& rs, const TrigPoly& f, const GridSpec& spec,
                  const std::vector<std::pair<double, double>>& box) {
  if (spec.resolution < 8) throw Error("grid_minimize: resolution must be >= 8");
  const int n = rs.rank();

  Point best;
  best.c.assign(n, box.empty() ? 0.0 : box[0].first);
  double best_val = std::numeric_limits<double>::infinity();

  std::vector<int> idx(n, 0);
  Point u;
  u.c.assign(n, 0.0);
  while (true) {
    for (int i = 0; i < n; ++i) {
      const double lo = box[i].first, hi = box[i].second;
      u.c[i] = lo + (hi - lo) * idx[i] / spec.resolution;
    }
    const double v = evaluate(rs, f, u);
    if (v < best_val || (v == best_val && point_less(u, best))) {
      best_val = v;
      best = u;
    }
    int pos = 0;
    while (pos < n && idx[pos] == spec.resolution - 1) idx[pos++] = 0;
    if (pos == n) break;
    ++idx[pos];
  }

  // Coordinate descent polish with shrinking step; the polynomial is
  // periodic, so steps may leave the box.
  double step = (box[0].second - box[0].first) / spec.resolution;
  for (int sweep = 0; sweep < spec.refine_iters; ++sweep) {
    for (int i = 0; i < n; ++i) {
      for (double dir : {-1.0, 1.0}) {
        Point q = best;
        q.c[i] += dir * step;
        const double v = evaluate(rs, f, q);
        if (v < best_val) {
          best_val = v;
          best = q;
        }
      }
    }
    step /= 2.0;
  }
  return {best_val, best};
}

}  // namespace

GridResult grid_minimize(const RootSystem& rs, const TrigPoly& f, const GridSpec& spec) {
  std::vector<std::pair<double, double>> cube(rs.rank(), {0.0, 1.0});
  return search(rs, f, spec, cube);
}

GridResult grid_minimize_box(const RootSystem& rs, const TrigPoly& f, const GridSpec& spec,
                             const std::vector<std::pair<double, double>>& box) {
  if (static_cast<int>(box.size()) != rs.rank())
    throw DimensionMismatch("grid_minimize_box: box size mismatch");
  return search(rs, f, spec, box);
}

WeightSet weight_set_bruteforce(const RootSystem& rs, int d) {
  if (d < 0 || d > 8) throw Error("weight_set_bruteforce: supported range is 0 <= d <= 8");
  const int n = rs.rank();

  // Crude per-component ball bound: the cell circumradius is at most the sum
  // of the basis lengths. Everything after the box sizing is exact.
  std::vector<int> wbound(n, 0);
  for (const auto& comp : rs.components()) {
    double rsum = 0.0;
    const int m = static_cast<int>(comp.period_in_coroot.size());
    for (int i = 0; i < m; ++i) rsum += std::sqrt(to_double(comp.period_gram[i][i]));
    double lmin = std::numeric_limits<double>::infinity();
    {
      // smallest eigenvalue of the slice weight Gram
      const auto& g = comp.weight_gram;
      if (g.size() == 1)
        lmin = to_double(g[0][0]);
      else {
        const double a = to_double(g[0][0]), b = to_double(g[0][1]), c = to_double(g[1][1]);
        lmin = 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + b * b);
      }
    }
    const int k = static_cast<int>(std::ceil(d * rsum / std::sqrt(lmin))) + 2;
    for (int i = comp.coord_begin; i < comp.coord_end; ++i) wbound[i] = k;
  }

  // Lattice vectors to test against: every lambda with a coefficient box
  // larger than any vector that could separate a candidate.
  struct LatticeBox {
    const RootSystem::Component* comp;
    int bound;
  };
  std::vector<LatticeBox> boxes;
  for (const auto& comp : rs.components()) {
    double rsum = 0.0;
    const int m = static_cast<int>(comp.period_in_coroot.size());
    for (int i = 0; i < m; ++i) rsum += std::sqrt(to_double(comp.period_gram[i][i]));
    double lmin;
    if (m == 1)
      lmin = to_double(comp.period_gram[0][0]);
    else {
      const double a = to_double(comp.period_gram[0][0]);
      const double b = to_double(comp.period_gram[0][1]);
      const double c = to_double(comp.period_gram[1][1]);
      lmin = 0.5 * (a + c) - std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    }
    boxes.push_back({&comp, static_cast<int>(std::ceil(2.0 * rsum / std::sqrt(lmin))) + 2});
  }

  auto inside = [&](const Weight& w) {
    for (std::size_t ci = 0; ci < boxes.size(); ++ci) {
      const auto& comp = *boxes[ci].comp;
      const int kb = boxes[ci].bound;
      const int m = static_cast<int>(comp.period_in_coroot.size());
      std::vector<std::int64_t> coeff(m, -kb);
      while (true) {
        bool zero = std::all_of(coeff.begin(), coeff.end(),
                                [](std::int64_t x) { return x == 0; });
        if (!zero) {
          Rational nsq(0);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              nsq += Rational(coeff[i]) * comp.period_gram[i][j] * Rational(coeff[j]);
          std::int64_t pair = 0;
          for (int i = 0; i < m; ++i)
            for (int a = comp.coord_begin; a < comp.coord_end; ++a)
              pair += coeff[i] * comp.period_in_coroot[i][a - comp.coord_begin] * w.c[a];
          if (Rational(2 * pair) > Rational(d) * nsq) return false;
        }
        int pos = 0;
        while (pos < m && coeff[pos] == kb) coeff[pos++] = -kb;
        if (pos == m) break;
        ++coeff[pos];
      }
    }
    return true;
  };

  std::vector<Weight> found;
  Weight cur;
  cur.c.assign(n, 0);
  for (int i = 0; i < n; ++i) cur.c[i] = -wbound[i];
  while (true) {
    if (inside(cur)) found.push_back(cur);
    int pos = 0;
    while (pos < n && cur.c[pos] == wbound[pos]) cur.c[pos] = -wbound[pos], ++pos;
    if (pos == n) break;
    ++cur.c[pos];
  }
  std::sort(found.begin(), found.end(), [&rs](const Weight& a, const Weight& b) {
    return canonical_weight_less(rs, a, b);
  });
  return WeightSet(d, std::move(found));
}

}  // namespace trigopt
