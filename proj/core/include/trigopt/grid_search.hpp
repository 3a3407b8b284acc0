#pragma once

// Ground-truth helpers: dense grid search over one full period (the unit
// cube in coroot coordinates) with coordinate-descent refinement, and an
// independent brute-force re-derivation of the truncated weight sets.

#include "trigopt/trig_poly.hpp"
#include "trigopt/weight_set.hpp"

#include <utility>
#include <vector>

namespace trigopt {

struct GridSpec {
  int resolution = 64;   // points per coordinate, >= 8
  int refine_iters = 20; // coordinate-descent sweeps, step halves each sweep
};

struct GridResult {
  double value;
  Point argmin;
};

GridResult grid_minimize(const RootSystem& rs, const TrigPoly& f, const GridSpec& spec = {});

// Same search restricted to an axis box (in coroot coordinates).
GridResult grid_minimize_box(const RootSystem& rs, const TrigPoly& f, const GridSpec& spec,
                             const std::vector<std::pair<double, double>>& box);

// Independent enumeration of Omega_d: crude ball bound for the candidate box
// and exhaustive rational Voronoi inequalities over an enlarged lattice box.
WeightSet weight_set_bruteforce(const RootSystem& rs, int d);

}  // namespace trigopt
