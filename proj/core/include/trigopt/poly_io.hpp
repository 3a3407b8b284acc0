#pragma once

// JSON formats: the polynomial input schema
//   {"root_system": "A2", "terms": [{"weight": [1,0], "re": 4.0, "im": 0.0}, ...]}
// (missing conjugate terms are auto-completed), the machine-readable run
// report, and a debug dump of the symmetry adapted basis.

#include "trigopt/sdp.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <string>

namespace trigopt {

using Json = nlohmann::ordered_json;

struct PolyInput {
  RootSystemId id;
  TrigPoly poly;
};

PolyInput load_poly(const std::string& path);
PolyInput parse_poly(const Json& j);
Json poly_to_json(const RootSystemId& id, const TrigPoly& f);

struct SolverModeStats {
  int iterations = 0;
  double final_mu = 0.0;
  double min_eigenvalue = 0.0;
  std::string status;
  bool operator==(const SolverModeStats&) const = default;
};

struct LayoutEntry {
  int irrep = 0;
  int dim = 0;
  int mult = 0;
  bool operator==(const LayoutEntry&) const = default;
};

struct SizesEntry {
  long long dense = 0;
  std::optional<double> chebyshev;
  long long sab = 0;               // sum_i d_i m_i^2
  long long sab_real_entries = 0;  // sum over distinct blocks m_i^2
  std::vector<std::pair<int, int>> blocks;
  bool operator==(const SizesEntry&) const = default;
};

struct RunReport {
  std::string root_system;
  int degree = 0;
  std::map<std::string, double> bounds;
  std::optional<double> oracle;
  std::vector<LayoutEntry> layout;
  std::optional<SizesEntry> sizes;
  std::map<std::string, SolverModeStats> solver;
  bool operator==(const RunReport&) const = default;
};

Json report_to_json(const RunReport& r);
RunReport report_from_json(const Json& j);
std::string report_to_text(const RunReport& r);

// Debug dump of T, the isotypic projections and the layout; matrices are
// row-major lists of [re, im] pairs.
Json basis_debug_json(const SymmetryAdaptedBasis& sab,
                      const std::vector<Eigen::MatrixXcd>& projections);

}  // namespace trigopt
