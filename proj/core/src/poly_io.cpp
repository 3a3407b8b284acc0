#include "trigopt/poly_io.hpp"

#include "trigopt/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace trigopt {

PolyInput load_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_poly(j);
}

PolyInput parse_poly(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial file: expected a JSON object");
  if (!j.contains("root_system") || !j["root_system"].is_string())
    throw ParseError("polynomial file: missing string field 'root_system'");
  RootSystemId id = RootSystemId::parse(j["root_system"].get<std::string>());
  const int rank = id.rank();

  if (!j.contains("terms") || !j["terms"].is_array())
    throw ParseError("polynomial file: missing array field 'terms'");
  std::vector<std::pair<Weight, Complex>> terms;
  int tidx = 0;
  for (const auto& term : j["terms"]) {
    const std::string where = "terms[" + std::to_string(tidx++) + "]";
    if (!term.is_object() || !term.contains("weight") || !term["weight"].is_array())
      throw ParseError(where + ": expected an object with a 'weight' array");
    if (static_cast<int>(term["weight"].size()) != rank)
      throw ParseError(where + ": weight length != rank " + std::to_string(rank));
    Weight w;
    for (const auto& x : term["weight"]) {
      if (!x.is_number_integer()) throw ParseError(where + ": weight entries must be integers");
      w.c.push_back(x.get<std::int64_t>());
    }
    double re = 0.0, im = 0.0;
    if (term.contains("re")) {
      if (!term["re"].is_number()) throw ParseError(where + ": 're' must be a number");
      re = term["re"].get<double>();
    }
    if (term.contains("im")) {
      if (!term["im"].is_number()) throw ParseError(where + ": 'im' must be a number");
      im = term["im"].get<double>();
    }
    terms.emplace_back(std::move(w), Complex(re, im));
  }
  if (terms.empty()) throw ParseError("polynomial file: 'terms' is empty");
  return {std::move(id), TrigPoly::from_terms(rank, terms)};
}

Json poly_to_json(const RootSystemId& id, const TrigPoly& f) {
  Json j;
  j["root_system"] = id.str();
  j["terms"] = Json::array();
  for (const auto& [w, v] : f.coeffs()) {
    Json t;
    t["weight"] = w.c;
    t["re"] = v.real();
    t["im"] = v.imag();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

Json report_to_json(const RunReport& r) {
  Json j;
  j["root_system"] = r.root_system;
  j["degree"] = r.degree;
  j["bounds"] = Json::object();
  for (const auto& [mode, v] : r.bounds) j["bounds"][mode] = v;
  if (r.oracle) j["oracle"] = *r.oracle;
  j["layout"] = Json::array();
  for (const auto& e : r.layout)
    j["layout"].push_back(Json{{"irrep", e.irrep}, {"dim", e.dim}, {"mult", e.mult}});
  if (r.sizes) {
    Json s;
    s["dense"] = r.sizes->dense;
    if (r.sizes->chebyshev) s["chebyshev"] = *r.sizes->chebyshev;
    s["sab"] = r.sizes->sab;
    s["sab_real_entries"] = r.sizes->sab_real_entries;
    s["blocks"] = Json::array();
    for (const auto& [dim, mult] : r.sizes->blocks)
      s["blocks"].push_back(Json::array({dim, mult}));
    j["sizes"] = std::move(s);
  }
  j["solver"] = Json::object();
  for (const auto& [mode, st] : r.solver)
    j["solver"][mode] = Json{{"iterations", st.iterations},
                             {"final_mu", st.final_mu},
                             {"min_eigenvalue", st.min_eigenvalue},
                             {"status", st.status}};
  return j;
}

RunReport report_from_json(const Json& j) {
  RunReport r;
  r.root_system = j.at("root_system").get<std::string>();
  r.degree = j.at("degree").get<int>();
  for (const auto& [mode, v] : j.at("bounds").items()) r.bounds[mode] = v.get<double>();
  if (j.contains("oracle")) r.oracle = j["oracle"].get<double>();
  for (const auto& e : j.at("layout"))
    r.layout.push_back({e.at("irrep").get<int>(), e.at("dim").get<int>(), e.at("mult").get<int>()});
  if (j.contains("sizes")) {
    SizesEntry s;
    s.dense = j["sizes"].at("dense").get<long long>();
    if (j["sizes"].contains("chebyshev")) s.chebyshev = j["sizes"]["chebyshev"].get<double>();
    s.sab = j["sizes"].at("sab").get<long long>();
    s.sab_real_entries = j["sizes"].at("sab_real_entries").get<long long>();
    for (const auto& b : j["sizes"].at("blocks"))
      s.blocks.emplace_back(b.at(0).get<int>(), b.at(1).get<int>());
    r.sizes = std::move(s);
  }
  if (j.contains("solver"))
    for (const auto& [mode, st] : j["solver"].items())
      r.solver[mode] = {st.at("iterations").get<int>(), st.at("final_mu").get<double>(),
                        st.at("min_eigenvalue").get<double>(),
                        st.at("status").get<std::string>()};
  return r;
}

std::string report_to_text(const RunReport& r) {
  std::ostringstream out;
  out << "root system " << r.root_system << ", degree " << r.degree << "\n";
  if (!r.layout.empty()) {
    out << "isotypic layout (irrep: dim x mult):";
    for (const auto& e : r.layout)
      out << "  " << e.irrep << ": " << e.dim << "x" << e.mult;
    out << "\n";
  }
  for (const auto& [mode, v] : r.bounds) {
    out << "bound (" << mode << "): " << v;
    auto st = r.solver.find(mode);
    if (st != r.solver.end())
      out << "   [" << st->second.status << ", " << st->second.iterations
          << " Newton steps, min eig " << st->second.min_eigenvalue << "]";
    out << "\n";
  }
  if (r.oracle) out << "grid minimum: " << *r.oracle << "\n";
  if (r.sizes) {
    out << "sizes: dense " << r.sizes->dense;
    if (r.sizes->chebyshev) out << ", chebyshev " << *r.sizes->chebyshev;
    out << ", symmetry adapted " << r.sizes->sab << " (blocks";
    for (const auto& [dim, mult] : r.sizes->blocks)
      if (mult > 0) out << " " << mult << "^2" << (dim > 1 ? "x" + std::to_string(dim) : "");
    out << "): " << r.sizes->sab_real_entries << " real entries vs " << r.sizes->dense
        << " dense\n";
  }
  return out.str();
}

namespace {

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json basis_debug_json(const SymmetryAdaptedBasis& sab,
                      const std::vector<Eigen::MatrixXcd>& projections) {
  Json j;
  j["layout"] = Json::array();
  for (const auto& lay : sab.layout())
    j["layout"].push_back(Json{{"irrep", lay.irrep}, {"dim", lay.dim}, {"mult", lay.mult}});
  j["T"] = matrix_json(sab.T());
  j["Ttilde"] = matrix_json(sab.Ttilde());
  j["projections"] = Json::array();
  for (const auto& p : projections) j["projections"].push_back(matrix_json(p));
  return j;
}

}  // namespace trigopt
