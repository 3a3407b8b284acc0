#include "trigopt/errors.hpp"
#include "trigopt/poly_io.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>
#include <test_support.hpp>

using namespace trigopt;
using trigopt::testing::wt;

TEST_CASE("polynomial parsing") {
  Json j = Json::parse(R"({
    "root_system": "A2",
    "terms": [
      {"weight": [0, 0], "re": 6.0},
      {"weight": [1, 0], "re": 4.0, "im": 0.0},
      {"weight": [-1, 0], "re": 4.0}
    ]
  })");
  PolyInput in = parse_poly(j);
  CHECK(in.id.str() == "A2");
  CHECK(in.poly.coeff(wt({0, 0})) == Complex(6.0));
  CHECK(in.poly.coeff(wt({1, 0})) == Complex(4.0));
  CHECK(in.poly.coeff(wt({-1, 0})) == Complex(4.0));
}

TEST_CASE("conjugate completion from file input") {
  Json j = Json::parse(R"({
    "root_system": "A1",
    "terms": [{"weight": [2], "re": 1.0, "im": 0.5}, {"weight": [0], "re": 3.0}]
  })");
  PolyInput in = parse_poly(j);
  CHECK(in.poly.coeff(wt({-2})) == Complex(1.0, -0.5));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly(Json::parse("[]")), ParseError);
  CHECK_THROWS_AS(parse_poly(Json::parse(R"({"terms": []})")), ParseError);
  CHECK_THROWS_AS(parse_poly(Json::parse(R"({"root_system": "A2", "terms": []})")),
                  ParseError);
  CHECK_THROWS_AS(
      parse_poly(Json::parse(R"({"root_system": "A2", "terms": [{"weight": [1]}]})")),
      ParseError);
  CHECK_THROWS_AS(
      parse_poly(Json::parse(
          R"({"root_system": "A2", "terms": [{"weight": [1, 0.5], "re": 1}]})")),
      ParseError);
  CHECK_THROWS_AS(parse_poly(Json::parse(R"({"root_system": "Z9", "terms": []})")),
                  UnsupportedType);
  CHECK_THROWS_AS(load_poly("/nonexistent/poly.json"), ParseError);
}

TEST_CASE("polynomial round trip through JSON") {
  TrigPoly f = trigopt::testing::a2_two_shell_poly();
  RootSystemId id = RootSystemId::parse("A2");
  PolyInput back = parse_poly(poly_to_json(id, f));
  CHECK(back.poly == f);
}

TEST_CASE("report round trip") {
  RunReport r;
  r.root_system = "A2";
  r.degree = 1;
  r.bounds["dense"] = -1.234567890123;
  r.bounds["block"] = -1.2345678902;
  r.oracle = -1.2;
  r.layout = {{0, 1, 0}, {1, 2, 2}, {2, 1, 3}};
  SizesEntry sizes;
  sizes.dense = 49;
  sizes.sab = 17;
  sizes.sab_real_entries = 13;
  sizes.blocks = {{1, 0}, {2, 2}, {1, 3}};
  r.sizes = sizes;
  r.solver["dense"] = {42, 1e-8, 3.5e-9, "converged"};

  RunReport back = report_from_json(report_to_json(r));
  CHECK(back == r);

  // and the text rendering mentions the headline figures
  std::string text = report_to_text(r);
  CHECK(text.find("49") != std::string::npos);
  CHECK(text.find("13") != std::string::npos);
}

TEST_CASE("basis debug dump shape") {
  RootSystem rs = build_root_system("A1");
  WeylGroup w = WeylGroup::generate(rs);
  WeightSet ws = weight_set(rs, w, 1);
  PermRep rep = build_perm_rep(w, ws);
  CharacterTable ct = character_table(w);
  IrrepMatrices ir = irrep_matrices(w, ct);
  SymmetryAdaptedBasis sab = serre_basis(rep, ct, ir, rs, ws);

  std::vector<Eigen::MatrixXcd> projections;
  for (int i = 0; i < ct.h(); ++i) projections.push_back(isotypic_projection(rep, ct, i));
  Json j = basis_debug_json(sab, projections);
  CHECK(j["T"].size() == 3);
  CHECK(j["T"][0].size() == 3);
  CHECK(j["T"][0][0].size() == 2);  // [re, im]
  CHECK(j["projections"].size() == 2);
  CHECK(j["layout"].size() == 2);
}
