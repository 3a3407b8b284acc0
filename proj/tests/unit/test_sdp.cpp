#include "trigopt/errors.hpp"
#include "trigopt/solver.hpp"

#include <doctest.h>
#include <test_support.hpp>

#include <random>

using namespace trigopt;
using trigopt::testing::wt;

namespace {

struct Pipeline {
  RootSystem rs;
  WeylGroup w;
  WeightSet ws;
  PermRep rep;
  CharacterTable ct;
  IrrepMatrices ir;
  SymmetryAdaptedBasis sab;

  Pipeline(const char* name, int d)
      : rs(build_root_system(name)),
        w(WeylGroup::generate(rs)),
        ws(weight_set(rs, w, d)),
        rep(build_perm_rep(w, ws)),
        ct(character_table(w)),
        ir(irrep_matrices(w, ct)),
        sab(serre_basis(rep, ct, ir, rs, ws)) {}
};

}  // namespace

TEST_CASE("dense problem for the rank-1 reference polynomial") {
  Pipeline p("A1", 1);
  TrigPoly f = trigopt::testing::a1_squared_cosine_poly();
  SdpProblem prob = build_sdp(p.rs, p.w, f, 1, SdpMode::Dense);

  // two complex parameters (t_1 and t_2), t_0 pinned to 1/3
  REQUIRE(prob.params().size() == 2);
  CHECK_FALSE(prob.params()[0].real);
  CHECK_FALSE(prob.params()[1].real);
  CHECK(prob.num_real_params() == 4);

  // objective at p: 3 - 12 Re t_1 + 6 Re t_2
  Eigen::VectorXd q = Eigen::VectorXd::Zero(4);
  CHECK(prob.objective(q) == doctest::Approx(3.0));
  q(prob.params()[0].offset) = 1.0 / 6.0;   // t_1 = 1/6
  q(prob.params()[1].offset) = -1.0 / 6.0;  // t_2 = -1/6
  CHECK(prob.objective(q) == doctest::Approx(0.0));

  // X(0) = I/3 is strictly feasible
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
  Eigen::MatrixXcd x0 = prob.block_at(0, zero);
  CHECK((x0 - Eigen::MatrixXcd::Identity(3, 3) / 3.0).cwiseAbs().maxCoeff() < 1e-15);

  SolveResult res = solve(prob);
  REQUIRE(res.status == SolveStatus::Converged);
  CHECK(res.bound == doctest::Approx(0.0).epsilon(0).scale(1).epsilon(1e-6));
  CHECK(std::abs(res.bound) < 1e-6);
  Complex b = prob.param_value(res.params, wt({1}));
  Complex c = prob.param_value(res.params, wt({2}));
  CHECK(std::abs(b - Complex(1.0 / 6.0)) < 1e-4);
  CHECK(std::abs(c - Complex(-1.0 / 6.0)) < 1e-4);
  CHECK(res.primal_feasibility > -1e-9);
}

TEST_CASE("invariant and block problems agree with the dense bound") {
  Pipeline p("A1", 1);
  TrigPoly f = trigopt::testing::a1_squared_cosine_poly();

  SdpProblem inv = build_sdp(p.rs, p.w, f, 1, SdpMode::Invariant);
  // the flip identifies eta with -eta: both parameters become real
  REQUIRE(inv.params().size() == 2);
  CHECK(inv.params()[0].real);
  CHECK(inv.params()[1].real);
  CHECK(inv.num_real_params() == 2);

  SdpProblem blk = build_sdp(p.rs, p.w, f, 1, SdpMode::Block, &p.sab);
  REQUIRE(blk.num_blocks() == 2);
  // block sizes 1 (sign) and 2 (trivial)
  CHECK(blk.block_dim(0) + blk.block_dim(1) == 3);

  SolveResult rd = solve(build_sdp(p.rs, p.w, f, 1, SdpMode::Dense));
  SolveResult ri = solve(inv);
  SolveResult rb = solve(blk);
  REQUIRE(ri.status == SolveStatus::Converged);
  REQUIRE(rb.status == SolveStatus::Converged);
  CHECK(std::abs(rd.bound - ri.bound) < 1e-6);
  CHECK(std::abs(ri.bound - rb.bound) < 1e-6);
  CHECK(std::abs(rb.bound) < 1e-6);

  Complex b = blk.param_value(rb.params, wt({1}));
  Complex c = blk.param_value(rb.params, wt({2}));
  CHECK(std::abs(b.real() - 1.0 / 6.0) < 1e-4);
  CHECK(std::abs(c.real() + 1.0 / 6.0) < 1e-4);
}

TEST_CASE("block problem of the two-shell polynomial has 13 real unknowns worth of blocks") {
  Pipeline p("A2", 1);
  TrigPoly f = trigopt::testing::a2_two_shell_poly();
  SdpProblem prob = build_sdp(p.rs, p.w, f, 1, SdpMode::Block, &p.sab);
  REQUIRE(prob.num_blocks() == 2);
  CHECK(prob.block_dim(0) == 2);
  CHECK(prob.block_dim(1) == 3);
  CHECK(prob.block_dim(0) * prob.block_dim(0) + prob.block_dim(1) * prob.block_dim(1) == 13);

  SolveResult res = solve(prob);
  REQUIRE(res.status == SolveStatus::Converged);

  SolveResult dense = solve(build_sdp(p.rs, p.w, f, 1, SdpMode::Dense));
  SolveResult inv = solve(build_sdp(p.rs, p.w, f, 1, SdpMode::Invariant));
  CHECK(std::abs(dense.bound - inv.bound) < 1e-6);
  CHECK(std::abs(inv.bound - res.bound) < 1e-6);
}

TEST_CASE("constant polynomial solves immediately") {
  Pipeline p("A2", 1);
  TrigPoly c = TrigPoly::from_terms(2, {{wt({0, 0}), 5.0}});
  for (SdpMode mode : {SdpMode::Dense, SdpMode::Invariant}) {
    SdpProblem prob = build_sdp(p.rs, p.w, c, 1, mode);
    // objective is independent of the parameters
    CHECK(prob.objective_linear().cwiseAbs().maxCoeff() < 1e-14);
    SolveResult res = solve(prob);
    CHECK(res.status == SolveStatus::Converged);
    CHECK(res.bound == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(res.iterations == 0);
  }
}

TEST_CASE("build-time errors") {
  Pipeline p("A2", 1);
  TrigPoly f = trigopt::testing::a2_two_shell_poly();
  CHECK_THROWS_AS(build_sdp(p.rs, p.w, f, 0, SdpMode::Dense), DegreeTooSmall);

  TrigPoly skew = TrigPoly::from_terms(2, {{wt({1, 0}), 1.0}, {wt({0, 0}), 1.0}});
  CHECK_THROWS_AS(build_sdp(p.rs, p.w, skew, 1, SdpMode::Invariant), NotInvariant);
  CHECK_NOTHROW(build_sdp(p.rs, p.w, skew, 1, SdpMode::Dense));

  CHECK_THROWS_AS(build_sdp(p.rs, p.w, f, 1, SdpMode::Block, nullptr), BasisMismatch);
  Pipeline p2("A2", 2);
  CHECK_THROWS_AS(build_sdp(p.rs, p.w, f, 1, SdpMode::Block, &p2.sab), BasisMismatch);

  TrigPoly zero(2);
  CHECK_THROWS_AS(build_sdp(p.rs, p.w, zero, 1, SdpMode::Dense), ZeroPolynomial);
}

TEST_CASE("objective is real and equal across modes at random parameters") {
  std::mt19937_64 rng(41);
  Pipeline p("B2", 1);
  TrigPoly f = trigopt::testing::random_invariant_poly(p.rs, p.w, 1, rng);
  SdpProblem dense = build_sdp(p.rs, p.w, f, 1, SdpMode::Dense);
  SdpProblem inv = build_sdp(p.rs, p.w, f, 1, SdpMode::Invariant);
  SdpProblem blk = build_sdp(p.rs, p.w, f, 1, SdpMode::Block, &p.sab);

  ToeplitzMat cmat = to_toeplitz(p.rs, f, p.ws);
  Eigen::MatrixXcd c = cmat.dense();

  // the invariant and block parameterizations agree parameter-by-parameter
  REQUIRE(inv.params().size() == blk.params().size());
  for (std::size_t k = 0; k < inv.params().size(); ++k) {
    CHECK(inv.params()[k].rep == blk.params()[k].rep);
    CHECK(inv.params()[k].real == blk.params()[k].real);
  }

  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd q = trigopt::testing::random_feasible_params(inv, rng);
    Eigen::MatrixXcd x = inv.toeplitz_at(q);
    const Complex tr = (c * x).trace();
    CHECK(std::abs(tr.imag()) < 1e-12);
    CHECK(inv.objective(q) == doctest::Approx(tr.real()).epsilon(1e-10));
    CHECK(blk.objective(q) == doctest::Approx(tr.real()).epsilon(1e-10));
  }
}

TEST_CASE("Reynolds average of a feasible matrix is feasible with equal objective") {
  std::mt19937_64 rng(43);
  Pipeline p("A2", 1);
  TrigPoly f = trigopt::testing::a2_two_shell_poly();
  SdpProblem dense = build_sdp(p.rs, p.w, f, 1, SdpMode::Dense);
  ToeplitzMat cmat = to_toeplitz(p.rs, f, p.ws);
  Eigen::MatrixXcd c = cmat.dense();

  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd q = trigopt::testing::random_feasible_params(dense, rng);
    Eigen::MatrixXcd x = dense.toeplitz_at(q);
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(x.rows(), x.cols());
    for (int g = 0; g < p.w.size(); ++g) {
      Eigen::MatrixXd th = p.rep.matrix(g);
      avg += th * x * th.transpose();
    }
    avg /= static_cast<double>(p.w.size());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(avg);
    CHECK(es.eigenvalues().minCoeff() > -1e-12);
    CHECK(std::abs(avg.trace().real() - 1.0) < 1e-12);
    CHECK(std::abs(((c * avg).trace() - (c * x).trace()).real()) < 1e-9);
    CHECK(std::abs((c * avg).trace().imag()) < 1e-9);
  }
}

TEST_CASE("certificates") {
  std::mt19937_64 rng(47);
  Pipeline p("A1", 1);
  TrigPoly f = trigopt::testing::a1_squared_cosine_poly();
  SdpProblem prob = build_sdp(p.rs, p.w, f, 1, SdpMode::Dense);

  // p = 0: value = tr(C)/|Omega|, margin 1/|Omega|
  Certificate at0 = certify(prob, Eigen::VectorXd::Zero(prob.num_real_params()));
  CHECK(at0.value == doctest::Approx(3.0));
  CHECK(at0.min_eigenvalue == doctest::Approx(1.0 / 3.0));

  SolveResult res = solve(prob);
  Certificate opt = certify(prob, res);
  CHECK(opt.min_eigenvalue > -1e-9);
  CHECK(std::abs(opt.value) < 1e-6);

  // any feasible point upper-bounds the minimum
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::VectorXd q = trigopt::testing::random_feasible_params(prob, rng);
    Certificate cert = certify(prob, q);
    CHECK(cert.value >= res.bound - 1e-6);
  }
}

TEST_CASE("size report figures") {
  RootSystem rs = build_root_system("A2");
  WeylGroup w = WeylGroup::generate(rs);

  BlockSizeReport r1 = block_size_report(rs, w, 1);
  CHECK(r1.omega_size == 7);
  CHECK(r1.dense == 49);
  CHECK(r1.sab_weighted == 17);      // 1*0^2 + 2*2^2 + 1*3^2
  CHECK(r1.sab_real_entries == 13);  // 2^2 + 3^2
  CHECK_FALSE(r1.chebyshev.has_value());  // d < n

  BlockSizeReport r2 = block_size_report(rs, w, 2);
  CHECK(r2.dense == 361);
  CHECK(r2.sab_weighted == 109);  // 1*1 + 2*36 + 1*36
  CHECK(r2.chebyshev.has_value());
  // |Omega_{d-n}| = |Omega_0| = 1 here
  CHECK(*r2.chebyshev == doctest::Approx((361.0 + 4.0 * 1.0) / 36.0));

  BlockSizeReport r3 = block_size_report(rs, w, 3);
  CHECK(*r3.chebyshev == doctest::Approx((37.0 * 37.0 + 4.0 * 49.0) / 36.0));

  RootSystem a1 = build_root_system("A1");
  WeylGroup w1 = WeylGroup::generate(a1);
  BlockSizeReport s1 = block_size_report(a1, w1, 1);
  CHECK(s1.dense == 9);
  CHECK(s1.sab_weighted == 5);      // 1*1 + 1*4
  CHECK(s1.sab_real_entries == 5);  // 1 + 4
  CHECK(s1.chebyshev.has_value());
  CHECK(*s1.chebyshev == doctest::Approx((9.0 + 1.0) / 4.0));
}

TEST_CASE("random invariant polynomials: three equal bounds, lower-bound property") {
  std::mt19937_64 rng(53);
  for (const char* name : {"A2", "A1xA1"}) {
    CAPTURE(name);
    Pipeline p(name, 1);
    for (int trial = 0; trial < 3; ++trial) {
      TrigPoly f = trigopt::testing::random_invariant_poly(p.rs, p.w, 1, rng);
      SolveResult rd = solve(build_sdp(p.rs, p.w, f, 1, SdpMode::Dense));
      SolveResult ri = solve(build_sdp(p.rs, p.w, f, 1, SdpMode::Invariant));
      SolveResult rb = solve(build_sdp(p.rs, p.w, f, 1, SdpMode::Block, &p.sab));
      REQUIRE(rd.status == SolveStatus::Converged);
      CHECK(std::abs(rd.bound - ri.bound) < 1e-5);
      CHECK(std::abs(ri.bound - rb.bound) < 1e-5);

      std::uniform_real_distribution<double> u(0.0, 1.0);
      for (int k = 0; k < 50; ++k) {
        Point pt;
        for (int i = 0; i < p.rs.rank(); ++i) pt.c.push_back(u(rng));
        CHECK(rd.bound <= evaluate(p.rs, f, pt) + 1e-6);
      }
    }
  }
}
