#include "trigopt/errors.hpp"
#include "trigopt/weight_set.hpp"
#include "trigopt/weyl_group.hpp"

#include <doctest.h>
#include <test_support.hpp>

#include <random>
#include <set>

using namespace trigopt;
using trigopt::testing::wt;

TEST_CASE("simple reflection matrices in the weight basis") {
  RootSystem a2 = build_root_system("A2");
  CHECK(simple_reflection(a2, 1).mat == IntMat{{-1, 1}, {0, 1}});
  CHECK(simple_reflection(a2, 2).mat == IntMat{{1, 0}, {1, -1}});

  RootSystem a1 = build_root_system("A1");
  CHECK(simple_reflection(a1, 1).mat == IntMat{{-1}});
}

TEST_CASE("group orders") {
  CHECK(WeylGroup::generate(build_root_system("A1")).size() == 2);
  CHECK(WeylGroup::generate(build_root_system("A2")).size() == 6);
  CHECK(WeylGroup::generate(build_root_system("B2")).size() == 8);
  CHECK(WeylGroup::generate(build_root_system("C2")).size() == 8);
  CHECK(WeylGroup::generate(build_root_system("G2")).size() == 12);
  CHECK(WeylGroup::generate(build_root_system("A1xA1")).size() == 4);
  CHECK(WeylGroup::generate(build_root_system("A2xG2")).size() == 72);
  CHECK_THROWS_AS(WeylGroup::generate(build_root_system("G2xG2xG2")), GroupTooLarge);
}

TEST_CASE("generators are involutions and elements invert integrally") {
  for (const char* name : {"A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(name);
    WeylGroup w = WeylGroup::generate(build_root_system(name));
    for (int i = 1; i <= w.num_generators(); ++i) {
      const int s = w.generator(i);
      CHECK(w.product(s, s) == w.identity());
    }
    for (int g = 0; g < w.size(); ++g) {
      CHECK(imat_mul(w.element(g).mat, w.element(g).inv_mat) ==
            imat_identity(w.root_system().rank()));
      CHECK(w.product(g, w.inverse(g)) == w.identity());
    }
  }
}

TEST_CASE("representation property of the integer matrices") {
  // Composition convention: mat(g o h) = mat(h) mat(g); equivalently the
  // transposed (columns-as-images) matrices multiply homomorphically.
  for (const char* name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    WeylGroup w = WeylGroup::generate(build_root_system(name));
    for (int g = 0; g < w.size(); ++g)
      for (int h = 0; h < w.size(); ++h) {
        const IntMat& prod = w.element(w.product(g, h)).mat;
        CHECK(prod == imat_mul(w.element(h).mat, w.element(g).mat));
        CHECK(imat_transpose(prod) ==
              imat_mul(imat_transpose(w.element(g).mat), imat_transpose(w.element(h).mat)));
      }
  }
}

TEST_CASE("canonical element order: identity first, words shortlex") {
  WeylGroup w = WeylGroup::generate(build_root_system("A2"));
  CHECK(w.element(0).word.empty());
  CHECK(w.element(1).word == std::vector<int>{1});
  CHECK(w.element(2).word == std::vector<int>{2});
  CHECK(w.element(3).word == std::vector<int>{1, 2});
  CHECK(w.element(4).word == std::vector<int>{2, 1});
  CHECK(w.element(5).word == std::vector<int>{1, 2, 1});
}

TEST_CASE("orbit of the first fundamental weight in A2") {
  WeylGroup w = WeylGroup::generate(build_root_system("A2"));
  auto orbit = w.orbit(wt({1, 0}));
  std::set<Weight> expected = {wt({1, 0}), wt({-1, 1}), wt({0, -1})};
  CHECK(std::set<Weight>(orbit.begin(), orbit.end()) == expected);
  CHECK(w.orbit(wt({0, 0})).size() == 1);
}

TEST_CASE("conjugacy classes") {
  WeylGroup a2 = WeylGroup::generate(build_root_system("A2"));
  REQUIRE(a2.conjugacy_classes().size() == 3);
  CHECK(a2.conjugacy_classes()[0] == std::vector<int>{0});
  CHECK(a2.conjugacy_classes()[1].size() == 3);  // reflections
  CHECK(a2.conjugacy_classes()[2].size() == 2);  // rotations

  CHECK(WeylGroup::generate(build_root_system("B2")).conjugacy_classes().size() == 5);
  CHECK(WeylGroup::generate(build_root_system("G2")).conjugacy_classes().size() == 6);
  CHECK(WeylGroup::generate(build_root_system("A1xA1")).conjugacy_classes().size() == 4);
}

TEST_CASE("point action preserves the pairing and the Gram norm") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  std::uniform_int_distribution<std::int64_t> coord(-4, 4);
  for (const char* name : {"A1", "A2", "B2", "G2", "A1xA1"}) {
    CAPTURE(name);
    RootSystem rs = build_root_system(name);
    WeylGroup w = WeylGroup::generate(rs);
    Eigen::MatrixXd coroot_gram(rs.rank(), rs.rank());
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        coroot_gram(i, j) = to_double(rs.coroot_gram()[i][j]);

    for (int trial = 0; trial < 20; ++trial) {
      const int g = static_cast<int>(rng() % w.size());
      Weight omega;
      for (int i = 0; i < rs.rank(); ++i) omega.c.push_back(coord(rng));
      Point u;
      for (int i = 0; i < rs.rank(); ++i) u.c.push_back(unif(rng));

      CHECK(pairing(rs, w.act(g, omega), w.act(g, u)) ==
            doctest::Approx(pairing(rs, omega, u)).epsilon(1e-12));

      // the point action is orthogonal: coroot-coordinate norms are preserved
      Eigen::VectorXd v(rs.rank()), gv(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) v(i) = u.c[i];
      Point gu = w.act(g, u);
      for (int i = 0; i < rs.rank(); ++i) gv(i) = gu.c[i];
      CHECK(gv.dot(coroot_gram * gv) ==
            doctest::Approx(v.dot(coroot_gram * v)).epsilon(1e-9));
    }
  }
}

TEST_CASE("identity acts trivially") {
  WeylGroup w = WeylGroup::generate(build_root_system("A2"));
  CHECK(w.act(0, wt({3, -2})) == wt({3, -2}));
}

TEST_CASE("weight sets are stable under the group") {
  for (const char* name : {"A1", "A2", "B2", "C2", "G2", "A1xA1"}) {
    CAPTURE(name);
    RootSystem rs = build_root_system(name);
    WeylGroup w = WeylGroup::generate(rs);
    for (int d = 0; d <= 4; ++d) {
      WeightSet ws = weight_set(rs, w, d);
      for (int g = 0; g < w.size(); ++g) {
        std::set<Weight> image;
        for (const auto& x : ws.weights()) image.insert(w.act(g, x));
        CHECK(image == std::set<Weight>(ws.weights().begin(), ws.weights().end()));
      }
    }
  }
}
