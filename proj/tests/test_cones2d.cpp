#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "normgeo/cones2d.hpp"
#include "normgeo/derivatives.hpp"
#include "util.hpp"

using namespace normgeo;

TEST_CASE("planar orientation order") {
  CHECK(precedes({1.0, 0.0}, {0.0, 1.0}));
  CHECK_FALSE(precedes({0.0, 1.0}, {1.0, 0.0}));
  CHECK_FALSE(precedes({1.0, 0.0}, {-1.0, 0.0}));  // half turn is not before
  CHECK_THROWS_AS(precedes({1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("euclidean cone degenerates to the rotated base") {
  std::mt19937_64 rng(21);
  Space s = Space::lp(2.0, 2);
  for (int rep = 0; rep < 20; ++rep) {
    Vector x = testutil::unit_in(s, testutil::gaussian(rng, 2));
    auto cone = ortho_cone(s, x);
    CHECK(cone.w1[0] == doctest::Approx(-x[1]).epsilon(1e-12));
    CHECK(cone.w1[1] == doctest::Approx(x[0]).epsilon(1e-12));
    CHECK(cone.w2[0] == doctest::Approx(cone.w1[0]).epsilon(1e-12));
    CHECK(cone.w2[1] == doctest::Approx(cone.w1[1]).epsilon(1e-12));
  }
}

TEST_CASE("cone endpoints obey the orientation sandwich") {
  std::mt19937_64 rng(22);
  std::vector<Space> spaces = {Space::l1(2), Space::linf(2),
                               Space::regular_polygon(4), Space::lp(1.5, 2),
                               Space::orthant_mixed(MixPiece::l1(), MixPiece::linf())};
  for (int t = 0; t < 5; ++t) spaces.push_back(testutil::random_polygon(rng));
  for (const Space& s : spaces) {
    for (int rep = 0; rep < 20; ++rep) {
      Vector x = testutil::unit_in(s, testutil::gaussian(rng, 2));
      auto cone = ortho_cone(s, x);
      CHECK(norm(s, cone.w1) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(norm(s, cone.w2) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(testutil::cross2(cone.base, cone.w1) > 0.0);
      CHECK(testutil::cross2(cone.w1, cone.w2) >= -1e-12);
      CHECK(testutil::cross2(cone.w2, cone.base) < 0.0);
      // w1 ends the rho_minus = 0 side, w2 the rho_plus = 0 side.
      auto a = derivative(s, x, cone.w1);
      auto b = derivative(s, x, cone.w2);
      CHECK(std::abs(a.rho_minus) <= 1e-9);
      CHECK(a.rho_plus >= -1e-9);
      CHECK(std::abs(b.rho_plus) <= 1e-9);
      CHECK(b.rho_minus <= 1e-9);
    }
  }
}

TEST_CASE("cone arc matches birkhoff orthogonality pointwise") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  for (int t = 0; t < 20; ++t) {
    Space s = testutil::random_polygon(rng);
    Vector x = sphere_point_2d(s, angle(rng));
    auto cone = ortho_cone(s, x);
    for (int k = 0; k < 50; ++k) {
      Vector y = sphere_point_2d(s, angle(rng));
      double margin = std::min({std::abs(testutil::cross2(cone.w1, y)),
                                std::abs(testutil::cross2(cone.w2, y))});
      if (margin < 1e-6) continue;  // too close to an arc end to classify
      bool inside = testutil::cross2(cone.w1, y) >= 0.0 &&
                    testutil::cross2(y, cone.w2) >= 0.0;
      CHECK(inside == is_birkhoff(s, x, y));
    }
  }
}

TEST_CASE("regular polygon cone closed forms") {
  SUBCASE("diamond") {
    auto cone = regular_polygon_cone(2, 1);
    CHECK(cone.w1[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cone.w1[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cone.w2[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(cone.w2[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("hexagon endpoints are the flanking vertices") {
    auto cone = regular_polygon_cone(3, 1);
    CHECK(cone.w1[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cone.w1[1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(cone.w2[0] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(cone.w2[1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  }
  SUBCASE("octagon endpoints are edge midpoints") {
    auto cone = regular_polygon_cone(4, 1);
    double r = std::sqrt(2.0) / 4.0;
    CHECK(cone.w1[0] == doctest::Approx(r).epsilon(1e-14));
    CHECK(cone.w1[1] == doctest::Approx(0.5 + r).epsilon(1e-14));
    CHECK(cone.w2[0] == doctest::Approx(-r).epsilon(1e-14));
    CHECK(cone.w2[1] == doctest::Approx(0.5 + r).epsilon(1e-14));
  }
  SUBCASE("index bounds") {
    CHECK_THROWS_AS(regular_polygon_cone(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(regular_polygon_cone(3, 7), std::invalid_argument);
    CHECK_THROWS_AS(regular_polygon_cone(1, 1), std::invalid_argument);
  }
}

TEST_CASE("closed form cone agrees with the kernel construction everywhere") {
  for (int n = 2; n <= 12; ++n) {
    Space s = Space::regular_polygon(n);
    auto verts = regular_polygon_vertices(n);
    for (int m = 1; m <= 2 * n; ++m) {
      auto closed = regular_polygon_cone(n, m);
      Vector x{verts[m - 1][0], verts[m - 1][1]};
      auto kernel = ortho_cone(s, x);
      for (int c = 0; c < 2; ++c) {
        CHECK(closed.w1[c] == doctest::Approx(kernel.w1[c]).epsilon(1e-9));
        CHECK(closed.w2[c] == doctest::Approx(kernel.w2[c]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("mean derivative decreases along the half circle") {
  std::mt19937_64 rng(24);
  auto check_space = [](const Space& s, const Vector& x) {
    auto report = verify_monotone(s, x, 360);
    CHECK(report.monotone);
    CHECK(report.samples == 360);
    CHECK(report.worst_violation <= 1e-9);
  };
  check_space(Space::lp(2.0, 2), {1.0, 0.0});
  check_space(Space::regular_polygon(3), {1.0, 0.0});
  check_space(Space::orthant_mixed(MixPiece::l1(), MixPiece::linf()), {1.0, 0.0});
  check_space(Space::lp(1.5, 2), {0.3, -0.8});
  for (int t = 0; t < 10; ++t) {
    Space s = testutil::random_polygon(rng);
    check_space(s, testutil::unit_in(s, testutil::gaussian(rng, 2)));
  }
}

TEST_CASE("monotone checker rejects bad input") {
  CHECK_THROWS_AS(verify_monotone(Space::lp(2.0, 3), {1.0, 0.0, 0.0}, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_monotone(Space::lp(2.0, 2), {0.0, 0.0}, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_monotone(Space::lp(2.0, 2), {1.0, 0.0}, 1),
                  std::invalid_argument);
}
