#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "normgeo/spaces.hpp"
#include "util.hpp"

using namespace normgeo;

TEST_CASE("lp norms on frozen vectors") {
  Vector x{3.0, -4.0};
  CHECK(norm(Space::l1(2), x) == 7.0);
  CHECK(norm(Space::linf(2), x) == 4.0);
  CHECK(norm(Space::lp(2.0, 2), x) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm(Space::lp(3.0, 2), x) ==
        doctest::Approx(std::cbrt(27.0 + 64.0)).epsilon(1e-15));
  CHECK(norm(Space::l1(3), {0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("lp constructor rejects p below one and bad dimensions") {
  CHECK_THROWS_AS(Space::lp(0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(Space::lp(2.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Space::regular_polygon(1), std::invalid_argument);
}

TEST_CASE("regular polygon vertices negate exactly") {
  for (int n = 2; n <= 12; ++n) {
    auto v = regular_polygon_vertices(n);
    REQUIRE(static_cast<int>(v.size()) == 2 * n);
    for (int j = 0; j < n; ++j) {
      CHECK(v[j + n][0] == -v[j][0]);
      CHECK(v[j + n][1] == -v[j][1]);
    }
    Space s = Space::regular_polygon(n);
    for (const auto& vert : v)
      CHECK(norm(s, {vert[0], vert[1]}) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("diamond and hexagon vertices") {
  auto d = regular_polygon_vertices(2);
  CHECK(d[0][0] == 1.0);
  CHECK(d[1][0] == doctest::Approx(0.0).epsilon(1e-16));
  CHECK(d[1][1] == 1.0);
  auto h = regular_polygon_vertices(3);
  CHECK(h[1][0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(h[1][1] == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("polygon constructor closes, orders, and prunes") {
  // One vertex given; closure adds the antipode.
  Space s = Space::polygon({{2.0, 0.0}, {0.0, 1.0}});
  CHECK(s.vertices().size() == 4);
  CHECK(norm(s, {2.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(norm(s, {0.0, -1.0}) == doctest::Approx(1.0).epsilon(1e-14));

  // A midpoint of an edge is collinear and must be dropped.
  Space t = Space::polygon({{1.0, 0.0}, {0.5, 0.5}, {0.0, 1.0}});
  CHECK(t.vertices().size() == 4);

  CHECK_THROWS_AS(Space::polygon({}), std::invalid_argument);
  CHECK_THROWS_AS(Space::polygon({{1.0, 0.0}, {-1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("dual norm pairs l1 with linf and keeps l2 self dual") {
  DualFunctional f{{3.0, -4.0}};
  CHECK(dual_norm(Space::l1(2), f) == 4.0);
  CHECK(dual_norm(Space::linf(2), f) == 7.0);
  CHECK(dual_norm(Space::lp(2.0, 2), f) == doctest::Approx(5.0).epsilon(1e-15));
  double q = 1.5;  // conjugate of p = 3
  CHECK(dual_norm(Space::lp(3.0, 2), f) ==
        doctest::Approx(std::pow(std::pow(3.0, q) + std::pow(4.0, q), 1.0 / q))
            .epsilon(1e-14));
}

TEST_CASE("edge functionals attain one on their edges") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Space s = testutil::random_polygon(rng);
    const auto& v = s.vertices();
    const auto& fs = s.edge_functionals();
    REQUIRE(fs.size() == v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      size_t j = (i + 1) % v.size();
      double at_i = fs[i][0] * v[i][0] + fs[i][1] * v[i][1];
      double at_j = fs[i][0] * v[j][0] + fs[i][1] * v[j][1];
      CHECK(at_i == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(at_j == doctest::Approx(1.0).epsilon(1e-12));
      DualFunctional f{{fs[i][0], fs[i][1]}};
      CHECK(dual_norm(s, f) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("supporting face extreme points") {
  SUBCASE("euclidean gradient") {
    auto fs = ext_supporting_functionals(Space::lp(2.0, 2), {3.0, 4.0});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].coords[0] == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(fs[0].coords[1] == doctest::Approx(0.8).epsilon(1e-15));
  }
  SUBCASE("l1 coordinate axis fans out over sign patterns") {
    auto fs = ext_supporting_functionals(Space::l1(2), {1.0, 0.0});
    CHECK(fs.size() == 2);
    for (const auto& f : fs) {
      CHECK(f.coords[0] == 1.0);
      CHECK(std::abs(f.coords[1]) == 1.0);
    }
  }
  SUBCASE("sup norm corner") {
    auto fs = ext_supporting_functionals(Space::linf(2), {1.0, 1.0});
    CHECK(fs.size() == 2);
  }
  SUBCASE("sup norm flat point is smooth") {
    auto fs = ext_supporting_functionals(Space::linf(2), {1.0, 0.25});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].coords[0] == 1.0);
    CHECK(fs[0].coords[1] == 0.0);
  }
  SUBCASE("polygon vertex vs edge interior") {
    Space s = Space::regular_polygon(3);
    CHECK(ext_supporting_functionals(s, {1.0, 0.0}).size() == 2);
    CHECK(ext_supporting_functionals(s, {0.9, 0.1}).size() == 1);
  }
  SUBCASE("scale invariance and zero rejection") {
    Space s = Space::l1(3);
    auto a = ext_supporting_functionals(s, {1.0, -2.0, 0.0});
    auto b = ext_supporting_functionals(s, {10.0, -20.0, 0.0});
    REQUIRE(a.size() == b.size());
    CHECK_THROWS_AS(ext_supporting_functionals(s, {0.0, 0.0, 0.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("sphere points sit on the sphere in the right direction") {
  std::mt19937_64 rng(11);
  std::vector<Space> spaces = {Space::lp(2.0, 2), Space::l1(2), Space::linf(2),
                               Space::lp(1.5, 2), Space::regular_polygon(5),
                               Space::orthant_mixed(MixPiece::l1(), MixPiece::linf()),
                               testutil::random_polygon(rng)};
  for (const Space& s : spaces) {
    for (int k = 0; k < 64; ++k) {
      double theta = 6.283185307179586 * k / 64.0;
      Vector y = sphere_point_2d(s, theta);
      CHECK(norm(s, y) == doctest::Approx(1.0).epsilon(1e-12));
      double want_cross = std::cos(theta) * y[1] - std::sin(theta) * y[0];
      CHECK(want_cross == doctest::Approx(0.0).epsilon(1e-12));
      CHECK(std::cos(theta) * y[0] + std::sin(theta) * y[1] > 0.0);
    }
  }
}

TEST_CASE("polyhedral views") {
  auto square = Space::l1(2).as_polygon();
  REQUIRE(square.has_value());
  CHECK(square->vertices().size() == 4);

  auto hex = Space::orthant_mixed(MixPiece::l1(), MixPiece::linf()).as_polygon();
  REQUIRE(hex.has_value());
  CHECK(hex->vertices().size() == 6);

  CHECK_FALSE(Space::lp(3.0, 2).as_polygon().has_value());
  CHECK_FALSE(Space::orthant_mixed(MixPiece::lp(3.0), MixPiece::l1())
                  .as_polygon()
                  .has_value());
}

TEST_CASE("glued norm evaluates piecewise") {
  Space s = Space::orthant_mixed(MixPiece::l1(), MixPiece::linf());
  CHECK(norm(s, {1.0, 2.0}) == 3.0);    // same signs: l1
  CHECK(norm(s, {-1.0, 2.0}) == 2.0);   // mixed signs: sup
  CHECK(norm(s, {1.0, 0.0}) == 1.0);    // axis agrees for both pieces
  CHECK(norm(s, {0.0, -2.0}) == 2.0);
  Space t = Space::orthant_mixed(MixPiece::lp(3.0), MixPiece::l1());
  CHECK(norm(t, {1.0, 1.0}) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));
  CHECK(norm(t, {1.0, -1.0}) == 2.0);
}

TEST_CASE("family predicates and descriptions") {
  CHECK(Space::lp(2.0, 3).is_smooth_family());
  CHECK(Space::lp(1.5, 2).is_smooth_family());
  CHECK_FALSE(Space::l1(2).is_smooth_family());
  CHECK_FALSE(Space::linf(4).is_smooth_family());
  CHECK_FALSE(Space::regular_polygon(3).is_smooth_family());
  for (const Space& s : {Space::l1(3), Space::regular_polygon(4),
                         Space::orthant_mixed(MixPiece::l1(), MixPiece::lp(2.0))})
    CHECK_FALSE(s.describe().empty());
}
