#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "normgeo/verify.hpp"

// Runs the full acceptance sweep and prints one line per criterion so the
// harness output is scannable without digging through assertion noise.
TEST_CASE("acceptance sweep") {
  auto results = normgeo::run_acceptance({});
  REQUIRE(results.size() == 12);
  for (const auto& r : results) {
    std::printf("%s  criterion %2d: %s (%s) [%.2fs]\n", r.passed ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
  }
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.name);
    CHECK(r.passed);
  }
}
