#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace normgeo {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 500;
};

/// Runs the full acceptance battery and returns one result per criterion.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts = {});

}  // namespace normgeo
