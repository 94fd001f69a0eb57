#pragma once

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "normgeo/spaces.hpp"
#include "normgeo/symmetry.hpp"

namespace testutil {

inline normgeo::Vector gaussian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  normgeo::Vector v(n);
  for (double& c : v) c = g(rng);
  return v;
}

inline normgeo::Vector unit_in(const normgeo::Space& s, normgeo::Vector v) {
  double n = normgeo::norm(s, v);
  for (double& c : v) c /= n;
  return v;
}

inline normgeo::Space random_polygon(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(3, 8);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> radius(0.5, 1.5);
  for (;;) {
    std::vector<std::array<double, 2>> pts;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      double a = angle(rng), r = radius(rng);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    try {
      return normgeo::Space::polygon(pts);
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Unit vector with small rational coordinates, mixing sparse, tied, and
/// extreme-direction draws so classifier edge cases show up.
inline normgeo::RationalVector random_rational_unit(std::mt19937_64& rng, int n,
                                                    bool sup_norm) {
  using normgeo::Rational;
  std::uniform_int_distribution<int> num(-6, 6), den(1, 6);
  std::uniform_int_distribution<int> mode(0, 5), pick(0, n - 1);
  for (;;) {
    normgeo::RationalVector x(n);
    for (int k = 0; k < n; ++k) x[k] = Rational(num(rng), den(rng));
    switch (mode(rng)) {
      case 0:
        for (int k = 0; k < n; ++k)
          if (rng() % 2 == 0) x[k] = 0;
        break;
      case 1: {
        int i = pick(rng), j = pick(rng);
        Rational m = x[j] < 0 ? Rational(-x[j]) : x[j];
        x[i] = rng() % 2 == 0 ? m : Rational(-m);
        break;
      }
      case 2: {
        for (int k = 0; k < n; ++k) x[k] = 0;
        x[pick(rng)] = rng() % 2 == 0 ? 1 : -1;
        break;
      }
      default:
        break;
    }
    bool zero = true;
    for (const auto& c : x) zero = zero && c == 0;
    if (zero) continue;
    return sup_norm ? normgeo::normalize_linf(x) : normgeo::normalize_l1(x);
  }
}

inline double cross2(const normgeo::Vector& a, const normgeo::Vector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

}  // namespace testutil
