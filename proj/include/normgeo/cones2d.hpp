#pragma once

#include "normgeo/spaces.hpp"

namespace normgeo {

/// Orientation order on R^2 \ {0}: a precedes b when the rotation from a to b
/// is counterclockwise by less than pi, i.e. cross(a, b) > 0.
bool precedes(const Vector& a, const Vector& b);

/// The set {y : x perp_B y}, restricted to the unit sphere, is a closed arc
/// from w1 to w2 (counterclockwise); w1 is the boundary where rho_minus = 0,
/// w2 where rho_plus = 0. Smooth points have w1 == w2.
struct OrthoCone {
  Vector w1;
  Vector w2;
  Vector base;  // normalized x
};

/// 2D spaces. Built from the kernel directions of the supporting-face
/// functionals at x, so the endpoints are exact up to evaluation rounding.
OrthoCone ortho_cone(const Space& s, const Vector& x);

/// Cone endpoints at vertex v_m of the regular 2n-gon, by closed form.
/// Indices are 1-based and wrap modulo 2n. Both endpoints are checked
/// against the edge functionals that must vanish on them before returning.
OrthoCone regular_polygon_cone(int n, int m);

/// Samples the open arc from x to -x (counterclockwise) and checks that the
/// mean derivative rho(x, .) never rises above an earlier sample by more
/// than the slack.
struct MonotoneReport {
  bool monotone = true;
  int samples = 0;
  double worst_violation = 0.0;  // largest increase seen, 0 when monotone
  Vector witness;                // direction where the worst increase ends
};

MonotoneReport verify_monotone(const Space& s, const Vector& x, int samples = 360);

namespace tol {
inline constexpr double cone_angle = 1e-12;
inline constexpr double monotone_slack = 1e-9;
}

}  // namespace normgeo
