#pragma once

#include <optional>

#include "normgeo/spaces.hpp"

namespace normgeo {

enum class DerivMethod { Exact, Numeric };

/// One-sided norm derivatives at x in direction y, scaled by ||x||:
///   rho_plus  = ||x|| * lim_{t->0+} (||x + t y|| - ||x||) / t
///   rho_minus = same with t->0-
///   rho       = (rho_plus + rho_minus) / 2
/// Numeric results carry certified outer bounds: the true values satisfy
/// rho_minus <= rho'_- <= rho'_+ <= rho_plus, and bracket_width bounds the
/// excess. Exact results have bracket_width = 0.
struct DerivativeTriple {
  double rho_plus = 0.0;
  double rho_minus = 0.0;
  double rho = 0.0;
  DerivMethod method = DerivMethod::Exact;
  double bracket_width = 0.0;
};

/// Exact when the family supports it, numeric fallback otherwise.
DerivativeTriple derivative(const Space& s, const Vector& x, const Vector& y);

/// Difference-quotient ladder with certified roundoff padding.
DerivativeTriple derivative_numeric(const Space& s, const Vector& x, const Vector& y);

/// Birkhoff-James: rho_minus <= 0 <= rho_plus, within tolerance.
bool is_birkhoff(const Space& s, const Vector& x, const Vector& y);

/// rho(x, y) == 0 within tolerance.
bool is_rho_orthogonal(const Space& s, const Vector& x, const Vector& y);

enum class RhoCone { Neither, PlusOnly, MinusOnly, Both };

/// Which of rho_plus, rho_minus vanish at (x, y), within tolerance.
RhoCone rho_cone_membership(const Space& s, const Vector& x, const Vector& y);

/// The unique alpha with rho(x, alpha x + y) = 0, i.e. -rho(x, y) / ||x||^2.
double alpha_right(const Space& s, const Vector& x, const Vector& y);

struct AlphaLeftSearch {
  double range = 1e3;
  int steps = 10000;
};

/// Searches for alpha with rho(alpha x + y, x) = 0. Existence is not
/// guaranteed; returns the root nearest zero, or nullopt if the scan finds
/// none. Scan-plus-bisection; jump discontinuities without a zero crossing
/// through small values are rejected.
std::optional<double> alpha_left(const Space& s, const Vector& x, const Vector& y,
                                 const AlphaLeftSearch& opts = {});

/// rho_plus(x, y) == rho_minus(x, y) for every y probed exactly; for smooth
/// families always true.
bool is_smooth_point(const Space& s, const Vector& x);

namespace tol {
inline constexpr double orthogonality = 1e-9;  // relative to ||x|| ||y||
}

}  // namespace normgeo
