#pragma once

#include "normgeo/spaces.hpp"

namespace normgeo {

enum class GammaMethod { ExactPolyhedral2D, ClosedForm2nGon, GridEstimate };

/// sup { |rho(x, y)| : x, y unit, x perp_B y } and where it was found.
struct GammaResult {
  double value = 0.0;
  Vector witness_x;
  Vector witness_y;
  GammaMethod method = GammaMethod::GridEstimate;
  bool lower_bound_only = false;
};

/// Exact supremum for spaces with a polygonal unit ball: the maximum over
/// ball vertices z of max(|rho(z, w1)|, |rho(z, w2)|) with {w1, w2} the
/// Birkhoff cone of z.
GammaResult gamma_polyhedral_2d(const Space& s);

/// Closed-form value for the regular 2n-gon:
///   n odd:  cos((n-2)pi/2n) / (2 cos(pi/2n))
///   n even: (cos((n-3)pi/2n) + cos((n-1)pi/2n)) / (4 cos(pi/2n))
double gamma_closed_form_2ngon(int n);

/// Grid sweep over sphere directions with refinement around candidate
/// maxima, including jump tracking of the cone boundary to catch isolated
/// spike directions. Lower bound in general.
GammaResult gamma_estimate(const Space& s, int coarse = 720, int refine = 60);

/// E(X) = sup_x diam J(x), measured in the dual norm. Exact families only.
double e_constant(const Space& s);

/// J(X) = sup { min(||x + y||, ||x - y||) : x, y unit }, grid estimate.
double james_constant_estimate(const Space& s, int coarse = 360, int refine = 60);

/// delta(eps) = inf { 1 - ||x + y||/2 : x, y unit, ||x - y|| >= eps }.
double modulus_of_convexity_estimate(const Space& s, double eps, int coarse = 360,
                                     int refine = 60);

/// Relation test: a space with Gamma(X) < 1/2 should not be uniformly
/// non-square with J(X) = 2. Flags the combination Gamma < 1/2 and J == 2.
struct UnsReport {
  double gamma = 0.0;
  double james = 0.0;
  bool consistent = true;
};

UnsReport check_uns_relation(const Space& s, int coarse = 360);

/// Gamma for l1^n and linf^n (n >= 2), independent of dimension.
inline constexpr double kGammaL1n = 0.5;
inline constexpr double kGammaLInfn = 0.5;

}  // namespace normgeo
