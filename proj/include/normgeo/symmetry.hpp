#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "normgeo/spaces.hpp"

namespace normgeo {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or a plain integer/decimal string.
Rational rational_from_string(const std::string& s);
/// Exact value of the double (every finite double is p / 2^k).
Rational rational_from_double(double v);
double to_double(const Rational& r);

/// Rescales x to the corresponding unit sphere, exactly.
RationalVector normalize_l1(const RationalVector& x);
RationalVector normalize_linf(const RationalVector& x);

/// rho-orthogonality x perp_rho y in l1^n, exact arithmetic:
///   sum_{k : x_k != 0} sgn(x_k) y_k == 0.
bool rho_ortho_l1(const RationalVector& x, const RationalVector& y);

/// rho-orthogonality in linf^n, exact arithmetic: with I the set of indices
/// attaining ||x||_inf, max_{i in I} sgn(x_i) y_i + min_{i in I} sgn(x_i) y_i == 0.
bool rho_ortho_linf(const RationalVector& x, const RationalVector& y);

struct SymmetryClass {
  bool left = false;
  bool right = false;
};

/// Decides whether x perp_rho y implies y perp_rho x for all y (left) and
/// conversely (right), for x on the unit sphere of l1^n. Inputs must have
/// ||x||_1 exactly 1 (see normalize_l1); anything else is rejected.
/// Left: x extreme, or exactly two nonzero coordinates of modulus 1/2.
/// Right: no nonzero {-1,0,+1} signing of the support sums to zero
/// (meet-in-the-middle subset search; supports larger than 20 throw).
SymmetryClass classify_l1(const RationalVector& x);

/// Same for linf^n, ||x||_inf exactly 1. Left: x_j = 0 off the max set.
/// Right: the max set is everything, or the off-max moduli all lie strictly
/// inside (0, 1) and are pairwise distinct.
SymmetryClass classify_linf(const RationalVector& x);

/// Float entry points: coordinates are taken exactly, except that moduli
/// within 1e-12 relative of each other (or of zero) are snapped to exact
/// ties, and a norm within 1e-9 of 1 is rescaled exactly.
SymmetryClass classify_l1(const Vector& x);
SymmetryClass classify_linf(const Vector& x);

/// Randomized falsification of left/right symmetry of x.
/// Left: builds y = alpha_right(x, d) x + d for random directions d, so
/// x perp_rho y by construction, then checks y perp_rho x. In l1^n and
/// linf^n the companions are instead sampled exactly from the solution set
/// of x perp_rho y, cycling through its sign patterns with random rational
/// magnitudes, and the reverse check is exact.
/// Right: samples y with y perp_rho x (exact patterns in l1^n / linf^n,
/// root-finding on s -> rho(y0 + s d, x) in smooth families), then checks
/// x perp_rho y. A counterexample is genuine; absence of one is evidence,
/// not proof. trials_run = 0 means no companion exists at all, so the
/// implication holds vacuously.
struct OracleResult {
  bool symmetric = true;
  long trials_run = 0;
  std::optional<Vector> counterexample;
};

OracleResult oracle_left_symmetric(const Space& s, const RationalVector& x, int trials = 500,
                                   std::uint64_t seed = 42);
OracleResult oracle_right_symmetric(const Space& s, const RationalVector& x, int trials = 500,
                                    std::uint64_t seed = 42);

OracleResult oracle_left_symmetric(const Space& s, const Vector& x, int trials = 500,
                                   std::uint64_t seed = 42);
OracleResult oracle_right_symmetric(const Space& s, const Vector& x, int trials = 500,
                                    std::uint64_t seed = 42);

/// Runs the left-symmetry oracle over random base points and reports the
/// fraction that pass. On 2D spaces the pair x = (-1/3, 1), y = (1, 0) is
/// also checked directly, since it separates the orders in the glued-norm
/// hexagon regardless of the random draw.
struct SymmetryProbeReport {
  bool symmetric = true;
  int x_samples = 0;
  int symmetric_samples = 0;
  double symmetric_fraction = 1.0;
  Vector witness_x;  // base point of the first asymmetric pair found
  Vector witness_y;
  double forward_rho = 0.0;   // rho(witness_x, witness_y), ~0 by construction
  double backward_rho = 0.0;  // rho(witness_y, witness_x), away from 0
};

SymmetryProbeReport probe_space_symmetry(const Space& s, int trials = 360,
                                         std::uint64_t seed = 42);

namespace tol {
inline constexpr double rational_tie = 1e-12;
}

}  // namespace normgeo
