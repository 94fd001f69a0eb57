#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace normgeo {

/// Coordinate vector in R^n.
using Vector = std::vector<double>;

/// Thrown when an operation is asked for a space family it does not cover.
class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PieceKind { L1, LInf, Lp };

/// One half of a quadrant-glued norm on R^2.
struct MixPiece {
  PieceKind kind = PieceKind::L1;
  double p = 1.0;

  static MixPiece l1() { return {PieceKind::L1, 1.0}; }
  static MixPiece linf() { return {PieceKind::LInf, std::numeric_limits<double>::infinity()}; }
  static MixPiece lp(double p);

  bool polyhedral() const { return kind != PieceKind::Lp; }
};

/// A linear functional on R^n together with dot-product evaluation.
struct DualFunctional {
  Vector coords;

  double operator()(const Vector& v) const;
};

/// Finite-dimensional normed space descriptor. Families:
///   - lp(p, n):            (R^n, ||.||_p), 1 <= p <= inf
///   - polygon(vertices):   R^2 with an origin-symmetric convex polygon as unit ball
///   - regular_polygon(n):  R^2 with the regular 2n-gon unit ball, vertices
///                          v_j = (cos((j-1)pi/n), sin((j-1)pi/n))
///   - orthant_mixed(a, b): R^2 glued norm; piece `a` where x1*x2 >= 0, piece `b` otherwise
class Space {
 public:
  enum class Family { Lp, Polygon, RegularPolygon, OrthantMixed };

  static Space lp(double p, int dim);
  static Space l1(int dim) { return lp(1.0, dim); }
  static Space linf(int dim) { return lp(std::numeric_limits<double>::infinity(), dim); }
  /// Applies origin-symmetric closure, sorts counterclockwise, drops
  /// collinear vertices. Throws std::invalid_argument on degenerate input.
  static Space polygon(const std::vector<std::array<double, 2>>& vertices);
  static Space regular_polygon(int n);
  static Space orthant_mixed(MixPiece positive, MixPiece negative);

  Family family() const { return family_; }
  int dim() const { return dim_; }
  double p() const { return p_; }
  int regular_n() const { return regular_n_; }
  MixPiece positive_piece() const { return pos_; }
  MixPiece negative_piece() const { return neg_; }

  bool is_lp() const { return family_ == Family::Lp; }
  bool is_polygonal() const {
    return family_ == Family::Polygon || family_ == Family::RegularPolygon;
  }
  bool is_mixed() const { return family_ == Family::OrthantMixed; }
  /// True for the families whose unit sphere is smooth everywhere.
  bool is_smooth_family() const;

  /// Unit-ball extreme points, counterclockwise. Polygonal families only.
  const std::vector<std::array<double, 2>>& vertices() const;
  /// Edge functionals; entry i supports the edge [v_i, v_{i+1}].
  const std::vector<std::array<double, 2>>& edge_functionals() const;

  /// Polyhedral representation of this space when one exists (polygonal
  /// families, 2D l1/linf, mixes of polyhedral pieces).
  std::optional<Space> as_polygon() const;

  std::string describe() const;

 private:
  Space() = default;

  Family family_ = Family::Lp;
  int dim_ = 0;
  double p_ = 2.0;
  int regular_n_ = 0;
  MixPiece pos_, neg_;
  std::vector<std::array<double, 2>> vertices_;
  std::vector<std::array<double, 2>> edge_functionals_;

  void build_polygon_tables(std::vector<std::array<double, 2>> verts);
};

double norm(const Space& s, const Vector& x);

/// Norm of f in the dual space. Polyhedral and lp families.
double dual_norm(const Space& s, const DualFunctional& f);

/// Extreme points of the supporting face J(x/||x||) = {f in S_X* : f(x) = ||x||}.
/// The result is scale-invariant in x. Throws std::invalid_argument for x = 0,
/// UnsupportedFamily where no exact description is implemented.
std::vector<DualFunctional> ext_supporting_functionals(const Space& s, const Vector& x);

/// Point of the unit sphere in direction (cos theta, sin theta). 2D only.
Vector sphere_point_2d(const Space& s, double theta);

/// Vertices of the regular 2n-gon, v_{j+n} = -v_j exactly.
std::vector<std::array<double, 2>> regular_polygon_vertices(int n);

namespace tol {
inline constexpr double edge_membership = 1e-10;  // relative, face attainment
inline constexpr double axis_detect = 1e-12;      // relative, gluing-axis test
inline constexpr double dual_tie = 1e-12;
}  // namespace tol

}  // namespace normgeo
