#include "normgeo/cones2d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "normgeo/derivatives.hpp"

namespace normgeo {

namespace {

double cross2v(const Vector& a, const Vector& b) { return a[0] * b[1] - a[1] * b[0]; }

Vector unit(const Space& s, Vector v) {
  double n = norm(s, v);
  return {v[0] / n, v[1] / n};
}

}  // namespace

bool precedes(const Vector& a, const Vector& b) {
  if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("precedes is a planar order");
  return cross2v(a, b) > 0.0;
}

OrthoCone ortho_cone(const Space& s, const Vector& x) {
  if (s.dim() != 2) throw std::invalid_argument("ortho_cone needs a two dimensional space");
  double nx = norm(s, x);
  if (nx == 0.0) throw std::invalid_argument("ortho_cone undefined at the origin");

  // Each supporting functional f = (a, b) at x vanishes on d = (-b, a), and
  // cross(x, d) = f(x) > 0 puts every d in the open half circle
  // counterclockwise of x. Sweeping from x, rho_minus hits zero at the first
  // kernel direction and rho_plus at the last, so those are the arc ends.
  auto face = ext_supporting_functionals(s, x);
  Vector first, last;
  for (const auto& f : face) {
    Vector d{-f.coords[1], f.coords[0]};
    if (first.empty() || cross2v(d, first) > 0.0) first = d;
    if (last.empty() || cross2v(last, d) > 0.0) last = d;
  }
  OrthoCone cone;
  cone.base = {x[0] / nx, x[1] / nx};
  cone.w1 = unit(s, first);
  cone.w2 = unit(s, last);
  return cone;
}

OrthoCone regular_polygon_cone(int n, int m) {
  if (n < 2) throw std::invalid_argument("regular 2n-gon needs n >= 2");
  if (m < 1 || m > 2 * n) throw std::invalid_argument("vertex index out of range");
  auto verts = regular_polygon_vertices(n);
  auto at = [&](int one_based) -> const std::array<double, 2>& {
    int idx = ((one_based - 1) % (2 * n) + 2 * n) % (2 * n);
    return verts[idx];
  };
  auto mid = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return Vector{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
  };

  OrthoCone cone;
  const auto& base = at(m);
  cone.base = {base[0], base[1]};
  if (n % 2 == 1) {
    const auto& a = at((n + 2 * m - 1) / 2);
    const auto& b = at((n + 2 * m + 1) / 2);
    cone.w1 = {a[0], a[1]};
    cone.w2 = {b[0], b[1]};
  } else {
    cone.w1 = mid(at((n + 2 * m - 2) / 2), at((n + 2 * m) / 2));
    cone.w2 = mid(at((n + 2 * m) / 2), at((n + 2 * m + 2) / 2));
  }

  // The half-integer index formulas are easy to misread, so each endpoint is
  // checked against the edge functional whose kernel it must lie in: the edge
  // arriving at v_m kills w1 and the edge leaving v_m kills w2.
  auto edge_functional = [&](int one_based) {
    double phi = (2.0 * one_based - 1.0) * std::numbers::pi / (2.0 * n);
    double scale = std::cos(std::numbers::pi / (2.0 * n));
    return Vector{std::cos(phi) / scale, std::sin(phi) / scale};
  };
  auto apply = [](const Vector& f, const Vector& v) { return f[0] * v[0] + f[1] * v[1]; };
  if (std::abs(apply(edge_functional(m - 1), cone.w1)) > tol::cone_angle ||
      std::abs(apply(edge_functional(m), cone.w2)) > tol::cone_angle) {
    throw std::logic_error("regular polygon cone endpoints missed the edge kernels");
  }
  return cone;
}

MonotoneReport verify_monotone(const Space& s, const Vector& x, int samples) {
  if (s.dim() != 2) throw std::invalid_argument("verify_monotone needs a two dimensional space");
  double nx = norm(s, x);
  if (nx == 0.0) throw std::invalid_argument("verify_monotone undefined at the origin");
  if (samples < 2) throw std::invalid_argument("verify_monotone needs at least two samples");

  MonotoneReport report;
  report.samples = samples;
  double theta0 = std::atan2(x[1], x[0]);
  double slack = tol::monotone_slack * nx;

  // rho(x, w_i) >= rho(x, w_j) - slack for every i < j reduces to comparing
  // each sample against the running minimum of the earlier ones.
  double floor_so_far = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= samples; ++i) {
    double theta = theta0 + std::numbers::pi * i / (samples + 1.0);
    Vector y = sphere_point_2d(s, theta);
    double value = derivative(s, x, y).rho;
    double rise = value - floor_so_far;
    if (rise > report.worst_violation) {
      report.worst_violation = rise;
      report.witness = y;
    }
    floor_so_far = std::min(floor_so_far, value);
  }
  report.monotone = report.worst_violation <= slack;
  return report;
}

}  // namespace normgeo
