#include "normgeo/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "normgeo/cones2d.hpp"
#include "normgeo/derivatives.hpp"

namespace normgeo {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a < -kPi) a += 2.0 * kPi;
  return a;
}

Vector add(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, int iters,
                  double* arg = nullptr) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double mid = 0.5 * (a + b), fm = f(mid);
  if (arg) *arg = mid;
  return fm;
}

struct GammaScan {
  const Space& s;
  GammaResult best;
  double last_score = 0.0;
  long evals = 0;
  long eval_budget = 0;

  explicit GammaScan(const Space& space) : s(space) {}

  // Scores both cone ends at the direction phi and reports the lower cone
  // boundary's angle, whose drift between neighbours flags vertex crossings.
  double probe(double phi) {
    ++evals;
    Vector x = sphere_point_2d(s, phi);
    OrthoCone cone = ortho_cone(s, x);
    last_score = 0.0;
    for (const Vector* w : {&cone.w1, &cone.w2}) {
      double v = std::abs(derivative(s, x, *w).rho);
      last_score = std::max(last_score, v);
      if (v > best.value) {
        best.value = v;
        best.witness_x = x;
        best.witness_y = *w;
      }
    }
    return std::atan2(cone.w1[1], cone.w1[0]);
  }

  void refine_jump(double lo, double hi, double alo, double ahi, int depth) {
    if (depth >= 20 || evals >= eval_budget) return;
    constexpr int kSplit = 4;
    double width = (hi - lo) / kSplit;
    double prev = lo, aprev = alo;
    for (int k = 1; k <= kSplit; ++k) {
      double cur = k == kSplit ? hi : lo + k * width;
      double acur = k == kSplit ? ahi : probe(cur);
      if (std::abs(wrap_angle(acur - aprev)) > 4.0 * width && cur > prev)
        refine_jump(prev, cur, aprev, acur, depth + 1);
      prev = cur;
      aprev = acur;
    }
  }
};

double face_diameter(const Space& s, const Vector& x) {
  auto face = ext_supporting_functionals(s, x);
  double d = 0.0;
  for (size_t i = 0; i < face.size(); ++i)
    for (size_t j = i + 1; j < face.size(); ++j) {
      DualFunctional diff{sub(face[i].coords, face[j].coords)};
      d = std::max(d, dual_norm(s, diff));
    }
  return d;
}

}  // namespace

double gamma_closed_form_2ngon(int n) {
  if (n < 2) throw std::invalid_argument("regular 2n-gon needs n >= 2");
  double c = std::cos(kPi / (2.0 * n));
  if (n % 2 == 1) return std::cos((n - 2) * kPi / (2.0 * n)) / (2.0 * c);
  return (std::cos((n - 3) * kPi / (2.0 * n)) + std::cos((n - 1) * kPi / (2.0 * n))) / (4.0 * c);
}

GammaResult gamma_polyhedral_2d(const Space& s) {
  auto poly = s.as_polygon();
  if (!poly) throw UnsupportedFamily("gamma_polyhedral_2d: unit ball is not a polygon");

  GammaResult result;
  result.method = GammaMethod::ExactPolyhedral2D;
  result.lower_bound_only = false;
  // The supremum is attained at a ball vertex, and within a vertex cone the
  // derivative magnitude peaks at the cone ends, so the vertex sweep is
  // exhaustive.
  for (const auto& vert : poly->vertices()) {
    Vector z{vert[0], vert[1]};
    OrthoCone cone = ortho_cone(*poly, z);
    for (const Vector* w : {&cone.w1, &cone.w2}) {
      double v = std::abs(derivative(*poly, z, *w).rho);
      if (v > result.value) {
        result.value = v;
        result.witness_x = z;
        result.witness_y = *w;
      }
    }
  }
  return result;
}

GammaResult gamma_estimate(const Space& s, int coarse, int refine) {
  if (s.dim() != 2) throw UnsupportedFamily("gamma_estimate covers two dimensional spaces");
  if (coarse < 8) throw std::invalid_argument("gamma_estimate needs a denser grid");

  GammaScan scan(s);
  scan.eval_budget = 80L * coarse + 20000;
  double step = kPi / coarse;

  std::vector<double> angles(coarse + 1);
  double best_coarse_phi = 0.0, best_coarse_val = -1.0;
  for (int i = 0; i <= coarse; ++i) {
    angles[i] = scan.probe(i * step);
    if (scan.last_score > best_coarse_val) {
      best_coarse_val = scan.last_score;
      best_coarse_phi = i * step;
    }
  }
  for (int i = 0; i < coarse; ++i) {
    if (std::abs(wrap_angle(angles[i + 1] - angles[i])) > 4.0 * step)
      scan.refine_jump(i * step, (i + 1) * step, angles[i], angles[i + 1], 0);
  }

  if (refine > 0) {
    auto score = [&](double phi) {
      Vector x = sphere_point_2d(s, phi);
      OrthoCone cone = ortho_cone(s, x);
      double v = std::max(std::abs(derivative(s, x, cone.w1).rho),
                          std::abs(derivative(s, x, cone.w2).rho));
      if (v > scan.best.value) {
        scan.best.value = v;
        scan.best.witness_x = x;
        scan.best.witness_y = std::abs(derivative(s, x, cone.w1).rho) >= v ? cone.w1 : cone.w2;
      }
      return v;
    };
    golden_max(score, best_coarse_phi - step, best_coarse_phi + step, refine);
  }

  GammaResult result = scan.best;
  result.method = GammaMethod::GridEstimate;
  result.lower_bound_only = true;
  return result;
}

double e_constant(const Space& s) {
  switch (s.family()) {
    case Space::Family::Lp: {
      double p = s.p();
      if (p > 1.0 && !std::isinf(p)) return 0.0;
      return s.dim() >= 2 ? 2.0 : 0.0;
    }
    case Space::Family::Polygon:
    case Space::Family::RegularPolygon: {
      double e = 0.0;
      for (const auto& vert : s.vertices()) e = std::max(e, face_diameter(s, {vert[0], vert[1]}));
      return e;
    }
    case Space::Family::OrthantMixed: {
      auto poly = s.as_polygon();
      if (!poly) throw UnsupportedFamily("e_constant: no exact dual diameter for curved pieces");
      return e_constant(*poly);
    }
  }
  return 0.0;
}

double james_constant_estimate(const Space& s, int coarse, int refine) {
  if (s.dim() != 2) throw UnsupportedFamily("james_constant_estimate covers two dimensional spaces");
  auto value = [&](const Vector& x, const Vector& y) {
    return std::min(norm(s, add(x, y)), norm(s, sub(x, y)));
  };

  double step = kPi / coarse;
  double best = 0.0, bx = 0.0, by = 0.0;
  for (int i = 0; i < coarse; ++i)
    for (int j = 0; j < coarse; ++j) {
      double v = value(sphere_point_2d(s, i * step), sphere_point_2d(s, j * step));
      if (v > best) {
        best = v;
        bx = i * step;
        by = j * step;
      }
    }

  for (int round = 0; round < 3 && refine > 0; ++round) {
    double cur_by = by;
    golden_max(
        [&](double ty) {
          double v = value(sphere_point_2d(s, bx), sphere_point_2d(s, ty));
          if (v > best) {
            best = v;
            cur_by = ty;
          }
          return v;
        },
        by - step, by + step, refine);
    by = cur_by;
    double cur_bx = bx;
    golden_max(
        [&](double tx) {
          double v = value(sphere_point_2d(s, tx), sphere_point_2d(s, by));
          if (v > best) {
            best = v;
            cur_bx = tx;
          }
          return v;
        },
        bx - step, bx + step, refine);
    bx = cur_bx;
  }
  return best;
}

double modulus_of_convexity_estimate(const Space& s, double eps, int coarse, int refine) {
  if (s.dim() != 2) throw UnsupportedFamily("modulus estimate covers two dimensional spaces");
  if (!(eps >= 0.0 && eps <= 2.0)) throw std::invalid_argument("eps must lie in [0, 2]");
  if (eps == 0.0) return 0.0;

  double step = kPi / coarse;
  double best = 1.0;

  // Grid pass over feasible pairs.
  std::vector<Vector> pts(2 * coarse);
  for (int i = 0; i < 2 * coarse; ++i) pts[i] = sphere_point_2d(s, i * step);
  for (int i = 0; i < coarse; ++i)
    for (int j = 0; j < 2 * coarse; ++j) {
      if (norm(s, sub(pts[i], pts[j])) >= eps - 1e-12)
        best = std::min(best, 1.0 - 0.5 * norm(s, add(pts[i], pts[j])));
    }

  // Constraint-boundary pass: walking y away from x, the separation grows
  // from 0 to 2, so a bisection lands on ||x - y|| = eps.
  auto boundary_value = [&](double theta_x, double side) {
    Vector x = sphere_point_2d(s, theta_x);
    double lo = 0.0, hi = kPi;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (lo + hi);
      if (norm(s, sub(x, sphere_point_2d(s, theta_x + side * mid))) < eps)
        lo = mid;
      else
        hi = mid;
    }
    Vector y = sphere_point_2d(s, theta_x + side * hi);
    return 1.0 - 0.5 * norm(s, add(x, y));
  };
  double best_theta = 0.0;
  for (int i = 0; i < coarse; ++i) {
    for (double side : {1.0, -1.0}) {
      double v = boundary_value(i * step, side);
      if (v < best) {
        best = v;
        best_theta = i * step;
      }
    }
  }
  if (refine > 0) {
    for (double side : {1.0, -1.0}) {
      double v = -golden_max([&](double t) { return -boundary_value(t, side); },
                             best_theta - step, best_theta + step, refine);
      best = std::min(best, v);
    }
  }
  return std::max(best, 0.0);
}

UnsReport check_uns_relation(const Space& s, int coarse) {
  UnsReport report;
  if (s.as_polygon())
    report.gamma = gamma_polyhedral_2d(s).value;
  else
    report.gamma = gamma_estimate(s, coarse, 60).value;
  report.james = james_constant_estimate(s, coarse, 60);
  report.consistent = !(report.gamma < 0.5 - 1e-6 && report.james > 2.0 - 1e-6);
  return report;
}

}  // namespace normgeo
