#include "normgeo/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace normgeo {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const Vector& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

double cross2(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double len2(const std::array<double, 2>& a) { return std::hypot(a[0], a[1]); }

double lp_norm(double p, const Vector& x) {
  double m = max_abs(x);
  if (m == 0.0) return 0.0;
  if (std::isinf(p)) return m;
  if (p == 1.0) {
    double s = 0.0;
    for (double c : x) s += std::abs(c);
    return s;
  }
  double s = 0.0;
  if (p == 2.0) {
    for (double c : x) s += (c / m) * (c / m);
    return m * std::sqrt(s);
  }
  for (double c : x) s += std::pow(std::abs(c) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double piece_norm(const MixPiece& piece, double a, double b) {
  switch (piece.kind) {
    case PieceKind::L1:
      return std::abs(a) + std::abs(b);
    case PieceKind::LInf:
      return std::max(std::abs(a), std::abs(b));
    case PieceKind::Lp:
      return lp_norm(piece.p, Vector{a, b});
  }
  return 0.0;
}

std::string piece_label(const MixPiece& piece) {
  switch (piece.kind) {
    case PieceKind::L1:
      return "l1";
    case PieceKind::LInf:
      return "linf";
    case PieceKind::Lp: {
      std::ostringstream os;
      os << "lp(" << piece.p << ")";
      return os.str();
    }
  }
  return "?";
}

void require_dim(const Space& s, const Vector& x, const char* what) {
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument(std::string(what) + ": vector size does not match space dimension");
}

// Supporting functionals contributed by one quadrant piece at an axis unit
// point sigma * e_k, approached from the quadrant with coordinate signs
// (s1, s2). L1 pieces contribute the quadrant edge functional; LInf and Lp
// pieces flatten onto the axis functional.
std::array<double, 2> axis_side_functional(const MixPiece& piece, int k, double sigma, double s1,
                                           double s2) {
  if (piece.kind == PieceKind::L1) return {s1, s2};
  return k == 0 ? std::array<double, 2>{sigma, 0.0} : std::array<double, 2>{0.0, sigma};
}

}  // namespace

double DualFunctional::operator()(const Vector& v) const {
  if (v.size() != coords.size())
    throw std::invalid_argument("functional/vector dimension mismatch");
  double s = 0.0;
  for (size_t i = 0; i < v.size(); ++i) s += coords[i] * v[i];
  return s;
}

MixPiece MixPiece::lp(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("piece exponent must satisfy p >= 1");
  if (p == 1.0) return l1();
  if (std::isinf(p)) return linf();
  return {PieceKind::Lp, p};
}

Space Space::lp(double p, int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must satisfy p >= 1");
  Space s;
  s.family_ = Family::Lp;
  s.dim_ = dim;
  s.p_ = p;
  return s;
}

Space Space::regular_polygon(int n) {
  if (n < 2) throw std::invalid_argument("regular 2n-gon needs n >= 2");
  Space s;
  s.family_ = Family::RegularPolygon;
  s.dim_ = 2;
  s.regular_n_ = n;
  s.vertices_ = regular_polygon_vertices(n);
  s.edge_functionals_.resize(2 * n);
  double c = std::cos(kPi / (2.0 * n));
  for (int i = 1; i <= n; ++i) {
    double a = (2.0 * i - 1.0) * kPi / (2.0 * n);
    s.edge_functionals_[i - 1] = {std::cos(a) / c, std::sin(a) / c};
    s.edge_functionals_[i - 1 + n] = {-s.edge_functionals_[i - 1][0],
                                      -s.edge_functionals_[i - 1][1]};
  }
  return s;
}

Space Space::polygon(const std::vector<std::array<double, 2>>& vertices) {
  Space s;
  s.family_ = Family::Polygon;
  s.dim_ = 2;
  std::vector<std::array<double, 2>> verts;
  verts.reserve(2 * vertices.size());
  for (const auto& v : vertices) {
    verts.push_back(v);
    verts.push_back({-v[0], -v[1]});
  }
  s.build_polygon_tables(std::move(verts));
  return s;
}

Space Space::orthant_mixed(MixPiece positive, MixPiece negative) {
  Space s;
  s.family_ = Family::OrthantMixed;
  s.dim_ = 2;
  s.pos_ = positive;
  s.neg_ = negative;
  return s;
}

void Space::build_polygon_tables(std::vector<std::array<double, 2>> verts) {
  double scale = 0.0;
  for (const auto& v : verts) scale = std::max({scale, std::abs(v[0]), std::abs(v[1])});
  if (scale <= 0.0) throw std::invalid_argument("polygon needs a nonzero vertex");

  std::erase_if(verts, [&](const auto& v) { return len2(v) <= 1e-12 * scale; });

  // Convex hull, monotone chain with strict turns (interior and edge-interior
  // points fall out here).
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() < 3) throw std::invalid_argument("polygon is degenerate");
  auto build_half = [&](auto begin, auto end) {
    std::vector<std::array<double, 2>> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2) {
        std::array<double, 2> e1{h.back()[0] - h[h.size() - 2][0],
                                 h.back()[1] - h[h.size() - 2][1]};
        std::array<double, 2> e2{(*it)[0] - h.back()[0], (*it)[1] - h.back()[1]};
        if (cross2(e1, e2) <= 0.0)
          h.pop_back();
        else
          break;
      }
      h.push_back(*it);
    }
    return h;
  };
  auto lower = build_half(verts.begin(), verts.end());
  auto upper = build_half(verts.rbegin(), verts.rend());
  std::vector<std::array<double, 2>> hull(lower.begin(), lower.end() - 1);
  hull.insert(hull.end(), upper.begin(), upper.end() - 1);

  // Merge near-duplicates and near-collinear triples left by rounding.
  double eps_pt = 1e-12 * scale;
  double eps_area = 1e-12 * scale * scale;
  bool changed = true;
  while (changed && hull.size() > 2) {
    changed = false;
    for (size_t i = 0; i < hull.size() && hull.size() > 2; ++i) {
      size_t j = (i + 1) % hull.size(), k = (i + 2) % hull.size();
      std::array<double, 2> e1{hull[j][0] - hull[i][0], hull[j][1] - hull[i][1]};
      std::array<double, 2> e2{hull[k][0] - hull[j][0], hull[k][1] - hull[j][1]};
      if (len2(e1) <= eps_pt || cross2(e1, e2) <= eps_area) {
        hull.erase(hull.begin() + j);
        changed = true;
        break;
      }
    }
  }
  if (hull.size() < 4) throw std::invalid_argument("polygon is degenerate");

  // Anchor the cycle at the smallest angle in (-pi, pi].
  size_t start = 0;
  for (size_t i = 1; i < hull.size(); ++i)
    if (std::atan2(hull[i][1], hull[i][0]) < std::atan2(hull[start][1], hull[start][0])) start = i;
  std::rotate(hull.begin(), hull.begin() + start, hull.end());

  size_t m = hull.size();
  edge_functionals_.resize(m);
  for (size_t i = 0; i < m; ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % m];
    double d = cross2(a, b);
    if (d <= eps_area) throw std::invalid_argument("polygon does not enclose the origin");
    edge_functionals_[i] = {(b[1] - a[1]) / d, (a[0] - b[0]) / d};
  }
  vertices_ = std::move(hull);
}

bool Space::is_smooth_family() const {
  if (family_ == Family::Lp) return p_ > 1.0 && !std::isinf(p_);
  if (family_ == Family::OrthantMixed)
    return pos_.kind == PieceKind::Lp && neg_.kind == PieceKind::Lp;
  return false;
}

const std::vector<std::array<double, 2>>& Space::vertices() const {
  if (!is_polygonal()) throw UnsupportedFamily("vertices: space has no polygon table");
  return vertices_;
}

const std::vector<std::array<double, 2>>& Space::edge_functionals() const {
  if (!is_polygonal()) throw UnsupportedFamily("edge_functionals: space has no polygon table");
  return edge_functionals_;
}

std::optional<Space> Space::as_polygon() const {
  switch (family_) {
    case Family::Polygon:
    case Family::RegularPolygon:
      return *this;
    case Family::Lp: {
      if (dim_ != 2) return std::nullopt;
      if (p_ == 1.0) return polygon({{1.0, 0.0}, {0.0, 1.0}});
      if (std::isinf(p_)) return polygon({{1.0, 1.0}, {-1.0, 1.0}});
      return std::nullopt;
    }
    case Family::OrthantMixed: {
      if (!pos_.polyhedral() || !neg_.polyhedral()) return std::nullopt;
      std::vector<std::array<double, 2>> verts{{1.0, 0.0}, {0.0, 1.0}};
      if (pos_.kind == PieceKind::LInf) verts.push_back({1.0, 1.0});
      if (neg_.kind == PieceKind::LInf) verts.push_back({-1.0, 1.0});
      return polygon(verts);
    }
  }
  return std::nullopt;
}

std::string Space::describe() const {
  std::ostringstream os;
  switch (family_) {
    case Family::Lp:
      if (p_ == 1.0)
        os << "l1:" << dim_;
      else if (std::isinf(p_))
        os << "linf:" << dim_;
      else
        os << "lp:" << dim_ << ":" << p_;
      break;
    case Family::Polygon:
      os << "polygon(" << vertices_.size() << " vertices)";
      break;
    case Family::RegularPolygon:
      os << "regular:" << regular_n_;
      break;
    case Family::OrthantMixed:
      os << "mix:" << piece_label(pos_) << "-" << piece_label(neg_);
      break;
  }
  return os.str();
}

std::vector<std::array<double, 2>> regular_polygon_vertices(int n) {
  if (n < 2) throw std::invalid_argument("regular 2n-gon needs n >= 2");
  std::vector<std::array<double, 2>> v(2 * n);
  for (int j = 1; j <= n; ++j) {
    double a = (j - 1) * kPi / n;
    v[j - 1] = {std::cos(a), std::sin(a)};
    v[j - 1 + n] = {-v[j - 1][0], -v[j - 1][1]};
  }
  return v;
}

double norm(const Space& s, const Vector& x) {
  require_dim(s, x, "norm");
  switch (s.family()) {
    case Space::Family::Lp:
      return lp_norm(s.p(), x);
    case Space::Family::Polygon:
    case Space::Family::RegularPolygon: {
      double m = 0.0;
      for (const auto& f : s.edge_functionals()) m = std::max(m, f[0] * x[0] + f[1] * x[1]);
      return m;
    }
    case Space::Family::OrthantMixed:
      return x[0] * x[1] >= 0.0 ? piece_norm(s.positive_piece(), x[0], x[1])
                                : piece_norm(s.negative_piece(), x[0], x[1]);
  }
  return 0.0;
}

double dual_norm(const Space& s, const DualFunctional& f) {
  if (static_cast<int>(f.coords.size()) != s.dim())
    throw std::invalid_argument("dual_norm: functional dimension mismatch");
  switch (s.family()) {
    case Space::Family::Lp: {
      if (s.p() == 1.0) return max_abs(f.coords);
      if (std::isinf(s.p())) return lp_norm(1.0, f.coords);
      return lp_norm(s.p() / (s.p() - 1.0), f.coords);
    }
    case Space::Family::Polygon:
    case Space::Family::RegularPolygon: {
      double m = 0.0;
      for (const auto& v : s.vertices())
        m = std::max(m, std::abs(f.coords[0] * v[0] + f.coords[1] * v[1]));
      return m;
    }
    case Space::Family::OrthantMixed: {
      auto poly = s.as_polygon();
      if (!poly) throw UnsupportedFamily("dual_norm: no exact dual for curved mixed pieces");
      return dual_norm(*poly, f);
    }
  }
  return 0.0;
}

std::vector<DualFunctional> ext_supporting_functionals(const Space& s, const Vector& x) {
  require_dim(s, x, "ext_supporting_functionals");
  double scale = max_abs(x);
  if (scale == 0.0) throw std::invalid_argument("supporting face undefined at the origin");

  std::vector<DualFunctional> out;
  switch (s.family()) {
    case Space::Family::Lp: {
      double p = s.p();
      if (p == 1.0) {
        std::vector<int> zero, sign(x.size(), 0);
        for (size_t k = 0; k < x.size(); ++k) {
          if (std::abs(x[k]) <= 1e-12 * scale)
            zero.push_back(static_cast<int>(k));
          else
            sign[k] = x[k] > 0 ? 1 : -1;
        }
        if (zero.size() > 16)
          throw std::invalid_argument("supporting face has too many extreme points to enumerate");
        size_t count = size_t{1} << zero.size();
        for (size_t mask = 0; mask < count; ++mask) {
          Vector f(x.size());
          for (size_t k = 0; k < x.size(); ++k) f[k] = sign[k];
          for (size_t b = 0; b < zero.size(); ++b) f[zero[b]] = (mask >> b) & 1 ? 1.0 : -1.0;
          out.push_back({std::move(f)});
        }
      } else if (std::isinf(p)) {
        for (size_t i = 0; i < x.size(); ++i) {
          if (std::abs(x[i]) >= (1.0 - 1e-12) * scale) {
            Vector f(x.size(), 0.0);
            f[i] = sgn(x[i]);
            out.push_back({std::move(f)});
          }
        }
      } else {
        double nx = lp_norm(p, x);
        Vector f(x.size());
        for (size_t k = 0; k < x.size(); ++k)
          f[k] = sgn(x[k]) * std::pow(std::abs(x[k]) / nx, p - 1.0);
        out.push_back({std::move(f)});
      }
      break;
    }
    case Space::Family::Polygon:
    case Space::Family::RegularPolygon: {
      double nx = norm(s, x);
      const auto& fs = s.edge_functionals();
      double best = 0.0;
      for (const auto& f : fs) best = std::max(best, (f[0] * x[0] + f[1] * x[1]) / nx);
      for (const auto& f : fs) {
        double v = (f[0] * x[0] + f[1] * x[1]) / nx;
        if (v >= best - tol::edge_membership) out.push_back({Vector{f[0], f[1]}});
      }
      break;
    }
    case Space::Family::OrthantMixed: {
      double a = x[0], b = x[1];
      auto push_unique = [&](std::array<double, 2> f) {
        for (const auto& g : out)
          if (std::abs(g.coords[0] - f[0]) <= 1e-12 && std::abs(g.coords[1] - f[1]) <= 1e-12)
            return;
        out.push_back({Vector{f[0], f[1]}});
      };
      if (std::min(std::abs(a), std::abs(b)) <= tol::axis_detect * scale) {
        int k = std::abs(a) >= std::abs(b) ? 0 : 1;
        double sigma = sgn(k == 0 ? a : b);
        for (double side : {1.0, -1.0}) {
          double s1 = k == 0 ? sigma : side;
          double s2 = k == 0 ? side : sigma;
          const MixPiece& piece = s1 * s2 > 0 ? s.positive_piece() : s.negative_piece();
          push_unique(axis_side_functional(piece, k, sigma, s1, s2));
        }
      } else {
        const MixPiece& piece = a * b > 0 ? s.positive_piece() : s.negative_piece();
        switch (piece.kind) {
          case PieceKind::L1:
            push_unique({sgn(a), sgn(b)});
            break;
          case PieceKind::LInf: {
            if (std::abs(std::abs(a) - std::abs(b)) <= 1e-12 * scale) {
              push_unique({sgn(a), 0.0});
              push_unique({0.0, sgn(b)});
            } else if (std::abs(a) > std::abs(b)) {
              push_unique({sgn(a), 0.0});
            } else {
              push_unique({0.0, sgn(b)});
            }
            break;
          }
          case PieceKind::Lp: {
            double r = piece_norm(piece, a, b);
            push_unique({sgn(a) * std::pow(std::abs(a) / r, piece.p - 1.0),
                         sgn(b) * std::pow(std::abs(b) / r, piece.p - 1.0)});
            break;
          }
        }
      }
      break;
    }
  }
  return out;
}

Vector sphere_point_2d(const Space& s, double theta) {
  if (s.dim() != 2) throw std::invalid_argument("sphere_point_2d needs a two dimensional space");
  Vector d{std::cos(theta), std::sin(theta)};
  double n = norm(s, d);
  return {d[0] / n, d[1] / n};
}

}  // namespace normgeo
