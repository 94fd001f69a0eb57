#include "normgeo/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "normgeo/derivatives.hpp"

namespace normgeo {

namespace {

using boost::multiprecision::cpp_int;

int sign_of(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

Rational abs_r(const Rational& r) { return r < 0 ? Rational(-r) : r; }

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Independent stream per trial, so verdicts do not depend on trial order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(mix64(seed) ^ mix64(trial + 0x51d5348b1ull));
}

Rational rand_rational(std::mt19937_64& rng, int limit = 12) {
  std::uniform_int_distribution<int> num(-limit, limit);
  std::uniform_int_distribution<int> den(1, limit);
  return Rational(num(rng), den(rng));
}

Rational rand_positive_rational(std::mt19937_64& rng, int limit = 12) {
  std::uniform_int_distribution<int> num(1, limit);
  std::uniform_int_distribution<int> den(1, limit);
  return Rational(num(rng), den(rng));
}

// Strictly inside (-a, a), possibly zero.
Rational rand_inner(std::mt19937_64& rng, const Rational& a, int limit = 12) {
  std::uniform_int_distribution<int> den(2, limit);
  int q = den(rng);
  std::uniform_int_distribution<int> num(-(q - 1), q - 1);
  return a * Rational(num(rng), q);
}

Rational l1_norm_r(const RationalVector& x) {
  Rational n = 0;
  for (const auto& c : x) n += abs_r(c);
  return n;
}

Rational linf_norm_r(const RationalVector& x) {
  Rational n = 0;
  for (const auto& c : x) n = std::max(n, abs_r(c));
  return n;
}

std::vector<size_t> support_of(const RationalVector& x) {
  std::vector<size_t> supp;
  for (size_t k = 0; k < x.size(); ++k)
    if (x[k] != 0) supp.push_back(k);
  return supp;
}

std::vector<size_t> max_set_of(const RationalVector& x) {
  Rational m = linf_norm_r(x);
  std::vector<size_t> idx;
  for (size_t k = 0; k < x.size(); ++k)
    if (abs_r(x[k]) == m) idx.push_back(k);
  return idx;
}

bool all_zero(const RationalVector& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c == 0; });
}

Vector to_doubles(const RationalVector& x) {
  Vector v(x.size());
  for (size_t k = 0; k < x.size(); ++k) v[k] = to_double(x[k]);
  return v;
}

// Is some nonzero {-1,0,+1} signing of the support orthogonal to x? Split the
// support in half and meet in the middle: 3^(s/2) sums per side instead of 3^s.
bool has_zero_sum_signing(const RationalVector& x, const std::vector<size_t>& supp) {
  if (supp.size() > 20) throw std::invalid_argument("support too large for the subset search");
  size_t half = supp.size() / 2;
  size_t rest = supp.size() - half;

  std::map<Rational, bool> left_sums;  // sum -> reachable by a nonzero signing
  long count = 1;
  for (size_t i = 0; i < half; ++i) count *= 3;
  for (long code = 0; code < count; ++code) {
    Rational sum = 0;
    bool nonzero = false;
    long c = code;
    for (size_t i = 0; i < half; ++i, c /= 3) {
      int digit = c % 3;
      if (digit == 1) sum += x[supp[i]];
      if (digit == 2) sum -= x[supp[i]];
      nonzero |= digit != 0;
    }
    auto [it, inserted] = left_sums.try_emplace(sum, nonzero);
    if (!inserted) it->second |= nonzero;
  }

  count = 1;
  for (size_t i = 0; i < rest; ++i) count *= 3;
  for (long code = 0; code < count; ++code) {
    Rational sum = 0;
    bool nonzero = false;
    long c = code;
    for (size_t i = 0; i < rest; ++i, c /= 3) {
      int digit = c % 3;
      if (digit == 1) sum += x[supp[half + i]];
      if (digit == 2) sum -= x[supp[half + i]];
      nonzero |= digit != 0;
    }
    auto it = left_sums.find(-sum);
    if (it != left_sums.end() && (nonzero || it->second)) return true;
  }
  return false;
}

void require_same_dim(const RationalVector& x, const RationalVector& y, const char* who) {
  if (x.size() != y.size()) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

constexpr int kPatternDimCap = 12;

// All sign patterns sigma != 0 with sum_k sigma_k x_k = 0; the possible
// supports and signs of y with y perp_rho x in l1^n.
std::vector<std::vector<int>> l1_companion_patterns(const RationalVector& x) {
  int n = static_cast<int>(x.size());
  if (n > kPatternDimCap)
    throw std::invalid_argument("dimension too large for exact companion enumeration");
  long count = 1;
  for (int i = 0; i < n; ++i) count *= 3;
  std::vector<std::vector<int>> patterns;
  for (long code = 1; code < count; ++code) {
    Rational sum = 0;
    std::vector<int> sigma(n, 0);
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      int digit = c % 3;
      sigma[i] = digit == 1 ? 1 : digit == 2 ? -1 : 0;
      if (digit == 1) sum += x[i];
      if (digit == 2) sum -= x[i];
    }
    if (sum == 0) patterns.push_back(std::move(sigma));
  }
  return patterns;
}

// All sign patterns sigma != 0 such that y with max set supp(sigma), signs
// sigma there and smaller moduli elsewhere satisfies y perp_rho x in linf^n.
std::vector<std::vector<int>> linf_companion_patterns(const RationalVector& x) {
  int n = static_cast<int>(x.size());
  if (n > kPatternDimCap)
    throw std::invalid_argument("dimension too large for exact companion enumeration");
  long count = 1;
  for (int i = 0; i < n; ++i) count *= 3;
  std::vector<std::vector<int>> patterns;
  for (long code = 1; code < count; ++code) {
    std::vector<int> sigma(n, 0);
    bool first = true;
    Rational hi = 0, lo = 0;
    long c = code;
    for (int i = 0; i < n; ++i, c /= 3) {
      int digit = c % 3;
      sigma[i] = digit == 1 ? 1 : digit == 2 ? -1 : 0;
      if (digit == 0) continue;
      Rational v = sigma[i] * x[i];
      if (first) {
        hi = lo = v;
        first = false;
      } else {
        hi = std::max(hi, v);
        lo = std::min(lo, v);
      }
    }
    if (!first && hi + lo == 0) patterns.push_back(std::move(sigma));
  }
  return patterns;
}

enum class ExactFamily { None, L1, LInf };

ExactFamily exact_family(const Space& s) {
  if (s.family() != Space::Family::Lp) return ExactFamily::None;
  if (s.p() == 1.0) return ExactFamily::L1;
  if (std::isinf(s.p())) return ExactFamily::LInf;
  return ExactFamily::None;
}

// Snap float coordinates to exact rationals: near-zeros become zero and
// moduli within the tie tolerance of each other collapse to one shared value,
// so classifier decisions that hinge on exact ties survive float noise.
RationalVector rationalize(const Vector& x) {
  double scale = 0.0;
  for (double c : x) scale = std::max(scale, std::abs(c));
  std::vector<size_t> order(x.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return std::abs(x[a]) > std::abs(x[b]); });
  RationalVector r(x.size());
  Rational group = 0;
  double leader = std::numeric_limits<double>::infinity();
  for (size_t k : order) {
    double m = std::abs(x[k]);
    if (m <= tol::rational_tie * scale) {
      r[k] = 0;
      continue;
    }
    if (leader - m > tol::rational_tie * scale) {
      leader = m;
      group = rational_from_double(m);
    }
    r[k] = x[k] > 0 ? group : Rational(-group);
  }
  return r;
}

RationalVector checked_unit(RationalVector x, const Rational& nrm, const char* who) {
  if (nrm == 0) throw std::invalid_argument(std::string(who) + " needs x != 0");
  if (nrm == 1) return x;
  if (std::abs(to_double(nrm) - 1.0) <= 1e-9) {
    for (auto& c : x) c /= nrm;
    return x;
  }
  throw std::invalid_argument(std::string(who) + " expects x on the unit sphere");
}

OracleResult oracle_left_l1(const RationalVector& x, int trials, std::uint64_t seed) {
  auto supp = support_of(x);
  if (supp.empty()) throw std::invalid_argument("left-symmetry oracle needs x != 0");
  size_t n = x.size();

  OracleResult result;
  if (n == 1) return result;  // only y = 0 is a companion
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    size_t pivot = supp[t % supp.size()];
    bool sparse = t % 3 == 2;
    RationalVector y(n, Rational(0));
    for (size_t k = 0; k < n; ++k) {
      if (k == pivot) continue;
      if (sparse && rng() % 2 == 0) continue;
      y[k] = rand_rational(rng);
    }
    Rational carried = 0;
    for (size_t k : supp)
      if (k != pivot) carried += sign_of(x[k]) * y[k];
    y[pivot] = -sign_of(x[pivot]) * carried;
    if (all_zero(y)) continue;
    ++result.trials_run;
    if (!rho_ortho_l1(y, x)) {
      result.symmetric = false;
      result.counterexample = to_doubles(y);
      break;
    }
  }
  return result;
}

OracleResult oracle_left_linf(const RationalVector& x, int trials, std::uint64_t seed) {
  auto I = max_set_of(x);
  if (linf_norm_r(x) == 0) throw std::invalid_argument("left-symmetry oracle needs x != 0");
  size_t n = x.size();

  OracleResult result;
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i : I)
    for (size_t j : I)
      if (i != j) pairs.emplace_back(i, j);

  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    RationalVector y(n, Rational(0));
    bool flat = pairs.empty() || t % 7 == 6;
    if (flat) {
      // Companion with y = 0 across the max set; free elsewhere.
      for (size_t k = 0; k < n; ++k) {
        if (std::find(I.begin(), I.end(), k) != I.end()) continue;
        y[k] = rand_rational(rng);
      }
    } else {
      auto [kp, km] = pairs[t % pairs.size()];
      Rational a = rand_positive_rational(rng);
      for (size_t i : I) {
        Rational c = i == kp ? a : i == km ? Rational(-a) : rand_inner(rng, a);
        y[i] = sign_of(x[i]) * c;
      }
      for (size_t k = 0; k < n; ++k) {
        if (std::find(I.begin(), I.end(), k) != I.end()) continue;
        if (rng() % 2 == 0) y[k] = rand_rational(rng);
      }
    }
    if (all_zero(y)) continue;
    ++result.trials_run;
    if (!rho_ortho_linf(y, x)) {
      result.symmetric = false;
      result.counterexample = to_doubles(y);
      break;
    }
  }
  return result;
}

OracleResult oracle_right_patterns(const RationalVector& x, ExactFamily family, int trials,
                                   std::uint64_t seed) {
  size_t n = x.size();
  auto patterns =
      family == ExactFamily::L1 ? l1_companion_patterns(x) : linf_companion_patterns(x);
  OracleResult result;
  if (patterns.empty()) return result;  // no companion at all: vacuously symmetric

  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    const auto& sigma = patterns[t % patterns.size()];
    RationalVector y(n, Rational(0));
    if (family == ExactFamily::L1) {
      for (size_t k = 0; k < n; ++k)
        if (sigma[k] != 0) y[k] = sigma[k] * rand_positive_rational(rng);
    } else {
      Rational a = rand_positive_rational(rng);
      for (size_t k = 0; k < n; ++k) {
        if (sigma[k] != 0)
          y[k] = sigma[k] * a;
        else if (rng() % 2 == 0)
          y[k] = rand_inner(rng, a);
      }
    }
    ++result.trials_run;
    bool forward = family == ExactFamily::L1 ? rho_ortho_l1(x, y) : rho_ortho_linf(x, y);
    if (!forward) {
      result.symmetric = false;
      result.counterexample = to_doubles(y);
      break;
    }
  }
  return result;
}

OracleResult oracle_left_float(const Space& s, const Vector& x, int trials, std::uint64_t seed) {
  double nx = norm(s, x);
  if (nx == 0.0) throw std::invalid_argument("left-symmetry oracle needs x != 0");
  size_t n = x.size();

  OracleResult result;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector d(n);
    double len = 0.0;
    for (double& c : d) {
      c = gauss(rng);
      len += c * c;
    }
    len = std::sqrt(len);
    if (len == 0.0) continue;
    for (double& c : d) c /= len;

    double alpha = alpha_right(s, x, d);
    Vector y(n);
    for (size_t k = 0; k < n; ++k) y[k] = alpha * x[k] + d[k];
    double ny = norm(s, y);
    if (ny <= 1e-9 * (std::abs(alpha) * nx + norm(s, d))) continue;
    ++result.trials_run;
    if (std::abs(derivative(s, y, x).rho) > 1e-8 * ny * nx) {
      result.symmetric = false;
      result.counterexample = y;
      break;
    }
  }
  return result;
}

OracleResult oracle_right_smooth(const Space& s, const Vector& x, int trials,
                                 std::uint64_t seed) {
  double nx = norm(s, x);
  if (nx == 0.0) throw std::invalid_argument("right-symmetry oracle needs x != 0");
  size_t n = x.size();

  OracleResult result;
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, t);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector y0(n), d(n);
    for (double& c : y0) c = gauss(rng);
    for (double& c : d) c = gauss(rng);

    auto eval = [&](double sv) -> std::optional<double> {
      Vector z(n);
      for (size_t k = 0; k < n; ++k) z[k] = y0[k] + sv * d[k];
      if (norm(s, z) <= 1e-12 * (norm(s, y0) + std::abs(sv) * norm(s, d))) return std::nullopt;
      return derivative(s, z, x).rho;
    };

    // rho(y0 + s d, x) grows like s rho(d, x) at the ends, so widening the
    // interval eventually brackets a zero of this continuous function.
    double radius = 1.0;
    auto glo = eval(-radius), ghi = eval(radius);
    int grow = 0;
    while (glo && ghi && *glo * *ghi > 0.0 && grow < 60) {
      radius *= 2.0;
      glo = eval(-radius);
      ghi = eval(radius);
      ++grow;
    }
    if (!glo || !ghi || *glo * *ghi > 0.0) continue;
    double lo = -radius, hi = radius, g_at_lo = *glo;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      auto gm = eval(mid);
      if (!gm) break;
      if (g_at_lo * *gm <= 0.0)
        hi = mid;
      else {
        lo = mid;
        g_at_lo = *gm;
      }
    }
    double root = 0.5 * (lo + hi);
    Vector y(n);
    for (size_t k = 0; k < n; ++k) y[k] = y0[k] + root * d[k];
    double ny = norm(s, y);
    if (ny <= 1e-9 * (norm(s, y0) + std::abs(root) * norm(s, d))) continue;
    if (std::abs(derivative(s, y, x).rho) > 1e-10 * ny * nx) continue;  // no clean companion
    ++result.trials_run;
    if (std::abs(derivative(s, x, y).rho) > 1e-8 * nx * ny) {
      result.symmetric = false;
      result.counterexample = y;
      break;
    }
  }
  return result;
}

}  // namespace

Rational rational_from_string(const std::string& s) {
  auto parse_int = [](const std::string& t) -> cpp_int {
    if (t.empty()) throw std::invalid_argument("empty rational token");
    size_t start = t[0] == '+' || t[0] == '-' ? 1 : 0;
    if (start == t.size()) throw std::invalid_argument("bad rational token: " + t);
    cpp_int v = 0;
    for (size_t i = start; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i])))
        throw std::invalid_argument("bad rational token: " + t);
      v = v * 10 + (t[i] - '0');
    }
    return t[0] == '-' ? cpp_int(-v) : v;
  };

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    cpp_int num = parse_int(s.substr(0, slash));
    cpp_int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    cpp_int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(parse_int(digits), den);
  }
  return Rational(parse_int(s), 1);
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("rational_from_double needs a finite value");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));  // exact: |mant| 2^53 < 2^53
  Rational r(scaled, 1);
  int shift = exp - 53;
  if (shift >= 0)
    r *= Rational(cpp_int(1) << shift, 1);
  else
    r /= Rational(cpp_int(1) << -shift, 1);
  return r;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

RationalVector normalize_l1(const RationalVector& x) {
  Rational n = l1_norm_r(x);
  if (n == 0) throw std::invalid_argument("cannot normalize the zero vector");
  RationalVector y = x;
  for (auto& c : y) c /= n;
  return y;
}

RationalVector normalize_linf(const RationalVector& x) {
  Rational n = linf_norm_r(x);
  if (n == 0) throw std::invalid_argument("cannot normalize the zero vector");
  RationalVector y = x;
  for (auto& c : y) c /= n;
  return y;
}

bool rho_ortho_l1(const RationalVector& x, const RationalVector& y) {
  require_same_dim(x, y, "rho_ortho_l1");
  if (all_zero(x)) throw std::invalid_argument("rho_ortho_l1 needs x != 0");
  Rational sum = 0;
  for (size_t k = 0; k < x.size(); ++k) sum += sign_of(x[k]) * y[k];
  return sum == 0;
}

bool rho_ortho_linf(const RationalVector& x, const RationalVector& y) {
  require_same_dim(x, y, "rho_ortho_linf");
  if (all_zero(x)) throw std::invalid_argument("rho_ortho_linf needs x != 0");
  auto I = max_set_of(x);
  Rational hi = sign_of(x[I[0]]) * y[I[0]];
  Rational lo = hi;
  for (size_t idx = 1; idx < I.size(); ++idx) {
    Rational v = sign_of(x[I[idx]]) * y[I[idx]];
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  return hi + lo == 0;
}

SymmetryClass classify_l1(const RationalVector& x) {
  if (x.empty()) throw std::invalid_argument("classify_l1 needs a nonempty vector");
  auto unit = checked_unit(x, l1_norm_r(x), "classify_l1");
  auto supp = support_of(unit);

  SymmetryClass c;
  c.left = supp.size() == 1 ||
           (supp.size() == 2 && abs_r(unit[supp[0]]) == Rational(1, 2) &&
            abs_r(unit[supp[1]]) == Rational(1, 2));
  c.right = !has_zero_sum_signing(unit, supp);
  return c;
}

SymmetryClass classify_linf(const RationalVector& x) {
  if (x.empty()) throw std::invalid_argument("classify_linf needs a nonempty vector");
  auto unit = checked_unit(x, linf_norm_r(x), "classify_linf");
  auto I = max_set_of(unit);

  SymmetryClass c;
  c.left = true;
  std::vector<Rational> off;
  for (size_t k = 0; k < unit.size(); ++k) {
    if (std::find(I.begin(), I.end(), k) != I.end()) continue;
    c.left = c.left && unit[k] == 0;
    off.push_back(abs_r(unit[k]));
  }
  if (off.empty()) {
    c.right = true;  // extreme point
    return c;
  }
  std::sort(off.begin(), off.end());
  c.right = off.front() > 0 && off.back() < 1 &&
            std::adjacent_find(off.begin(), off.end()) == off.end();
  return c;
}

SymmetryClass classify_l1(const Vector& x) { return classify_l1(rationalize(x)); }

SymmetryClass classify_linf(const Vector& x) { return classify_linf(rationalize(x)); }

OracleResult oracle_left_symmetric(const Space& s, const RationalVector& x, int trials,
                                   std::uint64_t seed) {
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument("oracle_left_symmetric: dimension mismatch");
  switch (exact_family(s)) {
    case ExactFamily::L1:
      return oracle_left_l1(x, trials, seed);
    case ExactFamily::LInf:
      return oracle_left_linf(x, trials, seed);
    case ExactFamily::None:
      return oracle_left_float(s, to_doubles(x), trials, seed);
  }
  throw std::logic_error("unreachable");
}

OracleResult oracle_right_symmetric(const Space& s, const RationalVector& x, int trials,
                                    std::uint64_t seed) {
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument("oracle_right_symmetric: dimension mismatch");
  switch (exact_family(s)) {
    case ExactFamily::L1:
      if (all_zero(x)) throw std::invalid_argument("right-symmetry oracle needs x != 0");
      return oracle_right_patterns(x, ExactFamily::L1, trials, seed);
    case ExactFamily::LInf:
      if (all_zero(x)) throw std::invalid_argument("right-symmetry oracle needs x != 0");
      return oracle_right_patterns(x, ExactFamily::LInf, trials, seed);
    case ExactFamily::None:
      break;
  }
  if (s.is_smooth_family()) return oracle_right_smooth(s, to_doubles(x), trials, seed);
  throw UnsupportedFamily("right-symmetry oracle needs l1, linf, or a smooth family");
}

OracleResult oracle_left_symmetric(const Space& s, const Vector& x, int trials,
                                   std::uint64_t seed) {
  if (exact_family(s) != ExactFamily::None)
    return oracle_left_symmetric(s, rationalize(x), trials,
                                 seed);
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument("oracle_left_symmetric: dimension mismatch");
  return oracle_left_float(s, x, trials, seed);
}

OracleResult oracle_right_symmetric(const Space& s, const Vector& x, int trials,
                                    std::uint64_t seed) {
  if (exact_family(s) != ExactFamily::None)
    return oracle_right_symmetric(s, rationalize(x), trials,
                                  seed);
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument("oracle_right_symmetric: dimension mismatch");
  if (s.is_smooth_family()) return oracle_right_smooth(s, x, trials, seed);
  throw UnsupportedFamily("right-symmetry oracle needs l1, linf, or a smooth family");
}

SymmetryProbeReport probe_space_symmetry(const Space& s, int trials, std::uint64_t seed) {
  SymmetryProbeReport report;

  auto record_witness = [&](const Vector& wx, const Vector& wy) {
    if (!report.witness_x.empty()) return;
    report.witness_x = wx;
    report.witness_y = wy;
    report.forward_rho = derivative(s, wx, wy).rho;
    report.backward_rho = derivative(s, wy, wx).rho;
  };

  if (s.dim() == 2) {
    Vector px{-1.0 / 3.0, 1.0}, py{1.0, 0.0};
    if (is_rho_orthogonal(s, px, py) &&
        std::abs(derivative(s, py, px).rho) > 1e-8 * norm(s, py) * norm(s, px)) {
      report.symmetric = false;
      record_witness(px, py);
    }
  }

  int n = s.dim();
  for (int t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed ^ 0xab54a98ceb1f0ad2ull, t);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector x(n);
    double len = 0.0;
    for (double& c : x) {
      c = gauss(rng);
      len += c * c;
    }
    len = std::sqrt(len);
    if (len == 0.0) continue;
    for (double& c : x) c /= len;

    auto res = oracle_left_symmetric(s, x, 64, mix64(seed) + t);
    ++report.x_samples;
    if (res.symmetric) {
      ++report.symmetric_samples;
    } else {
      report.symmetric = false;
      record_witness(x, *res.counterexample);
    }
  }
  report.symmetric_fraction =
      report.x_samples == 0 ? 1.0
                            : static_cast<double>(report.symmetric_samples) / report.x_samples;
  return report;
}

}  // namespace normgeo
