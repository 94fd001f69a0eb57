// Command line surface: parse a space spec, run one computation, emit a
// machine-readable report. Exit codes: 0 success, 1 verification failure,
// 2 parse error, 3 unsupported family, 4 domain precondition failure.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "normgeo/derivatives.hpp"
#include "normgeo/gamma.hpp"
#include "normgeo/spaces.hpp"
#include "normgeo/symmetry.hpp"
#include "normgeo/verify.hpp"

using nlohmann::json;
using namespace normgeo;

namespace {

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

int parse_dim(const std::string& t) {
  try {
    size_t used = 0;
    int n = std::stoi(t, &used);
    if (used != t.size()) throw SpecError("bad dimension: " + t);
    return n;
  } catch (const std::logic_error&) {
    throw SpecError("bad dimension: " + t);
  }
}

double parse_p(const std::string& t) {
  if (t == "inf") return std::numeric_limits<double>::infinity();
  try {
    size_t used = 0;
    double p = std::stod(t, &used);
    if (used != t.size()) throw SpecError("bad exponent: " + t);
    return p;
  } catch (const std::logic_error&) {
    throw SpecError("bad exponent: " + t);
  }
}

MixPiece parse_piece(const std::string& t) {
  if (t == "l1") return MixPiece::l1();
  if (t == "linf") return MixPiece::linf();
  if (t.rfind("lp(", 0) == 0 && t.back() == ')')
    return MixPiece::lp(parse_p(t.substr(3, t.size() - 4)));
  throw SpecError("bad mix piece: " + t + " (want l1, linf, or lp(<p>))");
}

Space load_polygon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open polygon file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw SpecError("polygon file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw SpecError("polygon file needs an object with a \"vertices\" array");
  std::vector<std::array<double, 2>> verts;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
      throw SpecError("polygon vertices must be [x, y] number pairs");
    verts.push_back({row[0].get<double>(), row[1].get<double>()});
  }
  return Space::polygon(verts);
}

Space parse_space(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw SpecError("bad space spec: " + spec);
  std::string head = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (head == "l1") return Space::l1(parse_dim(rest));
  if (head == "linf") return Space::linf(parse_dim(rest));
  if (head == "lp") {
    auto parts = split(rest, ':');
    if (parts.size() != 2) throw SpecError("lp spec wants lp:<n>:<p>: " + spec);
    return Space::lp(parse_p(parts[1]), parse_dim(parts[0]));
  }
  if (head == "regular") return Space::regular_polygon(parse_dim(rest));
  if (head == "polygon") return load_polygon_file(rest);
  if (head == "mix") {
    // The separator is the '-' outside any lp(...) parens.
    int depth = 0;
    size_t cut = std::string::npos;
    for (size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == '(') ++depth;
      if (rest[i] == ')') --depth;
      if (rest[i] == '-' && depth == 0) {
        cut = i;
        break;
      }
    }
    if (cut == std::string::npos) throw SpecError("mix spec wants mix:<pos>-<neg>: " + spec);
    return Space::orthant_mixed(parse_piece(rest.substr(0, cut)),
                                parse_piece(rest.substr(cut + 1)));
  }
  throw SpecError("unknown space family: " + head);
}

Vector parse_vector(const std::string& text) {
  Vector v;
  for (const std::string& raw : split(text, ',')) {
    std::string t = trim(raw);
    try {
      v.push_back(to_double(rational_from_string(t)));
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("bad vector entry: ") + e.what());
    }
  }
  return v;
}

RationalVector parse_rational_vector(const std::string& text) {
  RationalVector v;
  for (const std::string& raw : split(text, ',')) {
    std::string t = trim(raw);
    try {
      v.push_back(rational_from_string(t));
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("bad vector entry: ") + e.what());
    }
  }
  return v;
}

const char* gamma_method_name(GammaMethod m) {
  switch (m) {
    case GammaMethod::ExactPolyhedral2D: return "ExactPolyhedral2D";
    case GammaMethod::ClosedForm2nGon: return "ClosedForm";
    default: return "GridEstimate";
  }
}

std::string csv_cell(const json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    quoted += c;
    if (c == '"') quoted += '"';
  }
  return quoted + "\"";
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, json>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j) scalars = scalars && !v.is_structured();
    if (scalars) {
      std::string joined;
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) joined += ";";
        joined += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
      }
      out.emplace_back(prefix, joined);
    } else {
      for (size_t i = 0; i < j.size(); ++i)
        flatten(j[i], prefix + "." + std::to_string(i), out);
    }
  } else {
    out.emplace_back(prefix, j);
  }
}

void emit(const json& report, const std::string& format) {
  if (format == "csv") {
    std::vector<std::pair<std::string, json>> cells;
    flatten(report, "", cells);
    std::string header, row;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) {
        header += ",";
        row += ",";
      }
      header += csv_cell(cells[i].first);
      row += csv_cell(cells[i].second);
    }
    std::cout << header << "\n" << row << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

json vector_json(const Vector& v) { return json(v); }

int cmd_gamma(const std::string& spec, int coarse, int refine, bool timings,
              const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  Space s = parse_space(spec);
  json results;
  if (s.family() == Space::Family::RegularPolygon) {
    double closed = gamma_closed_form_2ngon(s.regular_n());
    auto scan = gamma_polyhedral_2d(s);
    results["value"] = closed;
    results["method"] = "ClosedForm";
    results["bound"] = "exact";
    results["tolerance"] = 1e-9;
    results["witness_x"] = vector_json(scan.witness_x);
    results["witness_y"] = vector_json(scan.witness_y);
    results["cross_check"] = {{"method", "ExactPolyhedral2D"},
                              {"value", scan.value},
                              {"difference", std::abs(scan.value - closed)}};
  } else if (s.is_lp() && s.dim() >= 2 && (s.p() == 1.0 || std::isinf(s.p()))) {
    bool taxi = s.p() == 1.0;
    results["value"] = taxi ? kGammaL1n : kGammaLInfn;
    results["method"] = "ClosedForm";
    results["bound"] = "exact";
    results["tolerance"] = 1e-9;
    Vector wx(s.dim(), 0.0), wy(s.dim(), 0.0);
    if (taxi) {
      wx[0] = 1.0;
      wy[0] = wy[1] = 0.5;
    } else {
      wx.assign(s.dim(), 1.0);
      wy[s.dim() - 1] = 1.0;
    }
    results["witness_x"] = vector_json(wx);
    results["witness_y"] = vector_json(wy);
    results["cross_check"] = {{"method", "Exact"},
                              {"value", std::abs(derivative(s, wx, wy).rho)}};
  } else if (s.as_polygon().has_value()) {
    auto g = gamma_polyhedral_2d(s);
    results["value"] = g.value;
    results["method"] = gamma_method_name(g.method);
    results["bound"] = "exact";
    results["tolerance"] = 1e-9;
    results["witness_x"] = vector_json(g.witness_x);
    results["witness_y"] = vector_json(g.witness_y);
  } else if (s.is_smooth_family() && s.dim() > 2) {
    results["value"] = 0.0;
    results["method"] = "ClosedForm";
    results["bound"] = "exact";
    results["tolerance"] = 0.0;
    results["note"] = "smooth family: the two orthogonalities coincide";
  } else {
    auto g = gamma_estimate(s, coarse, refine);
    results["value"] = g.value;
    results["method"] = gamma_method_name(g.method);
    results["bound"] = "lower";
    results["tolerance"] = 0.0;
    results["grid"] = {{"coarse", coarse}, {"refine", refine}};
    results["witness_x"] = vector_json(g.witness_x);
    results["witness_y"] = vector_json(g.witness_y);
  }
  json report = {{"command", "gamma"},
                 {"space", spec},
                 {"space_detail", s.describe()},
                 {"results", results}};
  if (timings)
    report["wall_time"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return 0;
}

int cmd_derivative(const std::string& spec, const std::string& xs, const std::string& ys,
                   bool timings, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  Space s = parse_space(spec);
  Vector x = parse_vector(xs), y = parse_vector(ys);
  auto t = derivative(s, x, y);
  json results = {{"rho_plus", t.rho_plus},
                  {"rho_minus", t.rho_minus},
                  {"rho", t.rho},
                  {"method", t.method == DerivMethod::Exact ? "Exact" : "GridEstimate"},
                  {"bound", t.method == DerivMethod::Exact ? "exact" : "outer"},
                  {"tolerance", t.bracket_width},
                  {"birkhoff", is_birkhoff(s, x, y)},
                  {"rho_orthogonal", is_rho_orthogonal(s, x, y)}};
  json report = {{"command", "derivative"},
                 {"space", spec},
                 {"space_detail", s.describe()},
                 {"x", vector_json(x)},
                 {"y", vector_json(y)},
                 {"results", results}};
  if (timings)
    report["wall_time"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return 0;
}

int cmd_classify(const std::string& spec, const std::string& xs, bool normalize,
                 bool timings, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  Space s = parse_space(spec);
  bool taxi = s.is_lp() && s.p() == 1.0;
  bool sup = s.is_lp() && std::isinf(s.p());
  if (!taxi && !sup)
    throw UnsupportedFamily("classification covers the l1 and linf families only");
  RationalVector x = parse_rational_vector(xs);
  if (static_cast<int>(x.size()) != s.dim())
    throw std::invalid_argument("vector length does not match the space dimension");
  if (normalize) x = taxi ? normalize_l1(x) : normalize_linf(x);
  SymmetryClass c = taxi ? classify_l1(x) : classify_linf(x);
  const char* label = c.left ? (c.right ? "Both" : "LeftOnly")
                             : (c.right ? "RightOnly" : "Neither");
  json xcoords = json::array();
  for (const auto& r : x) xcoords.push_back(r.str());
  json results = {{"left_symmetric", c.left},
                  {"right_symmetric", c.right},
                  {"label", label},
                  {"method", "Exact"},
                  {"tolerance", 0.0}};
  json report = {{"command", "classify"},
                 {"space", spec},
                 {"space_detail", s.describe()},
                 {"x", xcoords},
                 {"normalized", normalize},
                 {"results", results}};
  if (timings)
    report["wall_time"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(report, format);
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials, bool timings, const std::string& format) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  auto results = run_acceptance(opts);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    json row = {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
    if (timings) row["seconds"] = r.seconds;
    rows.push_back(row);
  }
  if (format == "csv") {
    std::cout << "id,name,passed,detail" << (timings ? ",seconds\n" : "\n");
    for (const auto& row : rows) {
      std::cout << row["id"].get<int>() << "," << csv_cell(row["name"]) << ","
                << (row["passed"].get<bool>() ? "true" : "false") << ","
                << csv_cell(row["detail"]);
      if (timings) std::cout << "," << row["seconds"].dump();
      std::cout << "\n";
    }
  } else {
    json report = {{"command", "verify"},
                   {"seed", seed},
                   {"trials", trials},
                   {"criteria", rows},
                   {"all_passed", all}};
    if (timings)
      report["wall_time"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(report, "json");
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"norm geometry toolkit"};
  app.require_subcommand(1);

  std::string spec, xs, ys, format = "json";
  int coarse = 720, refine = 60, trials = 500;
  std::uint64_t seed = 42;
  bool normalize = false, timings = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timings", timings, "include wall time fields");
  };

  auto* gamma = app.add_subcommand("gamma", "orthogonality gap of a space");
  gamma->add_option("--space", spec, "space spec")->required();
  gamma->add_option("--coarse", coarse, "coarse grid size");
  gamma->add_option("--refine", refine, "refinement steps");
  add_format(gamma);

  auto* deriv = app.add_subcommand("derivative", "one-sided norm derivatives");
  deriv->add_option("--space", spec, "space spec")->required();
  deriv->add_option("--x", xs, "base point")->required();
  deriv->add_option("--y", ys, "direction")->required();
  add_format(deriv);

  auto* classify = app.add_subcommand("classify", "orthogonality symmetry class");
  classify->add_option("--space", spec, "space spec")->required();
  classify->add_option("--x", xs, "unit vector, rational entries")->required();
  classify->add_flag("--normalize", normalize, "rescale the input to the unit sphere");
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trials", trials, "sampling budget");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gamma->parsed()) return cmd_gamma(spec, coarse, refine, timings, format);
    if (deriv->parsed()) return cmd_derivative(spec, xs, ys, timings, format);
    if (classify->parsed()) return cmd_classify(spec, xs, normalize, timings, format);
    return cmd_verify(seed, trials, timings, format);
  } catch (const SpecError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFamily& e) {
    std::cerr << "unsupported family: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
