#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "normgeo/cones2d.hpp"
#include "normgeo/derivatives.hpp"
#include "normgeo/gamma.hpp"
#include "normgeo/spaces.hpp"
#include "normgeo/symmetry.hpp"
#include "normgeo/verify.hpp"

namespace py = pybind11;
using namespace normgeo;

namespace {

RationalVector parse_rationals(const std::vector<std::string>& parts) {
  RationalVector out;
  out.reserve(parts.size());
  for (const auto& p : parts) out.push_back(rational_from_string(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "norm geometry kernels: one-sided derivatives, orthogonality cones, "
            "the gamma constant, and symmetry classification";

  py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", PyExc_ValueError);

  py::class_<MixPiece>(m, "MixPiece")
      .def_static("l1", &MixPiece::l1)
      .def_static("linf", &MixPiece::linf)
      .def_static("lp", &MixPiece::lp, py::arg("p"))
      .def_property_readonly("polyhedral", &MixPiece::polyhedral);

  py::class_<Space>(m, "Space")
      .def_static("lp", &Space::lp, py::arg("p"), py::arg("dim"))
      .def_static("l1", &Space::l1, py::arg("dim"))
      .def_static("linf", &Space::linf, py::arg("dim"))
      .def_static("polygon", &Space::polygon, py::arg("vertices"))
      .def_static("regular_polygon", &Space::regular_polygon, py::arg("n"))
      .def_static("orthant_mixed", &Space::orthant_mixed, py::arg("positive"),
                  py::arg("negative"))
      .def_property_readonly("dim", &Space::dim)
      .def_property_readonly("smooth_family", &Space::is_smooth_family)
      .def_property_readonly("polygonal", &Space::is_polygonal)
      .def("vertices",
           [](const Space& s) { return s.vertices(); })
      .def("edge_functionals",
           [](const Space& s) { return s.edge_functionals(); })
      .def("as_polygon", &Space::as_polygon)
      .def("describe", &Space::describe)
      .def("__repr__",
           [](const Space& s) { return "<Space: " + s.describe() + ">"; });

  m.def("norm", &norm, py::arg("space"), py::arg("x"));
  m.def("sphere_point_2d", &sphere_point_2d, py::arg("space"), py::arg("theta"));
  m.def(
      "supporting_functionals",
      [](const Space& s, const Vector& x) {
        std::vector<Vector> out;
        for (const auto& f : ext_supporting_functionals(s, x)) out.push_back(f.coords);
        return out;
      },
      py::arg("space"), py::arg("x"),
      "Extreme points of the supporting face at x, as coordinate lists.");

  py::enum_<DerivMethod>(m, "DerivMethod")
      .value("Exact", DerivMethod::Exact)
      .value("Numeric", DerivMethod::Numeric);

  py::class_<DerivativeTriple>(m, "DerivativeTriple")
      .def_readonly("rho_plus", &DerivativeTriple::rho_plus)
      .def_readonly("rho_minus", &DerivativeTriple::rho_minus)
      .def_readonly("rho", &DerivativeTriple::rho)
      .def_readonly("method", &DerivativeTriple::method)
      .def_readonly("bracket_width", &DerivativeTriple::bracket_width)
      .def("__repr__", [](const DerivativeTriple& t) {
        return "<DerivativeTriple rho=" + std::to_string(t.rho) +
               " plus=" + std::to_string(t.rho_plus) +
               " minus=" + std::to_string(t.rho_minus) + ">";
      });

  m.def("derivative", &derivative, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("derivative_numeric", &derivative_numeric, py::arg("space"), py::arg("x"),
        py::arg("y"));
  m.def("is_birkhoff", &is_birkhoff, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def("is_rho_orthogonal", &is_rho_orthogonal, py::arg("space"), py::arg("x"),
        py::arg("y"));
  m.def("alpha_right", &alpha_right, py::arg("space"), py::arg("x"), py::arg("y"));
  m.def(
      "alpha_left",
      [](const Space& s, const Vector& x, const Vector& y, double range, int steps) {
        return alpha_left(s, x, y, AlphaLeftSearch{range, steps});
      },
      py::arg("space"), py::arg("x"), py::arg("y"), py::arg("range") = 1e3,
      py::arg("steps") = 10000);
  m.def("is_smooth_point", &is_smooth_point, py::arg("space"), py::arg("x"));

  py::enum_<RhoCone>(m, "RhoCone")
      .value("Neither", RhoCone::Neither)
      .value("PlusOnly", RhoCone::PlusOnly)
      .value("MinusOnly", RhoCone::MinusOnly)
      .value("Both", RhoCone::Both);
  m.def("rho_cone_membership", &rho_cone_membership, py::arg("space"), py::arg("x"),
        py::arg("y"));

  py::class_<OrthoCone>(m, "OrthoCone")
      .def_readonly("w1", &OrthoCone::w1)
      .def_readonly("w2", &OrthoCone::w2)
      .def_readonly("base", &OrthoCone::base);
  m.def("ortho_cone", &ortho_cone, py::arg("space"), py::arg("x"));
  m.def("regular_polygon_cone", &regular_polygon_cone, py::arg("n"), py::arg("m"));

  py::class_<MonotoneReport>(m, "MonotoneReport")
      .def_readonly("monotone", &MonotoneReport::monotone)
      .def_readonly("samples", &MonotoneReport::samples)
      .def_readonly("worst_violation", &MonotoneReport::worst_violation)
      .def_readonly("witness", &MonotoneReport::witness);
  m.def("verify_monotone", &verify_monotone, py::arg("space"), py::arg("x"),
        py::arg("samples") = 360);

  py::enum_<GammaMethod>(m, "GammaMethod")
      .value("ExactPolyhedral2D", GammaMethod::ExactPolyhedral2D)
      .value("ClosedForm2nGon", GammaMethod::ClosedForm2nGon)
      .value("GridEstimate", GammaMethod::GridEstimate);

  py::class_<GammaResult>(m, "GammaResult")
      .def_readonly("value", &GammaResult::value)
      .def_readonly("witness_x", &GammaResult::witness_x)
      .def_readonly("witness_y", &GammaResult::witness_y)
      .def_readonly("method", &GammaResult::method)
      .def_readonly("lower_bound_only", &GammaResult::lower_bound_only)
      .def("__repr__", [](const GammaResult& r) {
        return "<GammaResult value=" + std::to_string(r.value) + ">";
      });

  m.def("gamma_polyhedral_2d", &gamma_polyhedral_2d, py::arg("space"));
  m.def("gamma_closed_form_2ngon", &gamma_closed_form_2ngon, py::arg("n"));
  m.def("gamma_estimate", &gamma_estimate, py::arg("space"), py::arg("coarse") = 720,
        py::arg("refine") = 60);
  m.def("e_constant", &e_constant, py::arg("space"));
  m.def("james_constant_estimate", &james_constant_estimate, py::arg("space"),
        py::arg("coarse") = 360, py::arg("refine") = 60);
  m.def("modulus_of_convexity_estimate", &modulus_of_convexity_estimate,
        py::arg("space"), py::arg("eps"), py::arg("coarse") = 360,
        py::arg("refine") = 60);

  py::class_<UnsReport>(m, "UnsReport")
      .def_readonly("gamma", &UnsReport::gamma)
      .def_readonly("james", &UnsReport::james)
      .def_readonly("consistent", &UnsReport::consistent);
  m.def("check_uns_relation", &check_uns_relation, py::arg("space"),
        py::arg("coarse") = 360);

  py::class_<SymmetryClass>(m, "SymmetryClass")
      .def_readonly("left", &SymmetryClass::left)
      .def_readonly("right", &SymmetryClass::right)
      .def("__repr__", [](const SymmetryClass& c) {
        return std::string("<SymmetryClass left=") + (c.left ? "True" : "False") +
               " right=" + (c.right ? "True" : "False") + ">";
      });

  m.def("classify_l1", py::overload_cast<const Vector&>(&classify_l1), py::arg("x"));
  m.def("classify_linf", py::overload_cast<const Vector&>(&classify_linf),
        py::arg("x"));
  m.def(
      "classify_l1_exact",
      [](const std::vector<std::string>& x) { return classify_l1(parse_rationals(x)); },
      py::arg("x"), "Exact-arithmetic variant; coordinates as 'p/q' or decimal strings.");
  m.def(
      "classify_linf_exact",
      [](const std::vector<std::string>& x) { return classify_linf(parse_rationals(x)); },
      py::arg("x"));
  m.def(
      "normalize_l1_exact",
      [](const std::vector<std::string>& x) {
        std::vector<std::string> out;
        for (const auto& r : normalize_l1(parse_rationals(x)))
          out.push_back(r.str());
        return out;
      },
      py::arg("x"));
  m.def(
      "normalize_linf_exact",
      [](const std::vector<std::string>& x) {
        std::vector<std::string> out;
        for (const auto& r : normalize_linf(parse_rationals(x)))
          out.push_back(r.str());
        return out;
      },
      py::arg("x"));

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("symmetric", &OracleResult::symmetric)
      .def_readonly("trials_run", &OracleResult::trials_run)
      .def_readonly("counterexample", &OracleResult::counterexample);

  m.def("oracle_left_symmetric",
        py::overload_cast<const Space&, const Vector&, int, std::uint64_t>(
            &oracle_left_symmetric),
        py::arg("space"), py::arg("x"), py::arg("trials") = 500, py::arg("seed") = 42);
  m.def("oracle_right_symmetric",
        py::overload_cast<const Space&, const Vector&, int, std::uint64_t>(
            &oracle_right_symmetric),
        py::arg("space"), py::arg("x"), py::arg("trials") = 500, py::arg("seed") = 42);

  py::class_<SymmetryProbeReport>(m, "SymmetryProbeReport")
      .def_readonly("symmetric", &SymmetryProbeReport::symmetric)
      .def_readonly("x_samples", &SymmetryProbeReport::x_samples)
      .def_readonly("symmetric_samples", &SymmetryProbeReport::symmetric_samples)
      .def_readonly("symmetric_fraction", &SymmetryProbeReport::symmetric_fraction)
      .def_readonly("witness_x", &SymmetryProbeReport::witness_x)
      .def_readonly("witness_y", &SymmetryProbeReport::witness_y)
      .def_readonly("forward_rho", &SymmetryProbeReport::forward_rho)
      .def_readonly("backward_rho", &SymmetryProbeReport::backward_rho);
  m.def("probe_space_symmetry", &probe_space_symmetry, py::arg("space"),
        py::arg("trials") = 360, py::arg("seed") = 42);

  py::class_<CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("passed", &CriterionResult::passed)
      .def_readonly("detail", &CriterionResult::detail)
      .def_readonly("seconds", &CriterionResult::seconds);
  m.def(
      "run_acceptance",
      [](std::uint64_t seed, int trials) {
        return run_acceptance(VerifyOptions{seed, trials});
      },
      py::arg("seed") = 42, py::arg("trials") = 500);

  m.attr("GAMMA_L1N") = kGammaL1n;
  m.attr("GAMMA_LINFN") = kGammaLInfn;
}
