#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wysiwyg/cli.hpp"
#include "wysiwyg/experiments.hpp"
#include "wysiwyg/oracle.hpp"

namespace py = pybind11;
using namespace wysiwyg;

namespace {

Mode mode_of(const std::string& s) { return parse_mode(s); }

py::object threshold_value(const Threshold& t) { return t.n ? py::object(py::int_(*t.n)) : py::object(py::none()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thompson's group F, tree pairs and vacuum coefficients of its cabled representations";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);

  py::class_<RationalFunction>(m, "RationalFunction")
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& r) { return "RationalFunction('" + r.to_string() + "')"; })
      .def("__call__", [](const RationalFunction& r, double delta) { return r.eval(delta); }, py::arg("delta"))
      .def("__eq__", [](const RationalFunction& a, const RationalFunction& b) { return a == b; })
      .def("__mul__", [](const RationalFunction& a, const RationalFunction& b) { return a * b; });

  py::class_<FElement>(m, "Element")
      .def(py::init([](const std::string& s) { return parse_element(s); }), py::arg("text"))
      .def_property_readonly("top", [](const FElement& g) { return serialize_tree(g.top()); })
      .def_property_readonly("bottom", [](const FElement& g) { return serialize_tree(g.bottom()); })
      .def_property_readonly("leaves", &FElement::leaf_count)
      .def("is_identity", &FElement::is_identity)
      .def("inverse", [](const FElement& g) { return inverse(g); })
      .def("__mul__", [](const FElement& g, const FElement& h) { return multiply(g, h); })
      .def("__eq__", [](const FElement& g, const FElement& h) { return g == h; })
      .def("__str__", &serialize_element)
      .def("__repr__", [](const FElement& g) { return "Element('" + serialize_element(g) + "')"; });

  m.def("multiply_rewrite", [](const FElement& g, const FElement& h) { return multiply_rewrite(g, h); });
  m.def("sigma", [](const FElement& g) { return sigma(g); });
  m.def("power_A", &power_A, py::arg("n"));

  m.def(
      "coeff", [](const FElement& g, const std::string& mode) { return coeff(mode_of(mode), g); }, py::arg("g"),
      py::arg("mode") = "psi", "Exact <g vac, vac> as a rational function of delta.");
  m.def(
      "coeff_numeric",
      [](const FElement& g, const std::string& mode, double delta) { return coeff_numeric(mode_of(mode), g, delta); },
      py::arg("g"), py::arg("mode") = "psi", py::arg("delta") = 2.0);
  m.def(
      "brute_force_coefficient",
      [](const FElement& g, const std::string& mode) { return brute_force_coefficient(g, mode_of(mode)); },
      py::arg("g"), py::arg("mode") = "psi");
  m.def(
      "gram_numeric",
      [](const std::vector<FElement>& els, const std::string& mode, double delta) {
        return gram_numeric(mode_of(mode), els, delta);
      },
      py::arg("elements"), py::arg("mode") = "psi", py::arg("delta") = 2.0);
  m.def("min_eigenvalue", &min_eigenvalue);
  m.def(
      "an_decay",
      [](int n_max, double delta) {
        std::vector<double> out;
        for (const auto& r : decay_check(n_max, delta)) out.push_back(r.value);
        return out;
      },
      py::arg("n_max") = 15, py::arg("delta") = 2.0, "Omega-mode coeff(A^n) for n = 1..n_max.");
  m.def(
      "lemma43_threshold",
      [](const FElement& g, const FElement& h, int n_max) { return threshold_value(lemma43_threshold(g, h, n_max)); },
      py::arg("g"), py::arg("h"), py::arg("n_max") = 15);
  m.def(
      "sigma_limit_threshold",
      [](const FElement& g, int n_max) {
        const LimitVector xi = vacuum(Mode::Psi, full_tree(2));
        return threshold_value(sigma_limit_check(g, xi, xi, n_max));
      },
      py::arg("g"), py::arg("n_max") = 10);
  m.def("delta_root", &delta_root, py::arg("n"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr).");
}
