#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stagnys/dense_solver.hpp"
#include "stagnys/experiments.hpp"
#include "stagnys/specfun.hpp"
#include "stagnys/spectral_toolkit.hpp"

namespace py = pybind11;
using namespace stagnys;

namespace {

ExperimentKind kind_from_string(const std::string& s) {
    if (s == "convergence") return ExperimentKind::Convergence;
    if (s == "richardson") return ExperimentKind::Richardson;
    if (s == "sweep-eps") return ExperimentKind::SweepEps;
    if (s == "cond") return ExperimentKind::Cond;
    throw py::value_error("unknown experiment kind: " + s);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "staggered two-grid Nystrom solver for the 2D Helmholtz "
              "hypersingular equation";

    // special functions
    m.def("hankel1_0", &hankel1_0, py::arg("x"));
    m.def("hankel1_1", &hankel1_1, py::arg("x"));
    m.def("bessel_j0", &bessel_j0, py::arg("x"));
    m.def("bessel_y0", &bessel_y0, py::arg("x"));
    m.def("bessel_j1", &bessel_j1, py::arg("x"));
    m.def("bessel_y1", &bessel_y1, py::arg("x"));

    // geometry
    py::class_<ParametricCurve>(m, "ParametricCurve")
        .def("position", [](const ParametricCurve& c, double t) { return c.position(t); })
        .def("derivative",
             [](const ParametricCurve& c, double t) { return c.derivative(t); })
        .def("scaled_normal",
             [](const ParametricCurve& c, double t) { return c.scaled_normal(t); });
    m.def("ellipse",
          [](std::pair<double, double> center, double a, double b) {
              return ellipse(Vec2(center.first, center.second), a, b);
          },
          py::arg("center"), py::arg("a"), py::arg("b"));
    m.def("reduce_eps", &reduce_eps, py::arg("eps"));

    py::class_<ScattererConfig>(m, "ScattererConfig")
        .def(py::init<std::vector<ParametricCurve>, double, std::vector<int>, double>(),
             py::arg("curves"), py::arg("k"), py::arg("n_per_curve"), py::arg("eps"))
        .def_readonly("k", &ScattererConfig::k)
        .def_readonly("eps", &ScattererConfig::eps)
        .def("validate", &ScattererConfig::validate);

    // assembly and dense solves
    m.def("assemble_w", &assemble_w, py::arg("config"));
    m.def("assemble_calderon_v", &assemble_calderon_v, py::arg("config"));
    m.def("assemble_system",
          [](const ScattererConfig& config, const std::string& formulation,
             std::pair<double, double> z0) {
              const Formulation f = formulation == "direct" ? Formulation::Direct
                                                            : Formulation::Indirect;
              BlockSystem sys = assemble_system(config, f, Vec2(z0.first, z0.second));
              return py::make_tuple(sys.matrix, sys.rhs);
          },
          py::arg("config"), py::arg("formulation"), py::arg("source"));
    m.def("lu_solve", &lu_solve, py::arg("a"), py::arg("b"));
    m.def("cond2",
          [](const Eigen::MatrixXcd& a) {
              Cond2Result r = cond2(a);
              return py::make_tuple(r.value, r.converged, r.iterations);
          },
          py::arg("a"));
    m.def("spectral_norm",
          [](const Eigen::MatrixXcd& a) { return spectral_norm(a); }, py::arg("a"));

    // densities and potentials
    py::class_<DensitySolution>(m, "DensitySolution")
        .def_property_readonly("k", [](const DensitySolution& s) { return s.k; })
        .def("values",
             [](const DensitySolution& s, int part) {
                 return s.parts.at(size_t(part)).values;
             },
             py::arg("part"))
        .def("num_parts", [](const DensitySolution& s) { return s.parts.size(); });
    m.def("evaluate_potential",
          [](const DensitySolution& sol, std::pair<double, double> z) {
              FieldSample s = evaluate_potential(sol, Vec2(z.first, z.second));
              return py::make_tuple(s.value, s.near_boundary);
          },
          py::arg("solution"), py::arg("z"));
    m.def("point_source",
          [](std::pair<double, double> z, std::pair<double, double> z0, double k) {
              return point_source(Vec2(z.first, z.second), Vec2(z0.first, z0.second), k);
          },
          py::arg("z"), py::arg("z0"), py::arg("k"));

    // experiments
    py::class_<RunConfig>(m, "RunConfig")
        .def_readwrite("k", &RunConfig::k)
        .def_readwrite("eps", &RunConfig::eps)
        .def_readwrite("n_list", &RunConfig::n_list)
        .def_readwrite("out", &RunConfig::out);
    m.def("default_config",
          [](const std::string& kind) { return default_config(kind_from_string(kind)); },
          py::arg("experiment"));
    m.def("parse_config", &parse_config, py::arg("json_text"));
    m.def("config_to_json", &config_to_json, py::arg("config"));
    m.def("solve_once", &solve_once, py::arg("config"), py::arg("n"));
    m.def("run_convergence",
          [](const RunConfig& config) {
              ConvergenceTable t = run_convergence(config);
              if (!t.failure.empty()) throw std::runtime_error(t.failure);
              py::list rows;
              for (const auto& r : t.rows)
                  rows.append(py::make_tuple(
                      r.n, r.error, r.ecr ? py::cast(*r.ecr) : py::none()));
              return rows;
          },
          py::arg("config"));
    m.def("run_richardson",
          [](const RunConfig& config) {
              ConvergenceTable t = run_richardson(config);
              if (!t.failure.empty()) throw std::runtime_error(t.failure);
              py::list rows;
              for (const auto& r : t.rows)
                  rows.append(py::make_tuple(
                      r.n, r.error, r.ecr ? py::cast(*r.ecr) : py::none()));
              return rows;
          },
          py::arg("config"));
    m.def("run_sweep_eps",
          [](const RunConfig& config) {
              py::list rows;
              for (const auto& sp : run_sweep_eps(config))
                  if (sp.ok) rows.append(py::make_tuple(sp.eps, sp.error));
              return rows;
          },
          py::arg("config"));
    m.def("run_cond",
          [](const RunConfig& config) {
              py::list rows;
              for (const auto& r : run_cond(config))
                  rows.append(py::make_tuple(r.n, r.cond_vw, r.cond_w));
              return rows;
          },
          py::arg("config"));
    m.def("ecr", [](const std::vector<double>& errors) {
        py::list out;
        for (const auto& r : ecr(errors)) out.append(r ? py::cast(*r) : py::none());
        return out;
    });

    // spectral toolkit
    m.def("c_ell", &c_ell, py::arg("ell"), py::arg("t"));
    m.def("periodized_bernoulli", &periodized_bernoulli, py::arg("ell"), py::arg("t"));
}
