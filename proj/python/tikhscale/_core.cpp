#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tikhscale/auxiliary.hpp"
#include "tikhscale/discrepancy.hpp"
#include "tikhscale/experiment.hpp"
#include "tikhscale/model.hpp"
#include "tikhscale/solver.hpp"

namespace py = pybind11;
using namespace tikhscale;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tikhonov regularization with oversmoothing penalties in Hilbert scales";

  py::class_<DiagonalHilbertScale>(m, "DiagonalHilbertScale")
      .def(py::init<Vec, double, double>(), py::arg("diag"), py::arg("lower_bound_k"),
           py::arg("smoothing_order_a"))
      .def("size", &DiagonalHilbertScale::size)
      .def("diag", &DiagonalHilbertScale::diag)
      .def("r", &DiagonalHilbertScale::r)
      .def("g_norm", &DiagonalHilbertScale::g_norm)
      .def("smoothing_order_a", &DiagonalHilbertScale::smoothing_order_a);

  m.def("natural_number_scale", &natural_number_scale, py::arg("n"),
        py::arg("smoothing_order_a") = 1.0);

  py::class_<IndexFunctionPhi>(m, "IndexFunctionPhi")
      .def(py::init([](double c, double kappa) {
             return IndexFunctionPhi{c, kappa};
           }),
           py::arg("c"), py::arg("kappa"))
      .def_readonly("c", &IndexFunctionPhi::c)
      .def_readonly("kappa", &IndexFunctionPhi::kappa)
      .def("__call__", &IndexFunctionPhi::operator());

  py::class_<TestProblem>(m, "TestProblem")
      .def_readonly("scale", &TestProblem::scale)
      .def_readonly("linear_coeff", &TestProblem::linear_coeff)
      .def_readonly("domain_radius", &TestProblem::domain_radius)
      .def_readonly("u_true", &TestProblem::u_true)
      .def_readonly("u_bar", &TestProblem::u_bar)
      .def_readonly("f_true", &TestProblem::f_true)
      .def("size", &TestProblem::size);

  py::class_<SourceSpec>(m, "SourceSpec")
      .def_readonly("c", &SourceSpec::c)
      .def_readonly("kappa", &SourceSpec::kappa)
      .def_readonly("w", &SourceSpec::w)
      .def_readonly("rho", &SourceSpec::rho);

  py::class_<RegularizedSolution>(m, "RegularizedSolution")
      .def_readonly("u", &RegularizedSolution::u)
      .def_readonly("alpha", &RegularizedSolution::alpha)
      .def_readonly("residual", &RegularizedSolution::residual)
      .def_readonly("penalty", &RegularizedSolution::penalty)
      .def_readonly("objective", &RegularizedSolution::objective);

  py::class_<DiscrepancyConfig>(m, "DiscrepancyConfig")
      .def(py::init([](double k, double theta, double alpha0, int max_steps) {
             return DiscrepancyConfig{k, theta, alpha0, max_steps};
           }),
           py::arg("k") = 3.0, py::arg("theta") = 10.0, py::arg("alpha0") = 0.9,
           py::arg("max_steps") = 60)
      .def_readwrite("k", &DiscrepancyConfig::k)
      .def_readwrite("theta", &DiscrepancyConfig::theta)
      .def_readwrite("alpha0", &DiscrepancyConfig::alpha0)
      .def_readwrite("max_steps", &DiscrepancyConfig::max_steps);

  py::class_<TracePoint>(m, "TracePoint")
      .def_readonly("alpha", &TracePoint::alpha)
      .def_readonly("residual", &TracePoint::residual);

  py::class_<SelectionResult>(m, "SelectionResult")
      .def_readonly("alpha_star", &SelectionResult::alpha_star)
      .def_readonly("solution", &SelectionResult::solution)
      .def_readonly("trace", &SelectionResult::trace);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("delta", &SweepRow::delta)
      .def_readonly("alpha_star", &SweepRow::alpha_star)
      .def_readonly("error", &SweepRow::error)
      .def_readonly("phi_delta", &SweepRow::phi_delta)
      .def_readonly("ratio", &SweepRow::ratio)
      .def_readonly("penalty_norm", &SweepRow::penalty_norm)
      .def_readonly("seed", &SweepRow::seed)
      .def_readonly("failed", &SweepRow::failed)
      .def_readonly("message", &SweepRow::message);

  m.def("make_paper_problem", &make_paper_problem, py::arg("n"));
  m.def("forward", &forward, py::arg("problem"), py::arg("u"));
  m.def("in_domain", &in_domain, py::arg("problem"), py::arg("u"));
  m.def("norm_tau", &norm_tau, py::arg("scale"), py::arg("x"), py::arg("tau"));
  m.def("apply_G", &apply_G, py::arg("scale"), py::arg("x"));
  m.def("apply_phi_G", &apply_phi_G, py::arg("scale"), py::arg("phi"), py::arg("x"));
  m.def(
      "check_interpolation",
      [](const DiagonalHilbertScale& scale, const Vec& x, double p, double q, double s,
         double tol) {
        const InterpolationCheck chk = check_interpolation(scale, x, p, q, s, tol);
        return py::make_tuple(chk.holds, chk.ratio);
      },
      py::arg("scale"), py::arg("x"), py::arg("p"), py::arg("q"), py::arg("s"),
      py::arg("tol") = 1e-12);
  m.def("minimize_tikhonov", &minimize_tikhonov, py::arg("problem"), py::arg("f_delta"),
        py::arg("alpha"));
  m.def("residual_norm", &residual_norm, py::arg("problem"), py::arg("u"), py::arg("f_delta"));
  m.def("select_alpha", &select_alpha, py::arg("problem"), py::arg("f_delta"), py::arg("delta"),
        py::arg("config"));
  m.def(
      "perturb",
      [](const Vec& f_true, double delta, std::uint64_t seed) {
        return perturb(f_true, {delta, seed});
      },
      py::arg("f_true"), py::arg("delta"), py::arg("seed"));
  m.def("run_sweep", &run_sweep, py::arg("problem"), py::arg("phi"), py::arg("deltas"),
        py::arg("config"), py::arg("seed"));
  m.def("phi_of_delta", &phi_of_delta, py::arg("phi"), py::arg("delta"));
  m.def("a_priori_beta", &a_priori_beta, py::arg("phi"), py::arg("delta"), py::arg("r"));
  m.def(
      "auxiliary_element",
      [](const DiagonalHilbertScale& scale, const Vec& u_true, const Vec& u_bar, double alpha) {
        return auxiliary_element(scale, u_true, u_bar, alpha).u_hat;
      },
      py::arg("scale"), py::arg("u_true"), py::arg("u_bar"), py::arg("alpha"));
  m.def("chi", &chi, py::arg("c"), py::arg("b"), py::arg("d"), py::arg("t"), py::arg("g_norm"));
  m.def("chi_inverse", &chi_inverse, py::arg("c"), py::arg("b"), py::arg("d"), py::arg("t"),
        py::arg("g_norm"));
  m.def("paper_delta_grid", []() { return paper_delta_grid(); });
}
