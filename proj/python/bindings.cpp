#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uqd/errors.hpp"
#include "uqd/povm.hpp"
#include "uqd/sampler.hpp"
#include "uqd/spectral.hpp"
#include "uqd/strategy.hpp"
#include "uqd/sweep.hpp"
#include "uqd/symmetric_core.hpp"
#include "uqd/verify.hpp"

namespace py = pybind11;
using namespace uqd;

namespace {

py::dict block_dict(const Block& b) {
  py::dict d;
  d["label"] = to_string(b.label);
  d["l"] = b.l;
  d["size"] = b.size();
  d["eigenvalues"] = b.eigenvalues;
  d["matrix"] = b.matrix;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Unambiguous discrimination of registers built from unknown qubits";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_MemoryError);

  py::enum_<Hypothesis>(m, "Hypothesis")
      .value("First", Hypothesis::First)
      .value("Second", Hypothesis::Second);
  py::enum_<SymmetricBlock>(m, "SymmetricBlock")
      .value("EvenTail", SymmetricBlock::EvenTail)
      .value("OddTail", SymmetricBlock::OddTail);
  py::enum_<Regime>(m, "Regime")
      .value("VonNeumann2", Regime::VonNeumann2)
      .value("Povm", Regime::Povm)
      .value("VonNeumann1", Regime::VonNeumann1);

  py::class_<BlochQubit>(m, "BlochQubit")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_property_readonly("theta", &BlochQubit::theta)
      .def_property_readonly("phi", &BlochQubit::phi)
      .def("amplitudes", &BlochQubit::amplitudes)
      .def("__eq__", [](const BlochQubit& a, const BlochQubit& b) { return a == b; })
      .def("__repr__", [](const BlochQubit& q) {
        return "BlochQubit(theta=" + std::to_string(q.theta()) + ", phi=" + std::to_string(q.phi()) + ")";
      });

  py::class_<PovmParams>(m, "PovmParams")
      .def(py::init<double, double>(), py::arg("c1"), py::arg("c2"))
      .def_property_readonly("c1", &PovmParams::c1)
      .def_property_readonly("c2", &PovmParams::c2);

  py::class_<PovmTriple>(m, "PovmTriple")
      .def_readonly("n", &PovmTriple::n)
      .def_readonly("params", &PovmTriple::params)
      .def_property_readonly("pi1", [](const PovmTriple& t) { return t.pi1.entries(); })
      .def_property_readonly("pi2", [](const PovmTriple& t) { return t.pi2.entries(); })
      .def_property_readonly("pi0", [](const PovmTriple& t) { return t.pi0.entries(); });

  py::class_<StrategyDecision>(m, "StrategyDecision")
      .def_readonly("n", &StrategyDecision::n)
      .def_readonly("eta1", &StrategyDecision::eta1)
      .def_readonly("regime", &StrategyDecision::regime)
      .def_readonly("c1", &StrategyDecision::c1)
      .def_readonly("c2", &StrategyDecision::c2)
      .def_readonly("avg_success", &StrategyDecision::avg_success)
      .def_property_readonly("regime_tag", [](const StrategyDecision& d) { return to_string(d.regime); });

  py::class_<McReport>(m, "McReport")
      .def_readonly("samples", &McReport::samples)
      .def_readonly("mean_success", &McReport::mean_success)
      .def_readonly("std_error", &McReport::std_error)
      .def_readonly("analytic", &McReport::analytic)
      .def_readonly("error_events", &McReport::error_events);

  py::class_<OutcomeCounts>(m, "OutcomeCounts")
      .def_readonly("identify1", &OutcomeCounts::identify1)
      .def_readonly("identify2", &OutcomeCounts::identify2)
      .def_readonly("fail", &OutcomeCounts::fail)
      .def_readonly("shots", &OutcomeCounts::shots)
      .def_readonly("error_events", &OutcomeCounts::error_events);

  // symmetric core
  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("dicke_amplitudes", &dicke_amplitudes, py::arg("qubit"), py::arg("n"));
  m.def(
      "build_input_state",
      [](const BlochQubit& a, const BlochQubit& b, int n, Hypothesis which) {
        return build_input_state(a, b, n, which).amplitudes();
      },
      py::arg("psi1"), py::arg("psi2"), py::arg("n"), py::arg("which"));
  m.def(
      "build_symmetric_projector",
      [](int n, SymmetricBlock block) { return build_symmetric_projector(n, block).entries(); },
      py::arg("n"), py::arg("block"));

  // POVM
  m.def("build_povm", &build_povm, py::arg("n"), py::arg("params"));
  m.def(
      "success_probability",
      [](const BlochQubit& a, const BlochQubit& b, const PovmTriple& triple, Hypothesis which) {
        return success_probability(build_input_state(a, b, triple.n, which), triple, which);
      },
      py::arg("psi1"), py::arg("psi2"), py::arg("triple"), py::arg("which"));
  m.def("closed_form_expectation", &closed_form_expectation, py::arg("psi1"), py::arg("psi2"),
        py::arg("n"), py::arg("which"));
  m.def("no_error_check", &no_error_check, py::arg("triple"), py::arg("psi1"), py::arg("psi2"));
  m.def("total_success", &total_success, py::arg("p1"), py::arg("p2"), py::arg("eta1"));

  // spectra
  m.def(
      "closed_form_extreme_eigenvalues",
      [](int n, const PovmParams& p) {
        const ExtremeEigenvalues e = closed_form_extreme_eigenvalues(n, p);
        return py::make_tuple(e.minus, e.plus);
      },
      py::arg("n"), py::arg("params"));
  m.def(
      "positivity_check",
      [](const PovmTriple& t) {
        const PositivityCheck c = positivity_check(t);
        py::dict d;
        d["numeric_min"] = c.numeric_min;
        d["closed_form_min"] = c.closed_form_min;
        d["feasible"] = c.feasible;
        return d;
      },
      py::arg("triple"));
  m.def("constraint_c2", &constraint_c2, py::arg("c1"), py::arg("n"));
  m.def(
      "spectrum_report",
      [](const PovmTriple& t) {
        const SpectrumReport r = spectrum_report(t);
        py::list blocks;
        for (const Block& b : r.blocks) blocks.append(block_dict(b));
        py::dict d;
        d["n"] = r.n;
        d["c1"] = r.params.c1();
        d["c2"] = r.params.c2();
        d["blocks"] = blocks;
        d["min_eigenvalue"] = r.min_eigenvalue;
        d["closed_form_min"] = r.closed_form_min;
        d["feasible"] = r.feasible;
        d["max_pairing_defect"] = r.max_pairing_defect;
        return d;
      },
      py::arg("triple"));

  // strategy
  m.def(
      "validity_range",
      [](int n) {
        const PriorInterval r = validity_range(n);
        return py::make_tuple(r.lo, r.hi);
      },
      py::arg("n"));
  m.def("optimal_c", &optimal_c, py::arg("n"), py::arg("eta1"));
  m.def("avg_success_povm", &avg_success_povm, py::arg("n"), py::arg("eta1"));
  m.def("avg_success_projective", &avg_success_projective, py::arg("n"), py::arg("eta1"),
        py::arg("which"));
  m.def("avg_success_expression", &avg_success_expression, py::arg("n"), py::arg("eta1"),
        py::arg("c1"));
  m.def(
      "decide", [](int n, double eta1) { return decide({n, eta1}); }, py::arg("n"), py::arg("eta1"));
  m.def("numeric_optimal_c1", &numeric_optimal_c1, py::arg("n"), py::arg("eta1"),
        py::arg("tolerance") = 1e-12);

  // Monte Carlo
  m.def("mc_average_success", &mc_average_success, py::arg("n"), py::arg("params"),
        py::arg("eta1"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "mc_projector_mean",
      [](int n, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
        ProjectorMeanReport r;
        {
          py::gil_scoped_release release;
          r = mc_projector_mean(n, samples, seed, workers);
        }
        py::dict d;
        d["samples"] = r.samples;
        d["mean"] = r.mean;
        d["std_error"] = r.std_error;
        d["analytic"] = r.analytic;
        return d;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 0);
  m.def(
      "simulate_outcomes",
      [](const BlochQubit& a, const BlochQubit& b, int n, double eta1, std::uint64_t shots,
         std::uint64_t seed) { return simulate_outcomes(a, b, {n, eta1}, shots, seed); },
      py::arg("psi1"), py::arg("psi2"), py::arg("n"), py::arg("eta1"), py::arg("shots"),
      py::arg("seed"));

  // sweeps and verification
  m.def(
      "sweep",
      [](int n, int points) {
        py::list rows;
        for (const SweepRow& r : sweep(n, points)) {
          py::dict d;
          d["eta1"] = r.eta1;
          d["p_vn1"] = r.p_vn1;
          d["p_vn2"] = r.p_vn2;
          d["p_povm"] = r.p_povm ? py::object(py::float_(*r.p_povm)) : py::object(py::none());
          d["p_opt"] = r.p_opt;
          d["regime"] = to_string(r.regime);
          rows.append(d);
        }
        return rows;
      },
      py::arg("n"), py::arg("points"));
  m.def(
      "run_verification",
      [](int n_max) {
        py::list out;
        for (const CheckResult& r : run_verification(n_max)) {
          out.append(py::make_tuple(r.name, r.passed, r.deviation, r.tolerance));
        }
        return out;
      },
      py::arg("n_max"));
}
