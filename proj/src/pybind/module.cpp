// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stc/classifier.hpp"
#include "stc/fit.hpp"
#include "stc/resources.hpp"
#include "stc/serialize.hpp"
#include "stc/sweep.hpp"
#include "stc/transpile.hpp"

namespace py = pybind11;
using namespace stc;

namespace {

std::vector<cplx> state_amplitudes(const StateVector &psi) {
  return psi.amplitudes();
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Swap-test quantum classifier: state-vector simulation, fidelity "
            "kernels, device noise model, native-gate transpiler and "
            "resource estimates.";

  py::register_exception<Error>(m, "SimulatorError");

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<std::vector<std::vector<cplx>>, std::vector<int>,
                    std::vector<double>>(),
           py::arg("points"), py::arg("labels"), py::arg("weights"))
      .def_static("uniform", &Dataset::uniform, py::arg("points"),
                  py::arg("labels"))
      .def_readonly("points", &Dataset::points)
      .def_readonly("labels", &Dataset::labels)
      .def_readonly("weights", &Dataset::weights)
      .def("__len__", &Dataset::size);

  py::class_<TestPoint>(m, "TestPoint")
      .def(py::init<std::vector<cplx>>(), py::arg("x"))
      .def_readonly("x", &TestPoint::x);

  py::class_<ClassifierOutcome>(m, "Outcome")
      .def_readonly("expectation", &ClassifierOutcome::expectation)
      .def_readonly("label", &ClassifierOutcome::label)
      .def_readonly("p0", &ClassifierOutcome::p0)
      .def_readonly("p1", &ClassifierOutcome::p1)
      .def("conditional",
           [](const ClassifierOutcome &o, int a, int b) {
             if (a < 0 || a > 1 || b < 0 || b > 1)
               throw Error("conditional indices are bits");
             return o.conditional[a][b];
           },
           py::arg("a"), py::arg("b"),
           "P(label = b | ancilla = a)");

  py::class_<FitResult>(m, "FitResult")
      .def_readonly("amplitude", &FitResult::amplitude)
      .def_readonly("phase_shift", &FitResult::phase_shift)
      .def_readonly("w2", &FitResult::w2)
      .def_readonly("residual_norm", &FitResult::residual_norm);

  m.def("encode_amplitude",
        [](const std::vector<cplx> &raw) {
          return state_amplitudes(encode_amplitude(raw));
        },
        py::arg("raw"),
        "Normalized, zero-padded amplitudes over ceil(log2 N) qubits.");

  m.def("kernel_oracle",
        [](const Dataset &ds, const TestPoint &t, int copies,
           const std::string &variant) {
          if (variant == "fidelity")
            return kernel_oracle(ds, t, copies, KernelVariant::Fidelity);
          if (variant == "real-overlap")
            return kernel_oracle(ds, t, copies, KernelVariant::RealOverlap);
          throw Error("variant must be 'fidelity' or 'real-overlap'");
        },
        py::arg("dataset"), py::arg("test"), py::arg("copies") = 1,
        py::arg("variant") = "fidelity",
        "Classical weighted kernel sum (the brute-force oracle).");

  m.def("run_hadamard", &run_hadamard, py::arg("dataset"), py::arg("test"));
  m.def("run_swaptest",
        [](const Dataset &ds, const TestPoint &t, int copies) {
          return run_swaptest(ds, t, copies);
        },
        py::arg("dataset"), py::arg("test"), py::arg("copies") = 1);
  m.def("forking_expectation",
        [](const Dataset &ds, const TestPoint &t, int copies) {
          return forking_expectation(ds, t, copies);
        },
        py::arg("dataset"), py::arg("test"), py::arg("copies") = 1,
        "Expectation from the simulated product-state construction.");
  m.def("helstrom_expectation", &helstrom_expectation, py::arg("dataset"),
        py::arg("test"), py::arg("copies") = 1);
  m.def("assign_label", &assign_label, py::arg("expectation"),
        py::arg("tie_epsilon") = 0.0);

  m.def("toy_dataset", &toy_dataset, py::arg("w2") = 0.5);
  m.def("toy_test", &toy_test, py::arg("theta"));
  m.def("toy_expectation", &toy_expectation, py::arg("theta"),
        py::arg("copies") = 1, py::arg("w2") = 0.5,
        "Closed-form example-problem expectation.");

  m.def("estimate_resources",
        [](std::int64_t copies, std::int64_t m, std::int64_t n) {
          const ResourceEstimate est = estimate(copies, m, n);
          return py::make_tuple(est.qubits, est.toffoli, est.cnot);
        },
        py::arg("copies"), py::arg("points"), py::arg("features"),
        "(qubits, toffoli, cnot) for the product-state construction.");

  m.def("transpile_toy_counts",
        [](double theta, double w2) {
          const double alpha = 2.0 * std::asin(std::sqrt(w2));
          TranspileResult result =
              transpile(build_toy_circuit(theta, alpha), ourense_coupling());
          return count_gates(result.circuit);
        },
        py::arg("theta") = 0.7, py::arg("w2") = 0.5,
        "Gate tally of the example circuit lowered to the device layout.");

  m.def("fit_curve",
        [](const std::vector<double> &thetas,
           const std::vector<double> &values) {
          return fit_curve(thetas, values);
        },
        py::arg("thetas"), py::arg("values"));

  m.def("noisy_toy_expectation",
        [](double theta, const std::string &device_json_path) {
          DeviceParams device = load_device(device_json_path);
          NoiseModel model = build_noise_model(device);
          TranspileResult lowered = transpile(
              build_toy_circuit(theta, kPi / 2), ourense_coupling());
          DensityMatrix rho = simulate_noisy(lowered.circuit, model);
          const auto measured = lowered.circuit.measured_qubits();
          auto probs = rho.probabilities(measured);
          std::vector<double> eps;
          for (int q : measured)
            eps.push_back(model.readout_error(q));
          probs = apply_readout_error(probs, eps);
          return probs[0] - probs[1] - probs[2] + probs[3];
        },
        py::arg("theta"), py::arg("device_json_path"),
        "Readout-corrected noisy expectation of the example circuit.");
}
