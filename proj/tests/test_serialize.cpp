// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <doctest.h>

#include "stc/classifier.hpp"
#include "stc/serialize.hpp"
#include "test_helpers.hpp"

using namespace stc;

TEST_CASE("circuit JSON round trip") {
  Circuit circ = build_toy_circuit(0.7, kPi / 2);
  Circuit back = circuit_from_json(circuit_to_json(circ));
  REQUIRE(back.ops().size() == circ.ops().size());
  CHECK(back.num_qubits() == circ.num_qubits());
  CHECK(back.reg("in").start == circ.reg("in").start);
  for (std::size_t i = 0; i < circ.ops().size(); ++i) {
    CHECK(back.ops()[i].name() == circ.ops()[i].name());
    CHECK(back.ops()[i].targets == circ.ops()[i].targets);
  }
  testref::Mat a = testref::circuit_matrix(circ);
  testref::Mat b = testref::circuit_matrix(back);
  CHECK(testref::max_abs_diff(a, b) < 1e-15);
}

TEST_CASE("circuit JSON preserves control polarity and state payloads") {
  Circuit circ(3);
  GateOp sw = gate::swap(1, 2);
  sw.controls = {{0, false}};
  circ.append(sw);
  circ.append(gate::state_prep({1}, {cplx(0, 1), cplx(0, 0)}));
  Circuit back = circuit_from_json(circuit_to_json(circ));
  CHECK(back.ops()[0].controls[0].on_one == false);
  CHECK(back.ops()[1].state[0] == cplx(0, 1));
}

TEST_CASE("classifier input JSON parses complex pairs") {
  const std::string doc = R"({
    "points": [
      {"x": [[0.0, 0.70710678118654752], [0.70710678118654752, 0.0]], "y": 0, "w": 0.5},
      {"x": [[0.0, 0.70710678118654752], [-0.70710678118654752, 0.0]], "y": 1, "w": 0.5}
    ],
    "test": {"x": [[1.0, 0.0], [0.0, 0.0]]}
  })";
  ClassifierInput input = classifier_input_from_json(doc);
  CHECK(input.dataset.size() == 2);
  CHECK(input.dataset.labels[1] == 1);
  // matches the toy dataset at theta = 0
  const double direct = kernel_oracle(toy_dataset(0.5), toy_test(0.0), 1);
  CHECK(kernel_oracle(input.dataset, input.test, 1) ==
        doctest::Approx(direct).epsilon(1e-12));
  // round trip
  ClassifierInput again = classifier_input_from_json(
      classifier_input_to_json(input.dataset, input.test));
  CHECK(again.dataset.weights == input.dataset.weights);
}

TEST_CASE("device fixture carries the calibration table") {
  DeviceParams device = load_device(std::string(STC_DATA_DIR) +
                                    "/ibmq_ourense_2019-09-29.json");
  REQUIRE(device.qubits.size() == 5);
  CHECK(device.qubits[0].t1_us == doctest::Approx(94.9785));
  CHECK(device.qubits[2].t2_us == doctest::Approx(134.4074));
  CHECK(device.qubits[4].freq_ghz == doctest::Approx(5.0237));
  CHECK(device.qubits[3].readout_error == doctest::Approx(0.028));
  REQUIRE(device.pairs.size() == 4);
  CHECK(device.pair(1, 3).gate_error_cx == doctest::Approx(0.011624));
  CHECK(device.pair(3, 1).gate_time_cx_ns == doctest::Approx(576));
  CHECK_THROWS_AS(device.pair(0, 4), Error);
  // round trip
  DeviceParams back = device_from_json(device_to_json(device));
  CHECK(back.qubits[1].t2_us == doctest::Approx(36.7808));
}

TEST_CASE("coupling fixture matches the builtin map") {
  CouplingMap fixture = coupling_from_json(
      read_file(std::string(STC_DATA_DIR) + "/ourense_coupling.json"));
  CouplingMap builtin = ourense_coupling();
  CHECK(fixture.edges == builtin.edges);
  CHECK(fixture.layout == builtin.layout);
}

TEST_CASE("sweep CSV shape and values") {
  SweepConfig config;
  config.backend = SweepBackend::Sampled;
  config.seed = 3;
  SweepResult result = sweep(config);
  const std::string csv = sweep_to_csv(result);
  // header + one line per row, LF endings
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n')
      ++lines;
  CHECK(lines == 64);
  CHECK(csv.rfind("theta,expectation,c00,c01,c10,c11,shots\n", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.find(',') != std::string::npos);

  SweepResult parsed = sweep_from_csv(csv);
  REQUIRE(parsed.rows.size() == result.rows.size());
  for (std::size_t i = 0; i < parsed.rows.size(); ++i) {
    CHECK(parsed.rows[i].theta ==
          doctest::Approx(result.rows[i].theta).epsilon(1e-15));
    CHECK(parsed.rows[i].c00 == result.rows[i].c00);
    // expectation column equals the counts formula
    const auto &row = parsed.rows[i];
    const double recomputed =
        (static_cast<double>(row.c00) - static_cast<double>(row.c01) -
         static_cast<double>(row.c10) + static_cast<double>(row.c11)) /
        static_cast<double>(row.shots);
    CHECK(std::abs(row.expectation - recomputed) < 1e-12);
  }
}

TEST_CASE("seeded sweeps emit byte-identical CSV") {
  SweepConfig config;
  config.backend = SweepBackend::Sampled;
  config.seed = 1234;
  const std::string a = sweep_to_csv(sweep(config));
  const std::string b = sweep_to_csv(sweep(config));
  CHECK(a == b);
}

TEST_CASE("sweep JSON round trip") {
  SweepConfig config;
  config.backend = SweepBackend::Sampled;
  config.theta_end = 1.0;
  SweepResult result = sweep(config);
  SweepResult back = sweep_from_json(sweep_to_json(result));
  CHECK(back.timestamp == result.timestamp);
  CHECK(back.config.shots == result.config.shots);
  CHECK(back.config.backend == SweepBackend::Sampled);
  REQUIRE(back.rows.size() == result.rows.size());
  for (std::size_t i = 0; i < back.rows.size(); ++i) {
    CHECK(back.rows[i].theta == result.rows[i].theta);
    CHECK(back.rows[i].expectation == result.rows[i].expectation);
    CHECK(back.rows[i].c01 == result.rows[i].c01);
  }
}

TEST_CASE("format_double round trips exactly") {
  for (double v : {0.1, 1.0 / 3.0, 2.0 * kPi, -0.000318, 6.2}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("file errors carry the path") {
  try {
    read_file("/nonexistent/file.json");
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("/nonexistent/file.json") !=
          std::string::npos);
  }
}
