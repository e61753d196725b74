// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <string>

#include "stc/circuit.hpp"
#include "stc/classifier.hpp"
#include "stc/noise.hpp"
#include "stc/sweep.hpp"
#include "stc/transpile.hpp"

namespace stc {

// Circuit <-> JSON: {"num_qubits": k, "registers": {"a": [start, size]},
//   "ops": [{"gate": "...", "params": [...], "targets": [...],
//            "controls": [{"qubit": q, "on_one": true}], ...}]}
std::string circuit_to_json(const Circuit &circuit);
Circuit circuit_from_json(const std::string &text);

// Dataset + test point: {"points": [{"x": [[re, im], ...], "y": 0|1,
//   "w": 0.5}, ...], "test": {"x": [[re, im], ...]}}
struct ClassifierInput {
  Dataset dataset;
  TestPoint test;
};
ClassifierInput classifier_input_from_json(const std::string &text);
std::string classifier_input_to_json(const Dataset &dataset,
                                     const TestPoint &test);

// Device calibration, field names matching the calibration table:
// {"qubits": [{"t1_us":..., "t2_us":..., "freq_ghz":..., "readout_error":...,
//   "gate_error":..., "gate_time_u2_ns":..., "temperature_k":...}, ...],
//  "pairs": [{"qubits": [0,1], "gate_error_cx":..., "gate_time_cx_ns":...}]}
DeviceParams device_from_json(const std::string &text);
std::string device_to_json(const DeviceParams &device);
DeviceParams load_device(const std::string &path);

// Coupling map: {"edges": [[0,1], ...], "layout": {"a": 0, ...}}
CouplingMap coupling_from_json(const std::string &text);
std::string coupling_to_json(const CouplingMap &coupling);

// Sweep results. CSV columns exactly:
//   theta,expectation,c00,c01,c10,c11,shots
// header row, '.' decimal separator, LF endings. JSON mirrors SweepResult.
std::string sweep_to_csv(const SweepResult &result);
std::string sweep_to_json(const SweepResult &result);
SweepResult sweep_from_json(const std::string &text);
/// Parses the CSV columns back into rows (config/timestamp are not stored in
/// CSV and stay default).
SweepResult sweep_from_csv(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

} // namespace stc
