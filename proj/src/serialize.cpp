// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include "stc/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stc {

using nlohmann::json;

std::string format_double(double value) {
  char buf[40];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, value);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == value)
      return buf;
  }
  return buf;
}

namespace {

const std::map<std::string, GateKind> kKindByName = {
    {"id", GateKind::Id},       {"h", GateKind::H},
    {"x", GateKind::X},         {"y", GateKind::Y},
    {"z", GateKind::Z},         {"s", GateKind::S},
    {"sdg", GateKind::Sdg},     {"t", GateKind::T},
    {"tdg", GateKind::Tdg},     {"rx", GateKind::Rx},
    {"ry", GateKind::Ry},       {"rz", GateKind::Rz},
    {"u1", GateKind::U1},       {"u2", GateKind::U2},
    {"u3", GateKind::U3},       {"swap", GateKind::Swap},
    {"state_prep", GateKind::StatePrep},
    {"measure", GateKind::Measure},
    {"reset", GateKind::Reset}, {"barrier", GateKind::Barrier},
};

std::string base_name(GateKind kind) {
  for (const auto &[name, k] : kKindByName)
    if (k == kind)
      return name;
  throw Error("unnamed gate kind");
}

json complex_to_json(const cplx &v) {
  return json::array({v.real(), v.imag()});
}

cplx complex_from_json(const json &j) {
  if (!j.is_array() || j.size() != 2)
    throw Error("complex numbers are encoded as [re, im]");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

} // namespace

std::string circuit_to_json(const Circuit &circuit) {
  json j;
  j["num_qubits"] = circuit.num_qubits();
  json regs = json::object();
  for (const auto &[name, range] : circuit.registers())
    regs[name] = json::array({range.start, range.size});
  j["registers"] = regs;
  json ops = json::array();
  for (const auto &op : circuit.ops()) {
    json o;
    o["gate"] = base_name(op.kind);
    if (!op.params.empty())
      o["params"] = op.params;
    o["targets"] = op.targets;
    if (!op.controls.empty()) {
      json cs = json::array();
      for (const auto &c : op.controls)
        cs.push_back({{"qubit", c.qubit}, {"on_one", c.on_one}});
      o["controls"] = cs;
    }
    if (!op.state.empty()) {
      json amps = json::array();
      for (const auto &v : op.state)
        amps.push_back(complex_to_json(v));
      o["state"] = amps;
    }
    if (!op.clbits.empty())
      o["clbits"] = op.clbits;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j.dump(2);
}

Circuit circuit_from_json(const std::string &text) {
  json j = json::parse(text);
  Circuit circuit(j.at("num_qubits").get<int>());
  if (j.contains("registers"))
    for (const auto &[name, range] : j["registers"].items())
      circuit.add_register(name, range[0].get<int>(), range[1].get<int>());
  for (const auto &o : j.at("ops")) {
    GateOp op;
    const std::string name = o.at("gate").get<std::string>();
    auto it = kKindByName.find(name);
    if (it == kKindByName.end())
      throw Error("unknown gate '" + name + "' in circuit document");
    op.kind = it->second;
    if (o.contains("params"))
      op.params = o["params"].get<std::vector<double>>();
    op.targets = o.at("targets").get<std::vector<int>>();
    if (o.contains("controls"))
      for (const auto &c : o["controls"])
        op.controls.push_back(
            Control{c.at("qubit").get<int>(), c.at("on_one").get<bool>()});
    if (o.contains("state"))
      for (const auto &v : o["state"])
        op.state.push_back(complex_from_json(v));
    if (o.contains("clbits"))
      op.clbits = o["clbits"].get<std::vector<int>>();
    circuit.append(std::move(op));
  }
  return circuit;
}

ClassifierInput classifier_input_from_json(const std::string &text) {
  json j = json::parse(text);
  std::vector<std::vector<cplx>> points;
  std::vector<int> labels;
  std::vector<double> weights;
  for (const auto &p : j.at("points")) {
    std::vector<cplx> x;
    for (const auto &v : p.at("x"))
      x.push_back(complex_from_json(v));
    points.push_back(std::move(x));
    labels.push_back(p.at("y").get<int>());
    weights.push_back(p.contains("w")
                          ? p["w"].get<double>()
                          : 1.0 / static_cast<double>(j["points"].size()));
  }
  std::vector<cplx> tx;
  for (const auto &v : j.at("test").at("x"))
    tx.push_back(complex_from_json(v));
  return ClassifierInput{Dataset(std::move(points), std::move(labels),
                                 std::move(weights)),
                         TestPoint(std::move(tx))};
}

std::string classifier_input_to_json(const Dataset &dataset,
                                     const TestPoint &test) {
  json j;
  json points = json::array();
  for (int m = 0; m < dataset.size(); ++m) {
    json x = json::array();
    for (const auto &v : dataset.points[m])
      x.push_back(complex_to_json(v));
    points.push_back({{"x", std::move(x)},
                      {"y", dataset.labels[m]},
                      {"w", dataset.weights[m]}});
  }
  j["points"] = std::move(points);
  json tx = json::array();
  for (const auto &v : test.x)
    tx.push_back(complex_to_json(v));
  j["test"] = {{"x", std::move(tx)}};
  return j.dump(2);
}

DeviceParams device_from_json(const std::string &text) {
  json j = json::parse(text);
  DeviceParams device;
  for (const auto &q : j.at("qubits")) {
    QubitParams params;
    params.t1_us = q.at("t1_us").get<double>();
    params.t2_us = q.at("t2_us").get<double>();
    params.freq_ghz = q.at("freq_ghz").get<double>();
    params.readout_error = q.at("readout_error").get<double>();
    params.gate_error = q.at("gate_error").get<double>();
    params.gate_time_u2_ns = q.at("gate_time_u2_ns").get<double>();
    params.temperature_k = q.at("temperature_k").get<double>();
    device.qubits.push_back(params);
  }
  if (j.contains("pairs"))
    for (const auto &p : j["pairs"]) {
      PairParams pair;
      pair.qubit_a = p.at("qubits")[0].get<int>();
      pair.qubit_b = p.at("qubits")[1].get<int>();
      pair.gate_error_cx = p.at("gate_error_cx").get<double>();
      pair.gate_time_cx_ns = p.at("gate_time_cx_ns").get<double>();
      device.pairs.push_back(pair);
    }
  device.validate();
  return device;
}

std::string device_to_json(const DeviceParams &device) {
  json j;
  json qubits = json::array();
  for (const auto &q : device.qubits)
    qubits.push_back({{"t1_us", q.t1_us},
                      {"t2_us", q.t2_us},
                      {"freq_ghz", q.freq_ghz},
                      {"readout_error", q.readout_error},
                      {"gate_error", q.gate_error},
                      {"gate_time_u2_ns", q.gate_time_u2_ns},
                      {"temperature_k", q.temperature_k}});
  j["qubits"] = std::move(qubits);
  json pairs = json::array();
  for (const auto &p : device.pairs)
    pairs.push_back({{"qubits", json::array({p.qubit_a, p.qubit_b})},
                     {"gate_error_cx", p.gate_error_cx},
                     {"gate_time_cx_ns", p.gate_time_cx_ns}});
  j["pairs"] = std::move(pairs);
  return j.dump(2);
}

DeviceParams load_device(const std::string &path) {
  return device_from_json(read_file(path));
}

CouplingMap coupling_from_json(const std::string &text) {
  json j = json::parse(text);
  CouplingMap map;
  for (const auto &e : j.at("edges"))
    map.edges.insert({e[0].get<int>(), e[1].get<int>()});
  if (j.contains("layout"))
    for (const auto &[name, idx] : j["layout"].items())
      map.layout[name] = idx.get<int>();
  return map;
}

std::string coupling_to_json(const CouplingMap &coupling) {
  json j;
  json edges = json::array();
  for (const auto &[a, b] : coupling.edges)
    edges.push_back(json::array({a, b}));
  j["edges"] = std::move(edges);
  json layout = json::object();
  for (const auto &[name, idx] : coupling.layout)
    layout[name] = idx;
  j["layout"] = std::move(layout);
  return j.dump(2);
}

std::string sweep_to_csv(const SweepResult &result) {
  std::string out = "theta,expectation,c00,c01,c10,c11,shots\n";
  for (const auto &row : result.rows) {
    out += format_double(row.theta);
    out += ',';
    out += format_double(row.expectation);
    out += ',';
    out += std::to_string(row.c00) + ',' + std::to_string(row.c01) + ',' +
           std::to_string(row.c10) + ',' + std::to_string(row.c11) + ',' +
           std::to_string(row.shots) + '\n';
  }
  return out;
}

namespace {

json config_to_json(const SweepConfig &config) {
  const char *kind = config.classifier == ClassifierKind::Hadamard
                         ? "hadamard"
                         : (config.classifier == ClassifierKind::SwapTest
                                ? "swaptest"
                                : "forking");
  const char *backend =
      config.backend == SweepBackend::Exact
          ? "exact"
          : (config.backend == SweepBackend::Sampled ? "sampled" : "noisy");
  return json{{"classifier", kind},
              {"copies", config.copies},
              {"theta_start", config.theta_start},
              {"theta_end", config.theta_end},
              {"theta_step", config.theta_step},
              {"shots", config.shots},
              {"seed", config.seed},
              {"w2", config.w2},
              {"backend", backend},
              {"device", config.device_path}};
}

SweepConfig config_from_json(const json &j) {
  SweepConfig config;
  const std::string kind = j.at("classifier").get<std::string>();
  if (kind == "hadamard")
    config.classifier = ClassifierKind::Hadamard;
  else if (kind == "swaptest")
    config.classifier = ClassifierKind::SwapTest;
  else if (kind == "forking")
    config.classifier = ClassifierKind::SwapTestForking;
  else
    throw Error("unknown classifier '" + kind + "'");
  config.copies = j.at("copies").get<int>();
  config.theta_start = j.at("theta_start").get<double>();
  config.theta_end = j.at("theta_end").get<double>();
  config.theta_step = j.at("theta_step").get<double>();
  config.shots = j.at("shots").get<std::uint64_t>();
  config.seed = j.at("seed").get<std::uint64_t>();
  config.w2 = j.at("w2").get<double>();
  const std::string backend = j.at("backend").get<std::string>();
  if (backend == "exact")
    config.backend = SweepBackend::Exact;
  else if (backend == "sampled")
    config.backend = SweepBackend::Sampled;
  else if (backend == "noisy")
    config.backend = SweepBackend::Noisy;
  else
    throw Error("unknown backend '" + backend + "'");
  config.device_path = j.value("device", "");
  return config;
}

} // namespace

std::string sweep_to_json(const SweepResult &result) {
  json j;
  j["config"] = config_to_json(result.config);
  j["timestamp"] = result.timestamp;
  json rows = json::array();
  for (const auto &row : result.rows)
    rows.push_back({{"theta", row.theta},
                    {"expectation", row.expectation},
                    {"c00", row.c00},
                    {"c01", row.c01},
                    {"c10", row.c10},
                    {"c11", row.c11},
                    {"shots", row.shots}});
  j["rows"] = std::move(rows);
  return j.dump(2);
}

SweepResult sweep_from_json(const std::string &text) {
  json j = json::parse(text);
  SweepResult result;
  result.config = config_from_json(j.at("config"));
  result.timestamp = j.value("timestamp", "");
  for (const auto &r : j.at("rows")) {
    SweepRow row;
    row.theta = r.at("theta").get<double>();
    row.expectation = r.at("expectation").get<double>();
    row.c00 = r.at("c00").get<std::uint64_t>();
    row.c01 = r.at("c01").get<std::uint64_t>();
    row.c10 = r.at("c10").get<std::uint64_t>();
    row.c11 = r.at("c11").get<std::uint64_t>();
    row.shots = r.at("shots").get<std::uint64_t>();
    result.rows.push_back(row);
  }
  return result;
}

SweepResult sweep_from_csv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw Error("empty CSV document");
  if (line != "theta,expectation,c00,c01,c10,c11,shots")
    throw Error("unexpected CSV header: " + line);
  SweepResult result;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    SweepRow row;
    unsigned long long c00, c01, c10, c11, shots;
    if (std::sscanf(line.c_str(), "%lf,%lf,%llu,%llu,%llu,%llu,%llu",
                    &row.theta, &row.expectation, &c00, &c01, &c10, &c11,
                    &shots) != 7)
      throw Error("malformed CSV row: " + line);
    row.c00 = c00;
    row.c01 = c01;
    row.c10 = c10;
    row.c11 = c11;
    row.shots = shots;
    result.rows.push_back(row);
  }
  return result;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("cannot write file: " + path);
  out << content;
  if (!out)
    throw Error("write failed: " + path);
}

} // namespace stc
