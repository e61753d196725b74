// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stc/resources.hpp"
#include "stc/serialize.hpp"
#include "stc/sweep.hpp"

namespace {

using namespace stc;

std::vector<int> parse_copies_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::stoi(item));
  if (out.empty())
    throw Error("empty copies list");
  return out;
}

void emit(const std::string &content, const std::string &out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

int run(int argc, char **argv) {
  CLI::App app{"swap-test classifier simulator"};
  app.require_subcommand(1);

  // sweep
  auto *sweep_cmd =
      app.add_subcommand("sweep", "classification curve over theta");
  SweepConfig config;
  std::string classifier = "swaptest";
  std::string backend = "exact";
  std::string out_path, format = "csv";
  sweep_cmd->add_option("--classifier", classifier, "hadamard|swaptest|forking")
      ->check(CLI::IsMember({"hadamard", "swaptest", "forking"}));
  sweep_cmd->add_option("--copies", config.copies, "data copies n");
  sweep_cmd->add_option("--theta-start", config.theta_start, "grid start");
  sweep_cmd->add_option("--theta-end", config.theta_end,
                        "grid end (exclusive)");
  sweep_cmd->add_option("--theta-step", config.theta_step, "grid step");
  sweep_cmd->add_option("--shots", config.shots, "shots per theta");
  sweep_cmd->add_option("--seed", config.seed, "base RNG seed");
  sweep_cmd->add_option("--w2", config.w2, "weight of the second point");
  sweep_cmd->add_option("--backend", backend, "exact|sampled|noisy")
      ->check(CLI::IsMember({"exact", "sampled", "noisy"}));
  sweep_cmd->add_option("--device", config.device_path,
                        "device calibration JSON (noisy backend)");
  sweep_cmd->add_option("--jobs", config.jobs, "worker threads (0 = auto)");
  sweep_cmd->add_option("--out", out_path, "output path (default stdout)");
  sweep_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  // fit
  auto *fit_cmd = app.add_subcommand("fit", "fit the reference model to a "
                                            "sweep CSV");
  std::string fit_csv;
  fit_cmd->add_option("csv", fit_csv, "sweep CSV path")->required();

  // resources
  auto *res_cmd =
      app.add_subcommand("resources", "qubit/Toffoli/CNOT cost estimate");
  std::int64_t res_n = 1, res_m = 0, res_dim = 0;
  res_cmd->add_option("--copies", res_n, "data copies n");
  res_cmd->add_option("-M,--points", res_m, "number of training points")
      ->required();
  res_cmd->add_option("-N,--features", res_dim, "feature dimension")
      ->required();

  // sharpen
  auto *sharpen_cmd =
      app.add_subcommand("sharpen", "analytic kernel curves for several n");
  std::string copies_list = "1,10,100";
  double sh_step = 0.1, sh_w2 = 0.5;
  std::string sh_out;
  sharpen_cmd->add_option("--copies", copies_list, "comma-separated n values");
  sharpen_cmd->add_option("--theta-step", sh_step, "grid step");
  sharpen_cmd->add_option("--w2", sh_w2, "weight of the second point");
  sharpen_cmd->add_option("--out", sh_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (*sweep_cmd) {
    config.classifier = classifier == "hadamard"
                            ? ClassifierKind::Hadamard
                            : (classifier == "swaptest"
                                   ? ClassifierKind::SwapTest
                                   : ClassifierKind::SwapTestForking);
    config.backend = backend == "exact"
                         ? SweepBackend::Exact
                         : (backend == "sampled" ? SweepBackend::Sampled
                                                 : SweepBackend::Noisy);
    std::optional<DeviceParams> device;
    if (config.backend == SweepBackend::Noisy) {
      if (config.device_path.empty())
        throw Error("the noisy backend needs --device <json>");
      device = load_device(config.device_path);
    }
    SweepResult result = sweep(config, device);
    emit(format == "csv" ? sweep_to_csv(result) : sweep_to_json(result),
         out_path);
    return 0;
  }

  if (*fit_cmd) {
    SweepResult result = sweep_from_csv(read_file(fit_csv));
    FitResult fr = fit_sweep(result);
    nlohmann::json j{{"amplitude", fr.amplitude},
                     {"phase_shift", fr.phase_shift},
                     {"w2", fr.w2},
                     {"residual_norm", fr.residual_norm},
                     {"iterations", fr.iterations}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*res_cmd) {
    ResourceEstimate est = estimate(res_n, res_m, res_dim);
    nlohmann::json j{
        {"qubits", est.qubits}, {"toffoli", est.toffoli}, {"cnot", est.cnot}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (*sharpen_cmd) {
    auto n_list = parse_copies_list(copies_list);
    SweepConfig grid_cfg;
    grid_cfg.theta_step = sh_step;
    auto thetas = theta_grid(grid_cfg);
    SharpeningTable table = sharpening_curves(n_list, thetas, sh_w2);
    std::string csv = "theta";
    for (int n : n_list)
      csv += ",expectation_n" + std::to_string(n);
    csv += '\n';
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      csv += format_double(thetas[j]);
      for (std::size_t i = 0; i < n_list.size(); ++i)
        csv += ',' + format_double(table.curves[i][j]);
      csv += '\n';
    }
    emit(csv, sh_out);
    return 0;
  }

  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception &e) {
    nlohmann::json err{{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
