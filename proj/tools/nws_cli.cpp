#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nws/codomain.hpp"
#include "nws/csv.hpp"
#include "nws/kernels.hpp"
#include "nws/refsolver.hpp"
#include "nws/suite.hpp"

namespace {

nws::ExperimentConfig load_config(const std::string& config_path, const std::vector<std::string>& params,
                                  const std::string& out_dir) {
  nws::ExperimentConfig cfg;
  if (!config_path.empty()) cfg = nws::ExperimentConfig::from_file(config_path);
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
    cfg.apply(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (!out_dir.empty()) cfg.csv_dir = out_dir;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for the convolution-substitution solution of the NWS equation"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global flags after the subcommand too

  std::string config_path;
  std::vector<std::string> params;
  std::string out_dir;
  app.add_option("--config", config_path, "config file (key = value lines)")->capture_default_str();
  app.add_option("--param", params, "override a config key, e.g. --param epsilon=0.5")->take_all();
  app.add_option("--out", out_dir, "output directory (overrides csv_dir)");

  auto* claims_cmd = app.add_subcommand("claims", "run the full claim suite and write a JSONL report");
  auto* sweep_cmd = app.add_subcommand("sweep", "export a quantity as CSV for plotting");
  std::string quantity = "F_of_s";
  sweep_cmd->add_option("--quantity", quantity, "F_of_s | u_of_x | trajectory")->capture_default_str();
  auto* simulate_cmd = app.add_subcommand("simulate", "run the reference solver and export the trajectory");
  auto* kernel_cmd = app.add_subcommand("kernel", "sample the spatial and spectral kernels at a time");
  double kernel_t = 1.0;
  kernel_cmd->add_option("--t", kernel_t, "evaluation time")->capture_default_str();
  auto* invert_cmd = app.add_subcommand("invert", "inverse-transform the spectral solution and judge the null claim");

  CLI11_PARSE(app, argc, argv);

  try {
    const nws::ExperimentConfig cfg = load_config(config_path, params, out_dir);
    namespace fs = std::filesystem;

    if (claims_cmd->parsed()) {
      const auto reports = nws::run_claim_suite(cfg);
      const std::string jsonl = nws::reports_to_jsonl(reports);
      fs::path report_path(cfg.report_path);
      if (report_path.is_relative() && !cfg.csv_dir.empty()) report_path = fs::path(cfg.csv_dir) / report_path;
      fs::create_directories(report_path.parent_path().empty() ? "." : report_path.parent_path().string());
      std::ofstream os(report_path);
      if (!os) throw std::runtime_error("cannot open report path: " + report_path.string());
      os << jsonl;
      for (const auto& r : reports)
        std::cout << r.claim_id << ": " << nws::to_string(r.verdict) << " (residual=" << r.residual
                  << ", error=" << r.error_estimate << ")\n";
      std::cout << "report written to " << report_path.string() << "\n";
      return 0;
    }

    if (sweep_cmd->parsed()) {
      nws::SweepQuantity q;
      if (quantity == "F_of_s") q = nws::SweepQuantity::FOfS;
      else if (quantity == "u_of_x") q = nws::SweepQuantity::UOfX;
      else if (quantity == "trajectory") q = nws::SweepQuantity::Trajectory;
      else throw std::invalid_argument("unknown quantity: " + quantity);
      std::cout << nws::export_sweep(cfg, q) << "\n";
      return 0;
    }

    if (simulate_cmd->parsed()) {
      std::cout << nws::export_sweep(cfg, nws::SweepQuantity::Trajectory) << "\n";
      return 0;
    }

    if (kernel_cmd->parsed()) {
      const nws::NwsParams p = cfg.params();
      const nws::Grid g(cfg.n_points, cfg.length);
      const nws::Field G = nws::Field::sample(
          g, [&](double x) { return nws::heat_kernel(x, kernel_t, p); }, kernel_t);
      const nws::SpectralGrid sg{g};
      const nws::SpectralField gs = nws::SpectralField::sample(
          sg, [&](double s) { return std::complex<double>(nws::spectral_kernel(s, kernel_t, p), 0.0); }, kernel_t);
      fs::create_directories(cfg.csv_dir);
      const std::string gpath = (fs::path(cfg.csv_dir) / "kernel_spatial.csv").string();
      const std::string spath = (fs::path(cfg.csv_dir) / "kernel_spectral.csv").string();
      nws::write_csv_file(gpath, G);
      nws::write_csv_file(spath, gs);
      std::cout << gpath << "\n" << spath << "\n";
      return 0;
    }

    if (invert_cmd->parsed()) {
      const nws::Grid g(cfg.n_points, cfg.length);
      const nws::InvertOutcome out =
          nws::invert_solution(cfg.params(), cfg.t_end, g, cfg.support_factor, cfg.refute_factor);
      fs::create_directories(cfg.csv_dir);
      const std::string upath = (fs::path(cfg.csv_dir) / "inverse_transform.csv").string();
      nws::write_csv_file(upath, out.u);
      std::cout << nws::report_to_json(out.report) << "\n";
      std::cout << upath << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
