#ifndef NWS_CONFIG_HPP
#define NWS_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include "nws/params.hpp"

namespace nws {

// Flat, human-editable experiment configuration. File format is one
// "key = value" pair per line, '#' starts a comment; CLI flags override file
// values key by key.
struct ExperimentConfig {
  // equation constants
  double nu = 1.0;
  double alpha = 1.0;
  double epsilon = 1.0;
  int n = 2;

  // grid
  std::size_t n_points = 256;
  double length = 32.0;

  // time
  double t_end = 1.0;
  double dt = 0.01;
  std::vector<double> t_samples = {0.25, 0.5, 1.0, 2.0};

  // tolerances
  double quad_tol = 1e-11;
  double fd_step = 1e-5;
  double support_factor = 10.0;
  double refute_factor = 100.0;

  // outputs
  std::string csv_dir = ".";
  std::string report_path = "claims.jsonl";

  // initial data for the reference solver: init_amplitude * exp(-pi x^2)
  double init_amplitude = 0.1;

  NwsParams params() const { return NwsParams(nu, alpha, epsilon, n); }

  // Throws std::invalid_argument on out-of-range values.
  void validate() const;

  void apply(const std::string& key, const std::string& value);

  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_overrides(const ExperimentConfig& base,
                                         const std::vector<std::pair<std::string, std::string>>& overrides);
};

}  // namespace nws

#endif
