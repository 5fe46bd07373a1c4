#include "nws/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nws {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (!(nu > 0.0)) throw std::invalid_argument("config: nu must be positive");
  if (!(alpha > 0.0)) throw std::invalid_argument("config: alpha must be positive");
  if (n < 2) throw std::invalid_argument("config: n must be >= 2");
  if (n_points < 2 || (n_points & (n_points - 1)) != 0)
    throw std::invalid_argument("config: n_points must be a power of two");
  if (!(length > 0.0)) throw std::invalid_argument("config: length must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be positive");
  if (!(t_end >= dt)) throw std::invalid_argument("config: t_end must be >= dt");
  if (!(quad_tol > 0.0) || !(fd_step > 0.0))
    throw std::invalid_argument("config: tolerances must be positive");
  if (!(support_factor > 0.0) || !(support_factor < refute_factor))
    throw std::invalid_argument("config: need 0 < support_factor < refute_factor");
  for (double t : t_samples)
    if (!(t > 0.0)) throw std::invalid_argument("config: t_samples must be positive");
}

void ExperimentConfig::apply(const std::string& key, const std::string& value) {
  if (key == "nu") nu = std::stod(value);
  else if (key == "alpha") alpha = std::stod(value);
  else if (key == "epsilon") epsilon = std::stod(value);
  else if (key == "n") n = std::stoi(value);
  else if (key == "n_points") n_points = static_cast<std::size_t>(std::stoul(value));
  else if (key == "length") length = std::stod(value);
  else if (key == "t_end") t_end = std::stod(value);
  else if (key == "dt") dt = std::stod(value);
  else if (key == "t_samples") t_samples = parse_list(value);
  else if (key == "quad_tol") quad_tol = std::stod(value);
  else if (key == "fd_step") fd_step = std::stod(value);
  else if (key == "support_factor") support_factor = std::stod(value);
  else if (key == "refute_factor") refute_factor = std::stod(value);
  else if (key == "csv_dir") csv_dir = value;
  else if (key == "report_path") report_path = value;
  else if (key == "init_amplitude") init_amplitude = std::stod(value);
  else throw std::invalid_argument("config: unknown key '" + key + "'");
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) + " is not 'key = value'");
    cfg.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

ExperimentConfig ExperimentConfig::from_overrides(const ExperimentConfig& base,
                                                  const std::vector<std::pair<std::string, std::string>>& overrides) {
  ExperimentConfig cfg = base;
  for (const auto& [k, v] : overrides) cfg.apply(k, v);
  return cfg;
}

}  // namespace nws
