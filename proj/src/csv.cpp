#include "nws/csv.hpp"

#include <fstream>
#include <stdexcept>

namespace nws {

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os.precision(17);
  return os;
}

}  // namespace

void write_csv(std::ostream& os, const Field& f) {
  os.precision(17);
  os << "# time_stamp=" << f.time_stamp << "\n";
  os << "x,value_re,value_im\n";
  for (std::size_t i = 0; i < f.grid.n_points; ++i) os << f.grid.x(i) << "," << f.values[i] << ",0\n";
}

void write_csv(std::ostream& os, const SpectralField& F) {
  os.precision(17);
  os << "# time_stamp=" << F.time_stamp << "\n";
  os << "s,value_re,value_im\n";
  for (std::size_t k = 0; k < F.sgrid.n_points; ++k)
    os << F.sgrid.s(k) << "," << F.values[k].real() << "," << F.values[k].imag() << "\n";
}

void write_csv(std::ostream& os, const Trajectory& traj) {
  os.precision(17);
  os << "# blew_up=" << (traj.blew_up ? "true" : "false") << "\n";
  os << "t,x,u\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Field& f = traj.states[k];
    for (std::size_t i = 0; i < f.grid.n_points; ++i)
      os << traj.times[k] << "," << f.grid.x(i) << "," << f.values[i] << "\n";
  }
}

void write_csv_file(const std::string& path, const Field& f) {
  auto os = open_or_throw(path);
  write_csv(os, f);
}

void write_csv_file(const std::string& path, const SpectralField& F) {
  auto os = open_or_throw(path);
  write_csv(os, F);
}

void write_csv_file(const std::string& path, const Trajectory& traj) {
  auto os = open_or_throw(path);
  write_csv(os, traj);
}

}  // namespace nws
