#ifndef NWS_CSV_HPP
#define NWS_CSV_HPP

#include <ostream>
#include <string>

#include "nws/field.hpp"
#include "nws/refsolver.hpp"

namespace nws {

// Fields serialize as "x,value_re,value_im" (spectral: "s,value_re,value_im")
// with the time stamp in a header comment.
void write_csv(std::ostream& os, const Field& f);
void write_csv(std::ostream& os, const SpectralField& F);

// Trajectory rows are "t,x,u".
void write_csv(std::ostream& os, const Trajectory& traj);

void write_csv_file(const std::string& path, const Field& f);
void write_csv_file(const std::string& path, const SpectralField& F);
void write_csv_file(const std::string& path, const Trajectory& traj);

}  // namespace nws

#endif
