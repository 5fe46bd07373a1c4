#ifndef NWS_REFSOLVER_HPP
#define NWS_REFSOLVER_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nws/field.hpp"
#include "nws/params.hpp"

namespace nws {

struct BlowUpError : std::runtime_error {
  double time;
  explicit BlowUpError(double t) : std::runtime_error("solution exceeded the blow-up guard"), time(t) {}
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Field> states;
  bool blew_up = false;
  std::optional<double> blow_up_time;
};

// u_t - nu u_xx + alpha u - epsilon u^n, with u_t by central differences on
// the handle and u_xx by spectral differentiation. fd_step <= 0 picks the
// default 1e-5 * max(t, 1).
Field pde_residual(const std::function<Field(double)>& u, double t, const NwsParams& p, double fd_step = 0.0);

// One ETD2RK step: the linear part exp((-4 pi^2 nu s^2 - alpha) dt) is exact,
// the nonlinear term gets a second-order predictor-corrector. Exact steady
// states (0 and u*) are fixed points for any dt.
Field step(const Field& state, double t, double dt, const NwsParams& p);

// Repeated stepping; states recorded every `record_stride` steps (endpoint
// always included). Blow-up truncates the trajectory instead of throwing.
Trajectory solve(const Field& initial, double t_end, double dt, const NwsParams& p, int record_stride = 1);

// Spectral second derivative (shared by pde_residual and tests).
Field second_derivative(const Field& f);

}  // namespace nws

#endif
