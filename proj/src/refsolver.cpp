#include "nws/refsolver.hpp"

#include <cmath>
#include <numbers>

#include "nws/kernels.hpp"

namespace nws {

namespace {

constexpr double kBlowUpGuard = 1e12;

// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - 1 - z)/z^2, series near zero
double phi1(double z) {
  if (std::abs(z) < 1e-4) return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0));
  return std::expm1(z) / z;
}

double phi2(double z) {
  if (std::abs(z) < 1e-4) return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0));
  return (std::expm1(z) - z) / (z * z);
}

std::vector<double> nonlinear_term(const Field& u, const NwsParams& p) {
  std::vector<double> v(u.values.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.epsilon * std::pow(u.values[i], p.n);
  return v;
}

}  // namespace

Field second_derivative(const Field& f) {
  SpectralField F = forward_fourier(f);
  const double pi = std::numbers::pi;
  for (std::size_t k = 0; k < F.values.size(); ++k) {
    const double s = F.sgrid.s(k);
    F.values[k] *= -4.0 * pi * pi * s * s;
  }
  return inverse_fourier(F);
}

Field pde_residual(const std::function<Field(double)>& u, double t, const NwsParams& p, double fd_step) {
  if (!(t > 0.0)) throw std::domain_error("pde_residual: t must be positive");
  const double h = fd_step > 0.0 ? fd_step : 1e-5 * std::max(t, 1.0);
  const Field u_plus = u(t + h);
  const Field u_minus = u(t - h);
  const Field u_now = u(t);
  const Field u_xx = second_derivative(u_now);

  std::vector<double> r(u_now.values.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double ut = (u_plus.values[i] - u_minus.values[i]) / (2.0 * h);
    r[i] = ut - p.nu * u_xx.values[i] + p.alpha * u_now.values[i] -
           p.epsilon * std::pow(u_now.values[i], p.n);
  }
  return Field(u_now.grid, std::move(r), t);
}

Field step(const Field& state, double t, double dt, const NwsParams& p) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const std::size_t n = state.grid.n_points;
  const double pi = std::numbers::pi;

  SpectralField u_hat = forward_fourier(state);
  SpectralField n_hat = forward_fourier(Field(state.grid, nonlinear_term(state, p), state.time_stamp));

  std::vector<double> ez(n), p1(n), p2(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = u_hat.sgrid.s(k);
    const double L = -4.0 * pi * pi * p.nu * s * s - p.alpha;
    const double z = L * dt;
    ez[k] = std::exp(z);
    p1[k] = phi1(z);
    p2[k] = phi2(z);
  }

  // predictor: a = e^{z} u + dt phi1(z) N(u)
  SpectralField a = u_hat;
  for (std::size_t k = 0; k < n; ++k) a.values[k] = ez[k] * u_hat.values[k] + dt * p1[k] * n_hat.values[k];
  Field ua = inverse_fourier(a);
  if (ua.max_abs() > kBlowUpGuard) throw BlowUpError(t + dt);

  // corrector: u_next = a + dt phi2(z) (N(a) - N(u))
  SpectralField na_hat = forward_fourier(Field(ua.grid, nonlinear_term(ua, p), ua.time_stamp));
  for (std::size_t k = 0; k < n; ++k) a.values[k] += dt * p2[k] * (na_hat.values[k] - n_hat.values[k]);

  Field out = inverse_fourier(a);
  if (out.max_abs() > kBlowUpGuard) throw BlowUpError(t + dt);
  out.time_stamp = state.time_stamp + dt;
  return out;
}

Trajectory solve(const Field& initial, double t_end, double dt, const NwsParams& p, int record_stride) {
  if (!(dt > 0.0) || dt > t_end) throw std::invalid_argument("solve: need 0 < dt <= t_end");
  if (record_stride < 1) throw std::invalid_argument("solve: record_stride must be >= 1");

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(initial);

  const long n_steps = std::lround(t_end / dt);
  Field state = initial;
  double t = 0.0;
  for (long i = 0; i < n_steps; ++i) {
    try {
      state = step(state, t, dt, p);
    } catch (const BlowUpError& e) {
      traj.blew_up = true;
      traj.blow_up_time = e.time;
      return traj;
    }
    t = dt * static_cast<double>(i + 1);
    if ((i + 1) % record_stride == 0 || i + 1 == n_steps) {
      state.time_stamp = t;
      traj.times.push_back(t);
      traj.states.push_back(state);
    }
  }
  return traj;
}

}  // namespace nws
