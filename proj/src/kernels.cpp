#include "nws/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nws {

double heat_kernel(double x, double t, const NwsParams& p) {
  if (!(t > 0.0)) throw std::domain_error("heat_kernel: t must be positive (use discrete_delta for t = 0)");
  const double var = 4.0 * p.nu * t;
  return std::exp(-x * x / var) / std::sqrt(std::numbers::pi * var);
}

double spectral_kernel(double s, double t, const NwsParams& p) {
  if (t < 0.0) throw std::domain_error("spectral_kernel: t must be nonnegative");
  const double pi = std::numbers::pi;
  return std::exp(-4.0 * pi * pi * p.nu * s * s * t);
}

Field linear_propagate(const Field& f0, double t, const NwsParams& p) {
  if (!(t > 0.0)) throw std::domain_error("linear_propagate: t must be positive");
  SpectralField F = forward_fourier(f0);
  for (std::size_t k = 0; k < F.values.size(); ++k) F.values[k] *= spectral_kernel(F.sgrid.s(k), t, p);
  Field out = inverse_fourier(F);
  const double damp = std::exp(-p.alpha * t);
  for (double& v : out.values) v *= damp;
  out.time_stamp = f0.time_stamp + t;
  return out;
}

}  // namespace nws
