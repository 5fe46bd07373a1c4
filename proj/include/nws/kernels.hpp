#ifndef NWS_KERNELS_HPP
#define NWS_KERNELS_HPP

#include "nws/field.hpp"
#include "nws/params.hpp"

namespace nws {

// Undamped heat kernel G(x,t) = exp(-x^2/(4 nu t)) / sqrt(4 pi nu t).
// The full linear propagator is G e^{-alpha t}; the damping stays a separate
// factor so the spectral kernel below matches it exactly.
double heat_kernel(double x, double t, const NwsParams& p);

// Fourier transform of the heat kernel: g(s,t) = exp(-4 pi^2 nu s^2 t).
double spectral_kernel(double s, double t, const NwsParams& p);

// e^{-alpha t} (f0 * G(.,t)), computed spectrally. Solves the epsilon = 0
// equation with initial data f0.
Field linear_propagate(const Field& f0, double t, const NwsParams& p);

}  // namespace nws

#endif
