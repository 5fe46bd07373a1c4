#ifndef NWS_CONVOLVE_HPP
#define NWS_CONVOLVE_HPP

#include "nws/field.hpp"
#include "nws/report.hpp"

namespace nws {

// Periodic convolution by direct quadrature, (f*g)(x_i) = sum_j f_j g_{i-j} dx.
// O(N^2); serves as the independent oracle for the FFT engine.
Field convolve_direct(const Field& f, const Field& g);

// Same contract, via the convolution theorem.
Field convolve_fft(const Field& f, const Field& g);

// Convolution over the frequency grid (used by the codomain/Fujita paths,
// where the convolution variable is s).
SpectralField convolve_fft(const SpectralField& F, const SpectralField& G);

// g * g * ... * g with k factors (k-1 convolution operators). k = 1 is g.
Field serial_self_convolve(const Field& g, int k);
SpectralField serial_self_convolve(const SpectralField& g, int k);

// Measures the residuals of (f*g)^n = (f*g^n) = (f^n*g). Powers are taken
// pointwise. The identity's validity is what is under test; nothing here
// assumes it holds.
ClaimReport check_exponent_property(const Field& f, const Field& g, int n);

// Measures the residuals of h (f*g) = (h f * g) = (f * h g).
ClaimReport check_scalar_distribution(const Field& h, const Field& f, const Field& g);

// elementwise power
Field pointwise_pow(const Field& f, int n);

}  // namespace nws

#endif
