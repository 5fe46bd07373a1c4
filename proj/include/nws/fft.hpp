#ifndef NWS_FFT_HPP
#define NWS_FFT_HPP

#include <complex>
#include <vector>

namespace nws::detail {

// In-place radix-2 Cooley-Tukey. a.size() must be a power of two.
// inverse=true applies the conjugate transform and divides by N.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace nws::detail

#endif
