#include "nws/field.hpp"

#include "nws/fft.hpp"

namespace nws {

namespace {

// The grid is centered (x_j = (j - N/2) dx, s_m = (m - N/2) ds), so the plain
// DFT picks up alternating signs on both sides plus a global factor
// (-1)^(N/2) from the cross term.
double center_phase(std::size_t n) { return ((n / 2) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

Field discrete_delta(const Grid& g) {
  std::vector<double> v(g.n_points, 0.0);
  v[g.zero_index()] = 1.0 / g.spacing;
  return Field(g, std::move(v), 0.0);
}

SpectralField forward_fourier(const Field& f) {
  const std::size_t n = f.grid.n_points;
  std::vector<std::complex<double>> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = (j % 2 == 0 ? f.values[j] : -f.values[j]);
  detail::fft_inplace(a, false);
  const double p0 = center_phase(n) * f.grid.spacing;
  for (std::size_t m = 0; m < n; ++m) a[m] *= (m % 2 == 0 ? p0 : -p0);
  return SpectralField(SpectralGrid(f.grid), std::move(a), f.time_stamp);
}

Field inverse_fourier(const SpectralField& F) {
  const std::size_t n = F.sgrid.n_points;
  std::vector<std::complex<double>> a(n);
  for (std::size_t m = 0; m < n; ++m) a[m] = (m % 2 == 0 ? F.values[m] : -F.values[m]);
  detail::fft_inplace(a, true);
  const Grid g(n, F.sgrid.length);
  const double p0 = center_phase(n) / g.spacing;  // ds * N = 1/dx
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = (j % 2 == 0 ? p0 : -p0) * a[j].real();
  return Field(g, std::move(v), F.time_stamp);
}

}  // namespace nws
