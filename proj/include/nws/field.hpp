#ifndef NWS_FIELD_HPP
#define NWS_FIELD_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "nws/grid.hpp"

namespace nws {

// Real samples of a function on a Grid at a fixed time. Construction rejects
// non-finite samples so downstream code never sees NaN/Inf.
struct Field {
  Grid grid;
  std::vector<double> values;
  double time_stamp;

  Field(Grid g, std::vector<double> v, double t = 0.0) : grid(g), values(std::move(v)), time_stamp(t) {
    if (values.size() != grid.n_points)
      throw std::invalid_argument("Field: values.size() != grid.n_points");
    if (t < 0.0) throw std::invalid_argument("Field: negative time_stamp");
    for (double x : values)
      if (!std::isfinite(x)) throw std::invalid_argument("Field: non-finite sample");
  }

  static Field sample(const Grid& g, const std::function<double(double)>& f, double t = 0.0) {
    std::vector<double> v(g.n_points);
    for (std::size_t i = 0; i < g.n_points; ++i) v[i] = f(g.x(i));
    return Field(g, std::move(v), t);
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : values) m = std::max(m, std::abs(x));
    return m;
  }
};

// Complex samples on the frequency dual of a Grid.
struct SpectralField {
  SpectralGrid sgrid;
  std::vector<std::complex<double>> values;
  double time_stamp;

  SpectralField(SpectralGrid sg, std::vector<std::complex<double>> v, double t = 0.0)
      : sgrid(sg), values(std::move(v)), time_stamp(t) {
    if (values.size() != sgrid.n_points)
      throw std::invalid_argument("SpectralField: values.size() != sgrid.n_points");
    if (t < 0.0) throw std::invalid_argument("SpectralField: negative time_stamp");
    for (const auto& z : values)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("SpectralField: non-finite sample");
  }

  static SpectralField sample(const SpectralGrid& sg, const std::function<std::complex<double>(double)>& f,
                              double t = 0.0) {
    std::vector<std::complex<double>> v(sg.n_points);
    for (std::size_t k = 0; k < sg.n_points; ++k) v[k] = f(sg.s(k));
    return SpectralField(sg, std::move(v), t);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    return m;
  }
};

// Discrete stand-in for the unit-mass delta: 1/spacing at the x = 0 sample.
Field discrete_delta(const Grid& g);

// F(s) ~ integral of f(x) e^{-2 pi i s x} dx, ordinary-frequency convention,
// computed as a spacing-weighted FFT. Exact inverse pair on the grid.
SpectralField forward_fourier(const Field& f);
Field inverse_fourier(const SpectralField& F);

}  // namespace nws

#endif
