#ifndef NWS_GRID_HPP
#define NWS_GRID_HPP

#include <cstddef>
#include <stdexcept>

namespace nws {

// Uniform periodic grid on [-length/2, length/2). n_points must be a power
// of two so the FFT path never needs padding.
struct Grid {
  std::size_t n_points;
  double length;
  double spacing;

  Grid(std::size_t n, double len) : n_points(n), length(len), spacing(len / static_cast<double>(n)) {
    if (n < 2 || (n & (n - 1)) != 0)
      throw std::invalid_argument("Grid: n_points must be a power of two >= 2");
    if (!(len > 0.0))
      throw std::invalid_argument("Grid: length must be positive");
  }

  double x(std::size_t i) const { return (static_cast<double>(i) - static_cast<double>(n_points) / 2.0) * spacing; }

  // index of the x = 0 sample
  std::size_t zero_index() const { return n_points / 2; }

  bool operator==(const Grid& o) const { return n_points == o.n_points && length == o.length; }
};

// Frequency dual of a Grid: s_k = k/length for k in [-n/2, n/2).
struct SpectralGrid {
  std::size_t n_points;
  double length;       // spatial length of the dual grid
  double s_spacing;    // 1/length

  explicit SpectralGrid(const Grid& g) : n_points(g.n_points), length(g.length), s_spacing(1.0 / g.length) {}

  double s(std::size_t k) const { return (static_cast<double>(k) - static_cast<double>(n_points) / 2.0) * s_spacing; }

  std::size_t zero_index() const { return n_points / 2; }

  bool operator==(const SpectralGrid& o) const { return n_points == o.n_points && length == o.length; }
};

}  // namespace nws

#endif
