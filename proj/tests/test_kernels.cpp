#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nws/kernels.hpp"

using namespace nws;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("heat kernel normalization constant") {
  NwsParams p(1.0 / (4.0 * kPi), 1.0, 1.0, 2);
  CHECK(heat_kernel(0.0, 1.0, p) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("heat kernel has unit mass on an adequate domain") {
  NwsParams p(1.0, 1.0, 1.0, 2);
  for (double t : {0.05, 0.3, 1.0}) {
    Grid g(512, 64.0);
    double mass = 0.0;
    for (std::size_t i = 0; i < g.n_points; ++i) mass += heat_kernel(g.x(i), t, p) * g.spacing;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("heat kernel is even and rejects t <= 0") {
  NwsParams p(0.7, 1.0, 1.0, 2);
  for (double x : {0.1, 0.9, 2.5}) CHECK(heat_kernel(x, 0.4, p) == doctest::Approx(heat_kernel(-x, 0.4, p)));
  CHECK_THROWS_AS(heat_kernel(0.0, 0.0, p), std::domain_error);
  CHECK_THROWS_AS(heat_kernel(0.0, -1.0, p), std::domain_error);
}

TEST_CASE("spectral kernel basics and semigroup") {
  NwsParams p(0.8, 1.0, 1.0, 2);
  for (double t : {0.0, 0.5, 2.0}) CHECK(spectral_kernel(0.0, t, p) == 1.0);
  for (double s : {0.1, 0.5, 1.3})
    CHECK(spectral_kernel(s, 0.3, p) * spectral_kernel(s, 0.9, p) ==
          doctest::Approx(spectral_kernel(s, 1.2, p)).epsilon(1e-12));
}

TEST_CASE("spectral kernel matches the FFT of the sampled heat kernel") {
  NwsParams p(1.0, 1.0, 1.0, 2);
  const double t = 0.1;
  Grid g(512, 32.0);
  Field G = Field::sample(g, [&](double x) { return heat_kernel(x, t, p); }, t);
  SpectralField Gs = forward_fourier(G);
  for (std::size_t k = 0; k < Gs.sgrid.n_points; ++k) {
    const double s = Gs.sgrid.s(k);
    if (std::abs(s) > 2.0) continue;  // beyond decay, both sides ~ 0
    CHECK(std::abs(Gs.values[k].real() - spectral_kernel(s, t, p)) < 1e-8);
  }
  CHECK(std::abs(Gs.values[0].imag()) < 1e-10);
  // spot check at a frequency that lies exactly on the grid
  const double s0 = 0.5;
  std::size_t k0 = 0;
  for (std::size_t k = 0; k < Gs.sgrid.n_points; ++k)
    if (std::abs(Gs.sgrid.s(k) - s0) < 1e-12) k0 = k;
  CHECK(std::abs(Gs.values[k0].real() - spectral_kernel(s0, t, p)) < 1e-8);
}

TEST_CASE("linear propagation of the delta is the damped kernel") {
  NwsParams p(1.0, 0.7, 1.0, 2);
  Grid g(256, 32.0);
  const double t = 0.3;
  Field u = linear_propagate(discrete_delta(g), t, p);
  for (std::size_t i = 0; i < g.n_points; ++i)
    CHECK(std::abs(u.values[i] - std::exp(-p.alpha * t) * heat_kernel(g.x(i), t, p)) < 1e-8);
}

TEST_CASE("linear propagation of a Gaussian has the closed Gaussian form") {
  NwsParams p(1.0, 1.0, 1.0, 2);
  Grid g(256, 32.0);
  const double t = 0.25;
  Field f0 = Field::sample(g, [](double x) { return std::exp(-kPi * x * x); });
  Field u = linear_propagate(f0, t, p);
  // e^{-a x^2} * e^{-b x^2} = sqrt(pi/(a+b)) e^{-ab/(a+b) x^2}; here a = pi,
  // b = 1/(4 nu t), and the kernel carries 1/sqrt(4 pi nu t)
  const double a = kPi;
  const double b = 1.0 / (4.0 * p.nu * t);
  const double amp = std::sqrt(kPi / (a + b)) / std::sqrt(4.0 * kPi * p.nu * t) * std::exp(-p.alpha * t);
  const double width = a * b / (a + b);
  for (std::size_t i = 0; i < g.n_points; ++i)
    CHECK(std::abs(u.values[i] - amp * std::exp(-width * g.x(i) * g.x(i))) < 1e-8);
}

TEST_CASE("propagation contracts the sup norm by at least the damping factor") {
  NwsParams p(0.5, 1.3, 1.0, 2);
  Grid g(128, 16.0);
  Field f0 = Field::sample(g, [](double x) { return std::exp(-x * x) * std::cos(x); });
  for (double t : {0.1, 0.5, 1.5})
    CHECK(linear_propagate(f0, t, p).max_abs() <= std::exp(-p.alpha * t) * f0.max_abs() * (1.0 + 1e-12));
}

TEST_CASE("propagator semigroup") {
  NwsParams p(1.0, 0.4, 1.0, 2);
  Grid g(256, 32.0);
  Field f0 = Field::sample(g, [](double x) { return std::exp(-kPi * x * x); });
  Field two_steps = linear_propagate(linear_propagate(f0, 0.2, p), 0.35, p);
  Field one_step = linear_propagate(f0, 0.55, p);
  for (std::size_t i = 0; i < g.n_points; ++i)
    CHECK(std::abs(two_steps.values[i] - one_step.values[i]) < 1e-8);
}

TEST_CASE("params validation and gamma convention") {
  CHECK_THROWS_AS(NwsParams(0.0, 1.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(NwsParams(1.0, 0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(NwsParams(1.0, 1.0, 1.0, 1), std::invalid_argument);
  NwsParams p(1.0, 2.0, -0.5, 3);
  CHECK(p.gamma == p.epsilon);
}
