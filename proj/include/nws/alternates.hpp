#ifndef NWS_ALTERNATES_HPP
#define NWS_ALTERNATES_HPP

#include <functional>
#include <optional>
#include <vector>

#include "nws/field.hpp"
#include "nws/params.hpp"
#include "nws/report.hpp"

namespace nws {

// One explicit-midpoint step of the Fujita-form spectral evolution
// F' = eps g^{n-1} e^{-alpha (n-1) t} (F * ... * F), n factors of F.
SpectralField fujita_step(const SpectralField& F, double t, double dt, const NwsParams& p);

// Separated time factor h(t) with h(0+) = h0. The closed form
// h(t) = h0 / (1 - h0 eps erf(sqrt(alpha t)) / (4 sqrt(nu alpha)))
// has a pole iff h0 eps > 4 sqrt(nu alpha).
struct SeparatedState {
  double h0;
  std::optional<double> blow_up_time;
};

SeparatedState make_separated_state(double h0, const NwsParams& p);
double separated_solution(double t, const SeparatedState& state, const NwsParams& p);

struct UnityConvolutionResult {
  double value;            // trapezoid integral of H over the grid
  double pointwise_spread; // max - min of (1 * H)(s) computed pointwise
  bool decay_warning;      // H does not decay below 1e-12 at the edges
};

// (1 * H)(s) = integral of H ds, an s-independent constant.
UnityConvolutionResult unity_convolution(const SpectralField& H);

// Residual of the full nonlinear equation for the linear ansatz
// u(x,t) = A K(t) G(x,t) e^{-alpha t}. Zero only at A = 0 when eps != 0.
ClaimReport check_linear_ansatz(double A, const std::function<double(double)>& K, const NwsParams& p,
                                const Grid& grid, const std::vector<double>& t_samples);

// Partial sums of the geometric expansion of 1/(1 + A(s,t)) against the
// closed value, A being the eps-scaled erf term of the n = 2 solution.
ClaimReport neumann_series_check(const NwsParams& p, double s, double t, int order);

}  // namespace nws

#endif
