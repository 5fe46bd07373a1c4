#ifndef NWS_CODOMAIN_HPP
#define NWS_CODOMAIN_HPP

#include <stdexcept>
#include <vector>

#include "nws/field.hpp"
#include "nws/params.hpp"
#include "nws/quadrature.hpp"
#include "nws/report.hpp"

namespace nws {

// Thrown when the Bernoulli solution hits a pole (or an even-root branch
// would go complex).
struct BernoulliPoleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Branch locus of the spectral closed form: the erf argument changes sign at
// s_star = sqrt(alpha / (2 pi^2 nu)); beta(s) = alpha - 2 pi^2 nu s^2.
struct BranchPoints {
  double s_star;

  explicit BranchPoints(const NwsParams& p);
  double beta(double s) const { return alpha_ - two_pi2_nu_ * s * s; }

 private:
  double alpha_;
  double two_pi2_nu_;
};

// Integrand of the codomain Bernoulli solution's time integral:
// e^{-alpha (n-1) t} g^{-1} (g * ... * g), with n Gaussian factors. The
// k-fold self-convolution of g has a closed Gaussian form for every n.
double bernoulli_integrand(double s, double t, const NwsParams& p);

// Spectral Bernoulli solution with the time integral done by adaptive
// quadrature (t = tau^2 kills the 1/sqrt(t) endpoint). Throws
// BernoulliPoleError when the base of the power drops to <= 0.
double general_solution(double s, double t, const NwsParams& p);

// n = 2 closed form: F = 1 / (1 + eps * erf(sqrt(t beta)) / (2 sqrt(2) sqrt(nu beta))),
// real for all real s. beta < 0 goes through the erfi branch in log space;
// |beta t| < 1e-8 goes through a short series, so the branch point is a
// removable crossing.
double closed_form_n2(double s, double t, const NwsParams& p);

// The erf term of the denominator above (without the epsilon factor).
double erf_term_n2(double s, double t, const NwsParams& p);

// Closed form of the n-factor self-convolution of the spectral kernel.
double serial_kernel_convolution(double s, double t, const NwsParams& p, int factors);

// Compares erf_term_n2 against adaptive quadrature of bernoulli_integrand at
// every (s, t) pair. residual = max relative deviation.
ClaimReport verify_erf_formula(const NwsParams& p, const std::vector<double>& s_samples,
                               const std::vector<double>& t_samples);

// Residual of the codomain ODE at (s, t), with F' from central differences on
// general_solution. Zero (up to finite-difference error) iff the closed form
// actually solves the transformed equation.
double bernoulli_ode_residual(const NwsParams& p, double s, double t, double fd_step = 1e-5);

struct InvertOutcome {
  Field u;
  QuadResult quad;
  ClaimReport report;
};

// Inverse transform of an even real spectral profile:
// u(x) = 2 integral_0^{s_max} F(s) cos(2 pi s x) ds, adaptive, split at
// `split` (pass 0 to skip the split).
Field invert_profile(const std::function<double(double)>& F, const Grid& grid, double split, double s_max,
                     QuadResult& accumulated, double rel_tol = 1e-11);

// Numerical check of the null-solution claim: inverse-transforms the n = 2
// closed form on `grid` and judges the peak magnitude against the quadrature
// error estimate.
InvertOutcome invert_solution(const NwsParams& p, double t, const Grid& grid, double support_factor = 10.0,
                              double refute_factor = 100.0);

}  // namespace nws

#endif
