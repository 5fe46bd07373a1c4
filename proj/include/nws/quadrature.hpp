#ifndef NWS_QUADRATURE_HPP
#define NWS_QUADRATURE_HPP

#include <functional>

namespace nws {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;
};

// Globally adaptive Gauss-Kronrod (G7, K15): repeatedly bisects the interval
// with the largest error until the summed estimate meets
// max(abs_tol, rel_tol * |value|) or the interval budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, double rel_tol = 1e-11,
                     double abs_tol = 1e-300, int max_intervals = 2000);

}  // namespace nws

#endif
